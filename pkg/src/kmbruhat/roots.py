"""Real roots with their coroots, positivity and bounded enumeration."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .errors import NotARealRoot
from .root_datum import RootDatum, Vector, pair

__all__ = [
    "Root",
    "simple_root",
    "is_positive",
    "coroot",
    "negate",
    "reflect",
    "root_height",
    "positive_part",
    "make_root",
    "root_from_vector",
    "enumerate_roots",
    "positive_roots_if_finite",
    "expansion_sign",
]

# Above this many positive roots the closure is treated as infinite.
_FINITE_ROOT_CAP = 5000


def expansion_sign(coeffs: Vector) -> Optional[int]:
    """+1 / -1 for a nonzero coefficient vector of constant sign, 0 for zero, None if mixed."""
    pos = any(c > 0 for c in coeffs)
    neg = any(c < 0 for c in coeffs)
    if pos and neg:
        return None
    return 1 if pos else (-1 if neg else 0)


@dataclass(frozen=True, order=True)
class Root:
    """A real root: vector in X, its coroot in Y and its simple-root coefficients."""

    root_vec: Vector
    coroot_vec: Vector
    simple_expansion: Vector

    @property
    def height(self) -> int:
        """Root height: the sum of the simple-root coefficients."""
        return sum(self.simple_expansion)

    @property
    def positive(self) -> bool:
        return self.simple_expansion[_first_nonzero(self.simple_expansion)] > 0

    def __neg__(self) -> "Root":
        return negate(self)

    def sort_key(self) -> tuple:
        return (abs(self.height), self.simple_expansion)


def _first_nonzero(v: Vector) -> int:
    for k, c in enumerate(v):
        if c:
            return k
    raise NotARealRoot("zero vector is not a root")


def simple_root(datum: RootDatum, i: int) -> Root:
    exp = tuple(int(k == i) for k in range(datum.rank))
    return Root(datum.simple_roots[i], datum.simple_coroots[i], exp)


def is_positive(beta: Root) -> bool:
    return beta.positive


def coroot(beta: Root) -> Vector:
    return beta.coroot_vec


def negate(beta: Root) -> Root:
    return Root(
        tuple(-c for c in beta.root_vec),
        tuple(-c for c in beta.coroot_vec),
        tuple(-c for c in beta.simple_expansion),
    )


def positive_part(beta: Root) -> Root:
    """The positive one of beta and -beta."""
    return beta if beta.positive else negate(beta)


def root_height(beta: Root) -> int:
    return beta.height


def reflect(datum: RootDatum, i: int, beta: Root) -> Root:
    """s_i(beta), with coroot s_i(beta^vee)."""
    k = pair(datum.simple_coroots[i], beta.root_vec)
    m = pair(beta.coroot_vec, datum.simple_roots[i])
    a, av = datum.simple_roots[i], datum.simple_coroots[i]
    exp = list(beta.simple_expansion)
    exp[i] -= k
    return Root(
        tuple(x - k * y for x, y in zip(beta.root_vec, a)),
        tuple(x - m * y for x, y in zip(beta.coroot_vec, av)),
        tuple(exp),
    )


def make_root(datum: RootDatum, root_vec: Vector, coroot_vec: Vector) -> Root:
    """Build a Root from explicit vectors, checking sign coherence and <beta^vee, beta> = 2."""
    exp = datum.expand_root(tuple(root_vec))
    if exp is None or not expansion_sign(exp):
        raise NotARealRoot(f"{tuple(root_vec)} is not a signed integer combination of simple roots")
    if pair(coroot_vec, root_vec) != 2:
        raise NotARealRoot("a root and its coroot must pair to 2")
    return Root(tuple(root_vec), tuple(coroot_vec), exp)


def root_from_vector(datum: RootDatum, root_vec: Vector) -> Root:
    """Recover the real root (and its coroot) with the given vector in X.

    A positive non-simple real root has some simple coroot pairing positively
    with it; reflecting there lowers the height.  Descend to a simple root,
    then carry its coroot back up along the same reflections.
    """
    root_vec = tuple(root_vec)
    exp = datum.expand_root(root_vec)
    sign = expansion_sign(exp) if exp is not None else None
    if not sign:
        raise NotARealRoot(f"{root_vec} is not a signed combination of simple roots")
    cur = Root(root_vec, datum.zero(), exp)
    if sign < 0:
        cur = Root(tuple(-c for c in root_vec), datum.zero(), tuple(-c for c in exp))
    path: list[int] = []
    while True:
        if cur.height == 1:
            k = cur.simple_expansion.index(1)
            break
        step = None
        for i in range(datum.rank):
            if pair(datum.simple_coroots[i], cur.root_vec) > 0:
                step = i
                break
        if step is None:
            raise NotARealRoot(f"{root_vec} is not a real root")
        cur = reflect(datum, step, cur)
        if expansion_sign(cur.simple_expansion) != 1:
            raise NotARealRoot(f"{root_vec} is not a real root")
        path.append(step)
    beta = simple_root(datum, k)
    for i in reversed(path):
        beta = reflect(datum, i, beta)
    return beta if sign > 0 else negate(beta)


def enumerate_roots(datum: RootDatum, height_bound: int) -> tuple[Root, ...]:
    """All positive real roots of root height <= height_bound, sorted by (height, expansion).

    Closure under simple reflections from the simple roots, discarding
    anything above the bound.  Complete: every positive root descends to a
    simple root through roots of smaller height.
    """
    if height_bound < 1:
        raise ValueError("height_bound must be >= 1")
    return _closure(datum, height_bound, None)


def _closure(datum: RootDatum, height_bound: Optional[int], count_cap: Optional[int]):
    seen: dict[Vector, Root] = {}
    queue = deque()
    for i in range(datum.rank):
        r = simple_root(datum, i)
        seen[r.root_vec] = r
        queue.append(r)
    while queue:
        beta = queue.popleft()
        for i in range(datum.rank):
            gamma = reflect(datum, i, beta)
            if not gamma.positive or gamma.root_vec in seen:
                continue
            if height_bound is not None and gamma.height > height_bound:
                continue
            seen[gamma.root_vec] = gamma
            if count_cap is not None and len(seen) > count_cap:
                return None
            queue.append(gamma)
    return tuple(sorted(seen.values(), key=Root.sort_key))


_FINITE_CACHE: dict[int, tuple[RootDatum, Optional[tuple[Root, ...]]]] = {}


def positive_roots_if_finite(datum: RootDatum) -> Optional[tuple[Root, ...]]:
    """All positive roots when the root system is finite, else None."""
    hit = _FINITE_CACHE.get(id(datum))
    if hit is not None and hit[0] is datum:
        return hit[1]
    result = _closure(datum, None, _FINITE_ROOT_CAP)
    _FINITE_CACHE[id(datum)] = (datum, result)
    return result
