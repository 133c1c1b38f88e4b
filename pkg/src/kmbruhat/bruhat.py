"""The affine Bruhat order on W+: raising test, comparison, covers, chains.

The order is generated by x < s_a x for positive affine roots a with
x^{-1}(a) positive.  Comparisons are bounded semi-decisions returning
True, False or UNKNOWN.  When the root system is finite every search is
run over all roots and a level range derived from the target length, so
False and cover answers are then certified.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence, Union

from .affine import AffineRoot, AffineWeyl, WPlusElt, format_element
from .errors import KacMoodyError, NotInTitsCone
from .root_datum import Vector, pair
from .roots import Root, enumerate_roots, positive_roots_if_finite
from .weyl import WeylElt

__all__ = [
    "Unknown",
    "UNKNOWN",
    "NotFound",
    "NOT_FOUND",
    "SearchBounds",
    "CoverWitness",
    "CoverCertificate",
    "UpperCovers",
    "ChainReport",
    "Interval",
    "BruhatOrder",
    "SAME_CLASS",
    "VARYING_CLASS",
]

SAME_CLASS = "SameClass"
VARYING_CLASS = "VaryingClass"


class Unknown:
    """Third truth value of a bounded search; refuses to be used as a bool."""

    _instance: Optional["Unknown"] = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "Unknown"

    def __bool__(self) -> bool:
        raise TypeError("Unknown has no truth value; compare with `is UNKNOWN`")


UNKNOWN = Unknown()
Tri = Union[bool, Unknown]


class NotFound:
    _instance: Optional["NotFound"] = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "NotFound"

    def __bool__(self) -> bool:
        return False


NOT_FOUND = NotFound()


def tri_str(value: Tri) -> str:
    return "Unknown" if value is UNKNOWN else str(bool(value))


@dataclass(frozen=True)
class SearchBounds:
    """Bounds on roots (root height), levels |n| and chain length, plus a node budget."""

    root_height_bound: int = 8
    level_bound: int = 12
    chain_length_bound: int = 16
    node_budget: int = 200_000

    def __post_init__(self):
        for name in ("root_height_bound", "level_bound", "chain_length_bound", "node_budget"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1")


@dataclass(frozen=True)
class CoverWitness:
    """Data of a varying-class cover y = s_a x written from the dominant side.

    x = pi^(v(dominant)) w and y is pi^(v(dominant + beta0^vee)) s_{v(beta0)} w
    (form 1) or pi^(v s_beta0 (dominant + beta0^vee)) s_{v(beta0)} w (form 2),
    with u = v^(dominant + beta0^vee).
    """

    dominant: Vector
    v: WeylElt
    w: WeylElt
    beta0: Root
    n: int
    sigma: int
    u: WeylElt
    form: int


@dataclass(frozen=True)
class CoverCertificate:
    base: WPlusElt
    reflection: AffineRoot
    target: WPlusElt
    kind: str
    length_delta: int
    witness: Optional[CoverWitness] = None
    oracle: Tri = UNKNOWN
    shape_failures: tuple[str, ...] = ()

    @property
    def certified(self) -> bool:
        return self.length_delta == 1 and self.oracle is True and not self.shape_failures

    def sort_key(self) -> tuple:
        return self.reflection.sort_key()


@dataclass(frozen=True)
class UpperCovers:
    """Covers found from one base element; ``complete`` is True only in finite type."""

    base: WPlusElt
    certificates: tuple[CoverCertificate, ...]
    complete: bool

    def __iter__(self) -> Iterator[CoverCertificate]:
        return iter(self.certificates)

    def __len__(self) -> int:
        return len(self.certificates)

    def targets(self) -> set[WPlusElt]:
        return {c.target for c in self.certificates}


@dataclass(frozen=True)
class ChainReport:
    """x = elements[0] < elements[1] < ..., with elements[k+1] = s_{reflections[k]} elements[k]."""

    elements: tuple[WPlusElt, ...]
    reflections: tuple[AffineRoot, ...]

    def __len__(self) -> int:
        return len(self.reflections)

    def format(self) -> str:
        parts = [format_element(self.elements[0])]
        for a, z in zip(self.reflections, self.elements[1:]):
            parts.append(f"  < [{a}] {format_element(z)}")
        return "\n".join(parts)


@dataclass(frozen=True)
class Interval:
    """Elements z with x <= z <= y that were found, sorted by (length, text).

    ``undecided`` lists elements above x whose comparison with y stayed UNKNOWN;
    ``complete`` is True only when the search provably saw the whole interval.
    """

    lower: WPlusElt
    upper: WPlusElt
    elements: tuple[WPlusElt, ...]
    undecided: tuple[WPlusElt, ...]
    complete: bool


class _BudgetExceeded(Exception):
    pass


@dataclass
class _Candidate:
    target: WPlusElt
    root: AffineRoot
    length: int


def _coset_key(lam: Vector, cor: Vector) -> Vector:
    """Canonical representative of lam modulo Z cor."""
    k = next(i for i, c in enumerate(cor) if c)
    q = lam[k] // cor[k]
    return tuple(a - q * c for a, c in zip(lam, cor))


class BruhatOrder:
    """Searches over W+ for one datum, with memo tables shared across queries."""

    def __init__(self, aw: AffineWeyl, bounds: SearchBounds = SearchBounds()):
        self.aw = aw
        self.W = aw.W
        self.datum = aw.datum
        self.bounds = bounds
        self.finite_roots = positive_roots_if_finite(self.datum)
        self.certified = self.finite_roots is not None
        if self.finite_roots is not None:
            self.roots = self.finite_roots
        else:
            self.roots = enumerate_roots(self.datum, bounds.root_height_bound)
        self._reflections: dict[Vector, WeylElt] = {}
        self._reflection_roots: dict = {}
        self._succ: dict[WPlusElt, tuple[float, list[_Candidate]]] = {}
        self._pred: dict[WPlusElt, tuple[float, list[_Candidate]]] = {}
        self._cands: dict[WPlusElt, list[_Candidate]] = {}
        self._up: dict[tuple[WPlusElt, int], frozenset] = {}

    # basic helpers ------------------------------------------------------

    def length(self, x: WPlusElt) -> int:
        return self.aw.affine_length(x)

    def reflection(self, beta: Root) -> WeylElt:
        r = self._reflections.get(beta.root_vec)
        if r is None:
            r = self.W.reflection_of_root(beta)
            self._reflections[beta.root_vec] = r
        return r

    def reflection_root(self, r: WeylElt) -> Optional[Root]:
        if r.matrix in self._reflection_roots:
            return self._reflection_roots[r.matrix]
        gamma = self.W.reflection_root(r)
        self._reflection_roots[r.matrix] = gamma
        return gamma

    def raises(self, x: WPlusElt, a: AffineRoot) -> bool:
        return self.aw.raises(x, a)

    def _tag(self, x: WPlusElt) -> WPlusElt:
        return self.aw.tag(x)

    def _image(self, x: WPlusElt, a: AffineRoot) -> Optional[WPlusElt]:
        y = self.aw.reflect_left_with(a, self.reflection(a.beta), x)
        return self.aw.try_element(y.lam, y.w)

    # one-step relation --------------------------------------------------

    def _step_with(self, z: WPlusElt, y: WPlusElt, gamma: Root) -> Optional[AffineRoot]:
        """The level n with y = s_{gamma[n]} z (given s_gamma = w_y w_z^-1), if raising."""
        cor = gamma.coroot_vec
        diff = [a - b for a, b in zip(y.lam, z.lam)]
        k = pair(z.lam, gamma.root_vec)
        diff = [d + k * c for d, c in zip(diff, cor)]
        i = next(j for j, c in enumerate(cor) if c)
        if diff[i] % cor[i]:
            return None
        n = diff[i] // cor[i]
        if any(d != n * c for d, c in zip(diff, cor)):
            return None
        a = AffineRoot(gamma, n)
        return a if self.raises(z, a) else None

    def step_root(self, z: WPlusElt, y: WPlusElt) -> Optional[AffineRoot]:
        """The affine root a with y = s_a z and z < y, if there is one.  Exact, unbounded."""
        if z == y:
            return None
        gamma = self.reflection_root(y.w * z.w.inverse())
        if gamma is None:
            return None
        return self._step_with(z, y, gamma)

    # candidate enumeration ---------------------------------------------

    def _level_range(self, x: WPlusElt, beta: Root, max_len: float) -> range:
        if not self.certified:
            b = self.bounds.level_bound
            return range(-b, b + 1)
        if max_len == math.inf:
            raise ValueError("finite-type successor search needs a length cap")
        cap = (int(max_len) + len(self.finite_roots)) // 2
        hb = self.datum.height(beta.coroot_vec)
        ht = self.datum.height(x.lam)
        ht_s = ht - pair(x.lam, beta.root_vec) * hb
        hi = (cap - ht_s) // hb
        lo = -((cap - ht) // hb)
        return range(lo, hi + 1)

    def _raising_images(
        self, x: WPlusElt, levels, up: bool, length_ok
    ) -> list[_Candidate]:
        out = []
        for beta in self.roots:
            for n in levels(beta):
                a = AffineRoot(beta, n)
                if self.raises(x, a) != up:
                    continue
                y = self._image(x, a)
                if y is None:
                    continue
                ly = self.length(y)
                if length_ok(ly):
                    out.append(_Candidate(y, a, ly))
        out.sort(key=lambda c: (c.length if up else -c.length, c.root.sort_key()))
        return out

    def candidates(self, x: WPlusElt) -> list[_Candidate]:
        """All y = s_a x > x in W+ with roots and |n| within the bounds (any length)."""
        x = self._tag(x)
        hit = self._cands.get(x)
        if hit is None:
            b = self.bounds.level_bound
            hit = self._raising_images(x, lambda beta: range(-b, b + 1), True, lambda _: True)
            self._cands[x] = hit
        return hit

    def successors(self, x: WPlusElt, max_len: float = math.inf) -> list[_Candidate]:
        """Raising images s_a x in W+ with length <= max_len (complete in finite type)."""
        if not self.certified:
            return [c for c in self.candidates(x) if c.length <= max_len]
        hit = self._succ.get(x)
        if hit is None or hit[0] < max_len:
            lst = self._raising_images(
                x, lambda beta: self._level_range(x, beta, max_len), True, lambda ly: ly <= max_len
            )
            hit = (max_len, lst)
            self._succ[x] = hit
        return [c for c in hit[1] if c.length <= max_len]

    def predecessors(self, y: WPlusElt, min_len: float = -math.inf) -> list[_Candidate]:
        """Elements z = s_a y < y in W+ with length >= min_len."""
        hit = self._pred.get(y)
        if hit is None:
            ly = self.length(y)
            if self.certified:
                levels = lambda beta: self._level_range(y, beta, ly)
            else:
                b = self.bounds.level_bound
                levels = lambda beta: range(-b, b + 1)
            lst = self._raising_images(y, levels, False, lambda lz: lz < ly)
            hit = (min_len, lst)
            self._pred[y] = hit
        return [c for c in hit[1] if c.length >= min_len]

    def _upset(self, x: WPlusElt, budget: int) -> frozenset:
        """{z : x < z, l(z) <= l(x) + budget}, through bounded raising steps."""
        key = (x, budget)
        hit = self._up.get(key)
        if hit is not None:
            return hit
        lx = self.length(x)
        acc: set = set()
        for c in self.successors(x, lx + budget):
            acc.add(c.target)
            rest = budget - (c.length - lx)
            if rest > 0:
                acc |= self._upset(c.target, rest)
            if len(acc) > self.bounds.node_budget:
                raise _BudgetExceeded
        result = frozenset(acc)
        self._up[key] = result
        return result

    # comparison ---------------------------------------------------------

    def less_than(self, x: WPlusElt, y: WPlusElt) -> Tri:
        """x < y: True, False, or UNKNOWN when the bounded search is inconclusive."""
        x, y = self._tag(x), self._tag(y)
        if x == y:
            return False
        delta = self.length(y) - self.length(x)
        if delta <= 0:
            return False
        if self.step_root(x, y) is not None:
            return True
        if delta == 1:
            return False if self.certified else self._less_than_search(x, y, delta)
        return self._less_than_search(x, y, delta)

    def _less_than_search(self, x: WPlusElt, y: WPlusElt, delta: int) -> Tri:
        try:
            if self.certified:
                return y in self._upset(x, delta)
            ups = self._upset(x, delta - 1)
        except _BudgetExceeded:
            return UNKNOWN
        for z in ups:
            if self.step_root(z, y) is not None:
                return True
        return False if self.certified else UNKNOWN

    def find_chain(self, x: WPlusElt, y: WPlusElt) -> Union[ChainReport, NotFound]:
        """A raising chain from x to y.

        A maximal chain (every step raising l^a by exactly 1) is searched first;
        if none is found within the bounds, any raising chain is accepted.
        """
        x, y = self._tag(x), self._tag(y)
        if x == y:
            return ChainReport((x,), ())
        ly = self.length(y)
        if ly <= self.length(x):
            return NOT_FOUND
        try:
            steps = self._unit_chain(x, y)
        except _BudgetExceeded:
            steps = None
        if steps is None:
            steps = self._any_chain(x, y)
        if steps is None:
            return NOT_FOUND
        return ChainReport((x,) + tuple(z for _, z in steps), tuple(a for a, _ in steps))

    def _unit_chain(self, x: WPlusElt, y: WPlusElt):
        ly = self.length(y)
        failed: set = set()
        visited = [0]

        def walk(z: WPlusElt):
            lz = self.length(z)
            if lz + 1 == ly:
                a = self.step_root(z, y)
                return [(a, y)] if a is not None else None
            if z in failed:
                return None
            visited[0] += 1
            if visited[0] > self.bounds.node_budget:
                raise _BudgetExceeded
            for c in self.successors(z, lz + 1):
                if c.length == lz + 1 and self.less_than(c.target, y) is True:
                    rest = walk(c.target)
                    if rest is not None:
                        return [(c.root, c.target)] + rest
            failed.add(z)
            return None

        if ly - self.length(x) > self.bounds.chain_length_bound:
            return None
        return walk(x)

    def _any_chain(self, x: WPlusElt, y: WPlusElt):
        ly = self.length(y)
        failed: set = set()
        visited = [0]

        def walk(z: WPlusElt, depth: int):
            a = self.step_root(z, y)
            if a is not None:
                return [(a, y)]
            if depth <= 1 or z in failed:
                return None
            visited[0] += 1
            if visited[0] > self.bounds.node_budget:
                raise _BudgetExceeded
            for c in self.successors(z, ly - 1):
                rest = walk(c.target, depth - 1)
                if rest is not None:
                    return [(c.root, c.target)] + rest
            failed.add(z)
            return None

        depth = min(self.bounds.chain_length_bound, ly - self.length(x))
        try:
            return walk(x, depth)
        except _BudgetExceeded:
            return None

    def interval(self, x: WPlusElt, y: WPlusElt) -> Interval:
        """The Bruhat interval [x, y] as far as the bounded search reaches."""
        x, y = self._tag(x), self._tag(y)
        key = lambda z: (self.length(z), format_element(z))
        if x == y:
            return Interval(x, y, (x,), (), True)
        lt = self.less_than(x, y)
        if lt is not True:
            return Interval(x, y, (), (), lt is False)
        delta = self.length(y) - self.length(x)
        try:
            ups = self._upset(x, delta - 1)
            complete = self.certified
        except _BudgetExceeded:
            ups, complete = frozenset(), False
        inside, undecided = [x, y], []
        for z in ups:
            r = self.less_than(z, y)
            if r is True:
                inside.append(z)
            elif r is UNKNOWN:
                undecided.append(z)
        complete = complete and not undecided
        return Interval(x, y, tuple(sorted(inside, key=key)), tuple(sorted(undecided, key=key)), complete)

    # covers -------------------------------------------------------------

    def find_intermediate(self, x: WPlusElt, y: WPlusElt) -> Tri | WPlusElt:
        """Some z with x < z < y; False if certainly none, UNKNOWN if undecided."""
        ly, lx = self.length(y), self.length(x)
        a = self.step_root(x, y)
        if a is not None:
            z = self._line_intermediate(x, y, a) or self._gallery_intermediate(x, y, a)
            if z is not None:
                return z
        succ = [c for c in self.successors(x, ly - 1) if c.target != y]
        groups: dict[WeylElt, list[WPlusElt]] = defaultdict(list)
        for c in succ:
            groups[c.target.w].append(c.target)
        # two steps: x < z < y with z -> y a single reflection
        for u, zs in groups.items():
            gamma = self.reflection_root(y.w * u.inverse())
            if gamma is None:
                continue
            for z in zs:
                if self._step_with(z, y, gamma) is not None:
                    return z
        # three steps: x < z1 < z2 < y, joining successors of x and predecessors of y
        pred = [c.target for c in self.predecessors(y, lx + 2)]
        pgroups: dict[WeylElt, list[WPlusElt]] = defaultdict(list)
        for z2 in pred:
            pgroups[z2.w].append(z2)
        for u1, z1s in groups.items():
            u1_inv = u1.inverse()
            for u2, z2s in pgroups.items():
                gamma = self.reflection_root(u2 * u1_inv)
                if gamma is None:
                    continue
                by_key: dict[Vector, list[WPlusElt]] = defaultdict(list)
                for z2 in z2s:
                    by_key[_coset_key(z2.lam, gamma.coroot_vec)].append(z2)
                for z1 in z1s:
                    for z2 in by_key.get(_coset_key(z1.lam, gamma.coroot_vec), ()):
                        if self._step_with(z1, z2, gamma) is not None:
                            return z1
        # general search
        unknown = False
        for c in succ:
            r = self.less_than(c.target, y)
            if r is True:
                return c.target
            if r is UNKNOWN:
                unknown = True
        if unknown or not self.certified:
            return UNKNOWN
        return False

    def _chain_through(self, x: WPlusElt, z1: WPlusElt, z2: WPlusElt, y: WPlusElt) -> Optional[WPlusElt]:
        """z1 when x < z1 < z2 < y by exact single steps and z1, z2 lie in W+."""
        if len({x, z1, z2, y}) < 4:
            return None
        if self.step_root(x, z1) is None or self.step_root(z1, z2) is None:
            return None
        if self.step_root(z2, y) is None:
            return None
        if self.aw.try_element(z1.lam, z1.w) is None or self.aw.try_element(z2.lam, z2.w) is None:
            return None
        return self._tag(z1)

    def _line_intermediate(self, x: WPlusElt, y: WPlusElt, a: AffineRoot) -> Optional[WPlusElt]:
        """Three-step chains inside {pi^(lam + j beta^vee) u : u in {w, s_beta w}}."""
        beta, lam, w = a.beta, x.lam, x.w
        cor = beta.coroot_vec
        k = pair(lam, beta.root_vec)
        shift = a.n - k
        lo, hi = min(0, -k, shift) - 2, max(0, -k, shift) + 2
        sw = y.w
        js = sorted(range(lo, hi + 1), key=abs)
        line = {j: tuple(c + j * d for c, d in zip(lam, cor)) for j in js}
        for j1 in js:
            z1 = WPlusElt(line[j1], sw)
            if z1 == y or self._step_with(x, z1, beta) is None:
                continue
            for j2 in js:
                z2 = WPlusElt(line[j2], w)
                if z2 == x or self._step_with(z1, z2, beta) is None:
                    continue
                if self._step_with(z2, y, beta) is None:
                    continue
                if self.aw.try_element(z1.lam, sw) and self.aw.try_element(z2.lam, w):
                    return self._tag(z1)
        return None

    def _gallery_intermediate(self, x: WPlusElt, y: WPlusElt, a: AffineRoot) -> Optional[WPlusElt]:
        """Chains x < pi^lam r w < pi^mu s_beta r w < y for walls r of v^lam, v^mu or w."""
        W = self.W
        s = self.reflection(a.beta)
        v1 = self.aw.dominance(x).v_min
        v2 = self.aw.dominance(y).v_min
        seen: set = set()
        for u in (v1, v2, x.w):
            for g in W.inversion_set(u.inverse()):
                if g.root_vec in seen or g.root_vec == a.beta.root_vec:
                    continue
                seen.add(g.root_vec)
                r = self.reflection(g)
                z1 = WPlusElt(x.lam, r * x.w)
                z2 = WPlusElt(y.lam, s * r * x.w)
                z = self._chain_through(x, z1, z2, y)
                if z is not None:
                    return z
        return None

    def is_cover(self, x: WPlusElt, y: WPlusElt) -> Tri:
        """y covers x: x < y with nothing strictly between."""
        x, y = self._tag(x), self._tag(y)
        lt = self.less_than(x, y)
        if lt is not True:
            return lt
        if self.length(y) - self.length(x) == 1:
            return True
        found = self.find_intermediate(x, y)
        if found is UNKNOWN:
            return UNKNOWN
        return found is False

    def upper_covers(self, x: WPlusElt, check_oracle: bool = True) -> UpperCovers:
        """Covers y = s_{beta[n]} x with n in {0, <lam,beta>, -sigma, <lam,beta> + sigma}."""
        x = self._tag(x)
        lx = self.length(x)
        dom_x = self.aw.dominance(x).dominant
        certs = []
        for beta in self.roots:
            k = pair(x.lam, beta.root_vec)
            sigma = 1 if k >= 0 else -1
            for n in sorted({0, k, -sigma, k + sigma}):
                a = AffineRoot(beta, n)
                if not self.raises(x, a):
                    continue
                y = self._image(x, a)
                if y is None or self.length(y) - lx != 1:
                    continue
                certs.append(self._certificate(x, a, y, dom_x, check_oracle))
        certs.sort(key=CoverCertificate.sort_key)
        return UpperCovers(x, tuple(certs), self.certified)

    def _certificate(
        self, x: WPlusElt, a: AffineRoot, y: WPlusElt, dom_x: Vector, check_oracle: bool
    ) -> CoverCertificate:
        delta = self.length(y) - self.length(x)
        oracle = self.is_cover(x, y) if check_oracle else UNKNOWN
        if self.aw.dominance(y).dominant == dom_x:
            return CoverCertificate(x, a, y, SAME_CLASS, delta, None, oracle)
        witness = self.cover_witness(x, a, y)
        failures = self.shape_failures(x, a, y, witness)
        return CoverCertificate(x, a, y, VARYING_CLASS, delta, witness, oracle, failures)

    def cover_witness(self, x: WPlusElt, a: AffineRoot, y: WPlusElt) -> Optional[CoverWitness]:
        """Rewrite y = s_a x in the dominant-side form; None if neither form matches."""
        W, dom = self.W, self.aw.dominance(x)
        lam0, v = dom.dominant, dom.v_min
        beta0 = self.W.apply_root_inverse(v, a.beta)
        if not beta0.positive:
            beta0 = -beta0
        shifted = tuple(p + q for p, q in zip(lam0, beta0.coroot_vec))
        k = pair(x.lam, a.beta.root_vec)
        sigma = 1 if k >= 0 else -1
        form1 = v.apply(shifted)
        s0 = self.reflection(beta0)
        form2 = (v * s0).apply(shifted)
        if y.lam == form1:
            form = 1
        elif y.lam == form2:
            form = 2
        else:
            return None
        try:
            u = self.aw.dominance(self.aw.ambient(shifted)).v_min
        except NotInTitsCone:
            return None
        return CoverWitness(lam0, v, x.w, beta0, a.n, sigma, u, form)

    def shape_failures(
        self, x: WPlusElt, a: AffineRoot, y: WPlusElt, wit: Optional[CoverWitness]
    ) -> tuple[str, ...]:
        """Necessary conditions on a varying-class cover; returns the failed ones."""
        W = self.W
        fails = []
        k = pair(x.lam, a.beta.root_vec)
        sigma = 1 if k >= 0 else -1
        if a.n not in (-sigma, k + sigma):
            fails.append("level not in {-sigma, <lam,beta>+sigma}")
        v_lam = self.aw.dominance(x).v_min
        v_mu = self.aw.dominance(y).v_min
        s_beta = self.reflection(a.beta)
        if not W.on_minimal_gallery(x.w, s_beta * v_mu, v_lam):
            fails.append("s_beta v^mu not on a minimal gallery from w to v^lam")
        if wit is None:
            fails.append("no dominant-side witness")
            return tuple(fails)
        b0, u, v = wit.beta0, wit.u, wit.v
        s0 = self.reflection(b0)
        l_s0 = W.length(s0)
        total = sum(pair(b0.coroot_vec, g.root_vec) for g in W.inversion_set(s0))
        if total - l_s0 != 1:
            fails.append("sum <beta^vee, gamma> over Inv(s_beta) minus l(s_beta) != 1")
        shifted = tuple(p + q for p, q in zip(wit.dominant, b0.coroot_vec))
        if any(pair(shifted, t.root_vec) != -1 for t in W.inversion_set(u.inverse())):
            fails.append("<lam + beta^vee, tau> != -1 for some tau in Inv(u^-1)")
        if W.length(s0 * u) != l_s0 + W.length(u):
            fails.append("l(s_beta u) != l(s_beta) + l(u)")
        if wit.form == 1:
            if W.length(v * u) != W.length(v) + W.length(u):
                fails.append("l(vu) != l(v) + l(u)")
        elif W.length(v * s0 * u) != W.length(v) + W.length(s0 * u):
            fails.append("l(v s_beta u) != l(v) + l(s_beta u)")
        return tuple(fails)
