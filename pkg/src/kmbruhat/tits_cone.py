"""Dominance in the Tits cone: lambda++, v^lambda, stabilizers and dominant height."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

import sympy

from .errors import NotInTitsCone
from .root_datum import Vector, pair
from .weyl import WeylElt, WeylGroup

__all__ = [
    "DominanceResult",
    "Undetermined",
    "DEFAULT_STEP_CAP",
    "dominate",
    "require_dominance",
    "is_dominant",
    "dominant_height",
    "dominant_height_via_inversions",
]

DEFAULT_STEP_CAP = 10_000


@dataclass(frozen=True)
class DominanceResult:
    """lambda = v_min(dominant), with v_min minimal in v_min W_J."""

    dominant: Vector
    v_min: WeylElt
    stabilizer_gens: frozenset[int]


@dataclass(frozen=True)
class Undetermined:
    """Dominance could not be established.

    ``trace`` lists the coweights visited, starting with the input.  When
    ``outside`` is set, an invariant of the Tits cone failed along the way,
    so the input is certainly not in it; otherwise the step cap was hit.
    """

    lam: Vector
    steps: int
    trace: tuple[Vector, ...]
    outside: bool = False

    def __bool__(self) -> bool:
        return False


def is_dominant(W: WeylGroup, lam: Sequence[int]) -> bool:
    return all(pair(lam, a) >= 0 for a in W.datum.simple_roots)


@dataclass(frozen=True)
class _ConeInvariants:
    """W-invariant necessary conditions for membership in the Tits cone.

    ``height_nonpositive``: -rho is a nonnegative rational combination of
    simple roots, so ht <= 0 on the dominant cone and hence ht(mu) <= ht(mu++) <= 0
    for every mu in the cone.  ``null_roots``: for each kernel vector c >= 0
    of A with support K, delta = sum c_k alpha_k is W-invariant and
    nonnegative on dominant coweights, vanishing there only if every
    <mu, alpha_k> (k in K) vanishes.
    """

    height_nonpositive: bool
    null_roots: tuple[tuple[Vector, frozenset[int]], ...]


def _cone_invariants(W: WeylGroup) -> _ConeInvariants:
    inv = W.__dict__.get("_cone_invariants")
    if inv is not None:
        return inv
    datum = W.datum
    alphas = sympy.Matrix(datum.simple_roots).T
    sol = None
    try:
        sol, params = alphas.gauss_jordan_solve(-sympy.Matrix(datum.rho))
        if params.shape[0]:
            sol = None
    except ValueError:
        sol = None
    nonpos = sol is not None and all(c >= 0 for c in sol)
    nulls = []
    for vec in sympy.Matrix(datum.gcm.entries).nullspace():
        coeffs = [Fraction(int(c.p), int(c.q)) for c in vec]
        if all(c <= 0 for c in coeffs):
            coeffs = [-c for c in coeffs]
        if not all(c >= 0 for c in coeffs):
            continue
        scale = 1
        for c in coeffs:
            scale = scale * c.denominator // _gcd(scale, c.denominator)
        ints = [int(c * scale) for c in coeffs]
        delta = datum.root_combination(ints)
        nulls.append((delta, frozenset(k for k, c in enumerate(ints) if c)))
    inv = _ConeInvariants(nonpos, tuple(nulls))
    W.__dict__["_cone_invariants"] = inv
    return inv


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _violates_invariants(W: WeylGroup, inv: _ConeInvariants, mu: Vector) -> bool:
    if inv.height_nonpositive and W.datum.height(mu) > 0:
        return True
    roots = W.datum.simple_roots
    for delta, support in inv.null_roots:
        level = pair(mu, delta)
        if level < 0 or (level == 0 and any(pair(mu, roots[k]) for k in support)):
            return True
    return False


def dominate(
    W: WeylGroup,
    lam: Sequence[int],
    step_cap: int = DEFAULT_STEP_CAP,
    use_invariants: bool = True,
) -> Union[DominanceResult, Undetermined]:
    """Greedy descent to the dominant chamber.

    While some <mu, alpha_j> < 0, replace mu by s_j(mu) for the smallest such
    j; this raises the height each time.  The recorded word u satisfies
    lam = u(mu) and v^lam is recovered as the minimal coset representative of u.
    With ``use_invariants`` the walk stops early, with ``outside`` set, as soon
    as a W-invariant condition of the Tits cone fails.
    """
    lam = tuple(lam)
    cache = _cache(W) if use_invariants else {}
    hit = cache.get(lam)
    if hit is not None and (
        isinstance(hit, DominanceResult) or hit.outside or hit.steps >= step_cap
    ):
        return hit
    inv: Optional[_ConeInvariants] = _cone_invariants(W) if use_invariants else None
    roots = W.datum.simple_roots
    mu = lam
    word: list[int] = []
    trace = [lam]
    while True:
        for j, a in enumerate(roots):
            if pair(mu, a) < 0:
                break
        else:
            break
        outside = inv is not None and _violates_invariants(W, inv, mu)
        if outside or len(word) >= step_cap:
            result = Undetermined(lam, len(word), tuple(trace), outside)
            cache[lam] = result
            return result
        k = pair(mu, a)
        cor = W.datum.simple_coroots[j]
        mu = tuple(m - k * c for m, c in zip(mu, cor))
        word.append(j)
        trace.append(mu)
    J = frozenset(j for j, a in enumerate(roots) if pair(mu, a) == 0)
    v = W.min_coset_rep(W.from_word(word), J)
    result = DominanceResult(mu, v, J)
    cache[lam] = result
    return result


def _cache(W: WeylGroup) -> dict:
    cache = W.__dict__.get("_dominance_cache")
    if cache is None:
        cache = W.__dict__.setdefault("_dominance_cache", {})
    return cache


def require_dominance(W: WeylGroup, lam: Sequence[int], step_cap: int = DEFAULT_STEP_CAP) -> DominanceResult:
    """dominate, raising NotInTitsCone (with the greedy trace) when undetermined."""
    res = dominate(W, lam, step_cap)
    if isinstance(res, Undetermined):
        if res.outside:
            msg = f"coweight {tuple(lam)} is not in the Tits cone"
        else:
            msg = f"coweight {tuple(lam)} not shown to lie in the Tits cone within {res.steps} steps"
        raise NotInTitsCone(msg, res.trace)
    return res


def dominant_height(W: WeylGroup, lam: Sequence[int], step_cap: int = DEFAULT_STEP_CAP) -> int:
    return W.datum.height(require_dominance(W, lam, step_cap).dominant)


def dominant_height_via_inversions(
    W: WeylGroup, lam: Sequence[int], step_cap: int = DEFAULT_STEP_CAP
) -> int:
    """ht(lam) - sum over tau in Inv(u^{-1}) of <lam, tau>, with u = v^lam."""
    u = require_dominance(W, lam, step_cap).v_min
    return W.datum.height(lam) - sum(pair(lam, t.root_vec) for t in W.inversion_set(u.inverse()))
