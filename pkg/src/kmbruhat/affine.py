"""The semigroup W+ = Y+ x| W^v, affine roots, affine reflections and affine lengths.

Elements are written pi^lam w.  Products follow
pi^lam w . pi^mu v = pi^(lam + w(mu)) w v, and the action on affine roots is
pi^lam w (beta + n pi) = w(beta) + (n + <lam, w(beta)>) pi.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import NegativeZeroLevel, NotInTitsCone, ParseError
from .root_datum import RootDatum, Vector, pair
from .roots import Root, negate, positive_part
from .tits_cone import (
    DEFAULT_STEP_CAP,
    DominanceResult,
    Undetermined,
    dominate,
    require_dominance,
)
from .weyl import WeylElt, WeylGroup

__all__ = [
    "WPlusElt",
    "AffineRoot",
    "SignedAffineRoot",
    "AffineWeyl",
    "normalize_affine_root",
]


@dataclass(frozen=True)
class WPlusElt:
    """pi^lam w.  ``tagged`` marks a certified member of W+ (lam in the Tits cone)."""

    lam: Vector
    w: WeylElt
    tagged: bool = field(default=False, compare=False)
    dominance: Optional[DominanceResult] = field(default=None, compare=False, repr=False)

    def __repr__(self) -> str:
        return format_element(self)


@dataclass(frozen=True, order=True)
class SignedAffineRoot:
    """beta + n pi for a real root beta of either sign."""

    beta: Root
    n: int

    @property
    def positive(self) -> bool:
        return self.n > 0 or (self.n == 0 and self.beta.positive)


@dataclass(frozen=True, order=True)
class AffineRoot:
    """beta[n] = sgn(n) beta + |n| pi with beta a positive root (sgn(0) = +1).

    Every positive real affine root has exactly one such description.
    """

    beta: Root
    n: int

    def __post_init__(self):
        if not self.beta.positive:
            raise NegativeZeroLevel("AffineRoot stores a positive root; use normalize_affine_root")

    @property
    def sign(self) -> int:
        return 1 if self.n >= 0 else -1

    def signed(self) -> SignedAffineRoot:
        """The affine root as beta' + m pi with m >= 0."""
        return SignedAffineRoot(self.beta if self.n >= 0 else negate(self.beta), abs(self.n))

    def sort_key(self) -> tuple:
        return (self.beta.height, abs(self.n), self.n < 0, self.beta.simple_expansion)

    def __str__(self) -> str:
        coeffs = ",".join(map(str, self.beta.simple_expansion))
        return f"({coeffs})[{self.n}]"


def normalize_affine_root(beta: Root, n: int) -> AffineRoot:
    """beta[n] for a root of either sign, using beta[n] = (-beta)[-n]."""
    if beta.positive:
        return AffineRoot(beta, n)
    if n == 0:
        raise NegativeZeroLevel("beta[0] is undefined for a negative root; negate it first")
    return AffineRoot(negate(beta), -n)


def _add(a: Sequence[int], b: Sequence[int]) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def _scale_add(a: Sequence[int], k: int, b: Sequence[int]) -> Vector:
    return tuple(x + k * y for x, y in zip(a, b))


class AffineWeyl:
    """Engine for one root datum: element construction, products and lengths."""

    def __init__(self, W: WeylGroup, step_cap: int = DEFAULT_STEP_CAP):
        self.W = W
        self.datum: RootDatum = W.datum
        self.step_cap = step_cap
        self._length_cache: dict[WPlusElt, int] = {}

    @classmethod
    def from_datum(cls, datum: RootDatum, step_cap: int = DEFAULT_STEP_CAP) -> "AffineWeyl":
        return cls(WeylGroup(datum), step_cap)

    # construction -------------------------------------------------------

    def element(self, lam: Sequence[int], w: Optional[WeylElt] = None) -> WPlusElt:
        """A certified element of W+; raises NotInTitsCone otherwise."""
        lam = tuple(lam)
        res = require_dominance(self.W, lam, self.step_cap)
        return WPlusElt(lam, w if w is not None else self.W.identity, True, res)

    def try_element(self, lam: Sequence[int], w: WeylElt) -> Optional[WPlusElt]:
        """The W+ element pi^lam w, or None when lam is not shown to be in the Tits cone."""
        lam = tuple(lam)
        res = dominate(self.W, lam, self.step_cap)
        if isinstance(res, Undetermined):
            return None
        return WPlusElt(lam, w, True, res)

    def ambient(self, lam: Sequence[int], w: Optional[WeylElt] = None) -> WPlusElt:
        """An element of Y x| W^v with no Tits-cone check."""
        return WPlusElt(tuple(lam), w if w is not None else self.W.identity)

    def tag(self, x: WPlusElt) -> WPlusElt:
        return x if x.tagged else self.element(x.lam, x.w)

    def identity(self) -> WPlusElt:
        return self.element(self.datum.zero())

    def dominance(self, x: WPlusElt) -> DominanceResult:
        if x.dominance is not None:
            return x.dominance
        return require_dominance(self.W, x.lam, self.step_cap)

    # group structure ----------------------------------------------------

    def multiply(self, x: WPlusElt, y: WPlusElt) -> WPlusElt:
        lam = _add(x.lam, x.w.apply(y.lam))
        w = x.w * y.w
        if x.tagged and y.tagged:
            return self.element(lam, w)
        return WPlusElt(lam, w)

    def inverse(self, x: WPlusElt) -> WPlusElt:
        winv = x.w.inverse()
        return WPlusElt(tuple(-c for c in winv.apply(x.lam)), winv)

    def act(self, x: WPlusElt, a: SignedAffineRoot) -> SignedAffineRoot:
        wb = self.W.apply_root(x.w, a.beta)
        return SignedAffineRoot(wb, a.n + pair(x.lam, wb.root_vec))

    def affine_reflection(self, beta: Root, n: int) -> WPlusElt:
        """s_{beta[n]} = pi^(n beta^vee) s_beta."""
        lam = tuple(n * c for c in beta.coroot_vec)
        return WPlusElt(lam, self.W.reflection_of_root(beta))

    def reflect_left(self, a: AffineRoot, x: WPlusElt) -> WPlusElt:
        """s_a x = pi^(s_beta(lam) + n beta^vee) s_beta w, untagged."""
        beta, n = a.beta, a.n
        k = n - pair(x.lam, beta.root_vec)
        return WPlusElt(_scale_add(x.lam, k, beta.coroot_vec), self.W.reflection_of_root(beta) * x.w)

    def reflect_left_with(self, a: AffineRoot, s_beta: WeylElt, x: WPlusElt) -> WPlusElt:
        """reflect_left with the Weyl reflection s_beta supplied by the caller."""
        k = a.n - pair(x.lam, a.beta.root_vec)
        return WPlusElt(_scale_add(x.lam, k, a.beta.coroot_vec), s_beta * x.w)

    # order predicate ----------------------------------------------------

    def raises(self, x: WPlusElt, a: AffineRoot) -> bool:
        """s_a x > x: sgn(n) w^{-1}(beta) + (|n| - sgn(n) <lam, beta>) pi is positive."""
        sgn = a.sign
        level = abs(a.n) - sgn * pair(x.lam, a.beta.root_vec)
        if level:
            return level > 0
        img = x.w.coapply_inverse(a.beta.root_vec)
        exp = self.datum.expand_root(img)
        first = next(c for c in exp if c)
        return sgn * first > 0

    # lengths ------------------------------------------------------------

    def affine_length_eps(self, x: WPlusElt) -> tuple[int, int]:
        """(2 ht(lam++), #{alpha in Inv(w^-1): <lam, alpha> >= 0} - #{... < 0})."""
        dom = self.dominance(x)
        coeff = 0
        for alpha in self.W.inversion_set(x.w.inverse()):
            coeff += 1 if pair(x.lam, alpha.root_vec) >= 0 else -1
        return 2 * self.datum.height(dom.dominant), coeff

    def affine_length(self, x: WPlusElt) -> int:
        hit = self._length_cache.get(x)
        if hit is None:
            base, coeff = self.affine_length_eps(x)
            hit = base + coeff
            self._length_cache[x] = hit
        return hit

    def affine_length_closed(self, x: WPlusElt) -> int:
        """2 ht(lam++) + l(v^-1 w) - l(v) with v = v^lam."""
        dom = self.dominance(x)
        v = dom.v_min
        return 2 * self.datum.height(dom.dominant) + self.W.relative_length(v, x.w)

    # text ---------------------------------------------------------------

    def parse(self, text: str, tagged: bool = True) -> WPlusElt:
        x = parse_element(self.W, text)
        return self.element(x.lam, x.w) if tagged else x

    def format(self, x: WPlusElt) -> str:
        return format_element(x)


_ELEMENT = re.compile(r"^\s*pi\s*\[([^\]]*)\]\s*(?:\*\s*(.*?))?\s*$")


def parse_element(W: WeylGroup, text: str) -> WPlusElt:
    """Parse ``pi[c1,...,cd] * s1 s2`` (``e`` for the empty word; ``* word`` optional)."""
    m = _ELEMENT.match(text)
    if not m:
        raise ParseError(f"cannot parse element {text!r}; expected 'pi[c1,...,cd] * word'")
    coords = [t for t in re.split(r"[,\s]+", m.group(1).strip()) if t]
    try:
        lam = tuple(int(c) for c in coords)
    except ValueError as exc:
        raise ParseError(f"bad coweight in {text!r}") from exc
    if len(lam) != W.datum.lattice_rank:
        raise ParseError(f"coweight needs {W.datum.lattice_rank} coordinates, got {len(lam)}")
    w = W.parse_word(m.group(2) or "e")
    return WPlusElt(lam, w)


def format_element(x: WPlusElt) -> str:
    coords = ",".join(map(str, x.lam))
    return f"pi[{coords}] * {x.w.group.format_word(x.w.word)}"


def positive_affine_root(beta: Root, n: int) -> AffineRoot:
    """beta[n] when beta may be negative and n may be zero: (-beta)[0] is used for n == 0."""
    if n == 0:
        return AffineRoot(positive_part(beta), 0)
    return normalize_affine_root(beta, n)
