"""Independent affine Coxeter engine for finite-type data, used only as a test oracle.

Elements are affine maps x -> M x + t on V = Y (x) Q, written in the basis of
simple coroots.  Generators are the linear simple reflections s_1..s_r and
s_0, the reflection in the hyperplane <x, theta> = 1 (theta the highest
root).  Lengths and reduced words come from alcove descent stripping at an
interior point of the fundamental alcove; Bruhat comparison uses the
recursive Z-property.  Nothing here touches the library's order or length code.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

Vec = tuple
Mat = tuple


def _mat_vec(m: Mat, v: Vec) -> Vec:
    return tuple(sum(a * b for a, b in zip(row, v)) for row in m)


def _mat_mul(a: Mat, b: Mat) -> Mat:
    bt = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def _solve(a: list[list[Fraction]], b: list[Fraction]) -> list[Fraction]:
    """Gaussian elimination over the rationals."""
    n = len(a)
    m = [list(map(Fraction, row)) + [Fraction(rhs)] for row, rhs in zip(a, b)]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col] / m[col][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [m[i][n] / m[i][i] for i in range(n)]


class AffineCoxeter:
    """Affine Weyl group of a finite-type Cartan matrix with Y = coroot lattice.

    Coordinates: x = sum x_i alpha_i^vee, and <x, alpha_j> = sum_i x_i a_ij.
    """

    def __init__(self, cartan: list[list[int]]):
        self.A = [list(r) for r in cartan]
        self.r = len(cartan)
        r = self.r
        self.ident = tuple(tuple(int(i == j) for j in range(r)) for i in range(r))
        self.zero = (0,) * r
        # simple reflection s_i on Y: x -> x - <x, alpha_i> alpha_i^vee
        self.lin = []
        for i in range(r):
            m = [[int(a == b) for b in range(r)] for a in range(r)]
            for c in range(r):
                m[i][c] -= self.A[c][i]
            self.lin.append(tuple(tuple(row) for row in m))
        self.theta, self.theta_vee = self._highest_root()
        # interior point of the fundamental alcove: rho-coweight / Coxeter number
        omega_sum = _solve([[self.A[i][j] for i in range(r)] for j in range(r)], [1] * r)
        h = sum(self.theta) + 1
        p0 = [Fraction(c) / h for c in omega_sum]
        # integer copy: P = scale * p0, so walls become <g(P), alpha> vs 0 and <g(P), theta> vs scale
        self.scale = 1
        for c in p0:
            self.scale = self.scale * c.denominator // gcd(self.scale, c.denominator)
        self.P = tuple(int(c * self.scale) for c in p0)
        self.gens = tuple(self._generator(i) for i in range(r + 1))
        self.theta_row = tuple(
            sum(self.A[a][j] * self.theta[j] for j in range(r)) for a in range(r)
        )
        self.alpha_rows = tuple(tuple(self.A[a][i] for a in range(r)) for i in range(r))

    # roots --------------------------------------------------------------

    def pair_root(self, x: Vec, root: Vec) -> Fraction:
        """<x, alpha> for alpha given by simple-root coefficients."""
        return sum(x[i] * sum(self.A[i][j] * root[j] for j in range(self.r)) for i in range(self.r))

    def _highest_root(self):
        """Closure of (root, coroot) pairs under simple reflections; highest root by height."""
        r = self.r
        pairs = {}
        todo = []
        for i in range(r):
            e = tuple(int(k == i) for k in range(r))
            pairs[e] = e
            todo.append(e)
        while todo:
            rt = todo.pop()
            co = pairs[rt]
            for i in range(r):
                k = sum(self.A[i][j] * rt[j] for j in range(r))
                m = sum(co[a] * self.A[a][i] for a in range(r))
                nr = tuple(c - (k if j == i else 0) for j, c in enumerate(rt))
                nc = tuple(c - (m if j == i else 0) for j, c in enumerate(co))
                if all(c >= 0 for c in nr) and nr not in pairs:
                    pairs[nr] = nc
                    todo.append(nr)
        theta = max(pairs, key=sum)
        return theta, pairs[theta]

    # group elements: (M, t) meaning x -> M x + t -------------------------

    def compose(self, g, h):
        (m1, t1), (m2, t2) = g, h
        return (_mat_mul(m1, m2), tuple(a + b for a, b in zip(_mat_vec(m1, t2), t1)))

    def generator(self, i: int):
        return self.gens[i]

    def _generator(self, i: int):
        """i = 0 is the affine generator, 1..r the linear ones."""
        if i > 0:
            return (self.lin[i - 1], self.zero)
        r = self.r
        # s_0(x) = x - (<x, theta> - 1) theta^vee
        theta_row = [sum(self.A[a][j] * self.theta[j] for j in range(r)) for a in range(r)]
        m = tuple(
            tuple(int(a == b) - self.theta_vee[a] * theta_row[b] for b in range(r)) for a in range(r)
        )
        return (m, tuple(self.theta_vee))

    def from_word(self, word):
        g = (self.ident, self.zero)
        for i in word:
            g = self.compose(g, self.generator(i))
        return g

    def from_translation_weyl(self, lam: Vec, weyl_word) -> tuple:
        """The map x -> w(x) - lam, i.e. t_{-lam} w."""
        m = self.ident
        for i in weyl_word:
            m = _mat_mul(m, self.lin[i])
        return (m, tuple(-c for c in lam))

    @lru_cache(maxsize=None)
    def left_descents(self, g) -> tuple[int, ...]:
        m, t = g
        p = tuple(a + self.scale * b for a, b in zip(_mat_vec(m, self.P), t))
        out = []
        if sum(a * b for a, b in zip(p, self.theta_row)) > self.scale:
            out.append(0)
        for i, row in enumerate(self.alpha_rows):
            if sum(a * b for a, b in zip(p, row)) < 0:
                out.append(i + 1)
        return tuple(out)

    @lru_cache(maxsize=None)
    def reduced_word(self, g) -> tuple[int, ...]:
        word = []
        while True:
            ds = self.left_descents(g)
            if not ds:
                break
            s = ds[0]
            word.append(s)
            g = self.compose(self.generator(s), g)
        if g != (self.ident, self.zero):
            raise AssertionError("descent stripping did not reach the identity")
        return tuple(word)

    @lru_cache(maxsize=None)
    def length(self, g) -> int:
        return len(self.reduced_word(g))

    def bruhat_le(self, u, w) -> bool:
        return self._le(u, w)

    @lru_cache(maxsize=None)
    def _le(self, u, w) -> bool:
        lu, lw = self.length(u), self.length(w)
        if lu > lw:
            return False
        if lw == 0:
            return u == w
        s = self.left_descents(w)[0]
        sg = self.generator(s)
        sw = self.compose(sg, w)
        if s in self.left_descents(u):
            return self._le(self.compose(sg, u), sw)
        return self._le(u, sw)
