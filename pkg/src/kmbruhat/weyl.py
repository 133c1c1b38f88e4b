"""Exact Weyl group elements acting on Y, with words, lengths and inversion sets.

An element is identified by its integer matrix on Y (columns indexed like
the coordinates of Y); its canonical reduced word is obtained by stripping
the smallest left descent and is cached per group.
"""

from __future__ import annotations

import threading
from collections import deque
from typing import Iterable, Iterator, Optional, Sequence

from .errors import NotARealRoot, NotAWeylMatrix, PreconditionViolated
from .root_datum import Matrix, RootDatum, Vector, pair
from .roots import Root, expansion_sign, make_root, simple_root

__all__ = ["WeylGroup", "WeylElt", "DEFAULT_WORD_CAP"]

DEFAULT_WORD_CAP = 10_000


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = tuple(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def _matvec(a: Matrix, v: Sequence[int]) -> Vector:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def _tmatvec(a: Matrix, v: Sequence[int]) -> Vector:
    """a^T v."""
    d = len(a)
    return tuple(sum(a[r][c] * v[r] for r in range(d)) for c in range(d))


class WeylElt:
    """An element of W^v; equality and hashing go through the Y-matrix."""

    __slots__ = ("group", "matrix", "_hash")

    def __init__(self, group: "WeylGroup", matrix: Matrix):
        self.group = group
        self.matrix = matrix
        self._hash = hash(matrix)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, WeylElt) and self.matrix == other.matrix and self.group is other.group

    def __hash__(self) -> int:
        return self._hash

    def __mul__(self, other: "WeylElt") -> "WeylElt":
        return self.group.multiply(self, other)

    def __repr__(self) -> str:
        return f"WeylElt({self.group.format_word(self.word)})"

    @property
    def word(self) -> tuple[int, ...]:
        """Canonical reduced word (0-based generator indices)."""
        return self.group.reduced_word(self)

    @property
    def length(self) -> int:
        return len(self.word)

    def inverse(self) -> "WeylElt":
        return self.group.inverse(self)

    def apply(self, lam: Sequence[int]) -> Vector:
        """Action on Y."""
        return _matvec(self.matrix, lam)

    def coapply(self, x: Sequence[int]) -> Vector:
        """Contragredient action on X."""
        return _tmatvec(self.group.inverse(self).matrix, x)

    def coapply_inverse(self, x: Sequence[int]) -> Vector:
        """w^{-1}(x) on X, which needs no inversion."""
        return _tmatvec(self.matrix, x)

    def is_identity(self) -> bool:
        return self.matrix == self.group.identity.matrix

    def inversion_set(self) -> tuple[Root, ...]:
        return self.group.inversion_set(self)

    def apply_root(self, beta: Root) -> Root:
        return self.group.apply_root(self, beta)


class WeylGroup:
    """The Weyl group of a root datum with per-group memo tables.

    Memo tables are guarded by a lock on write; values are deterministic so
    concurrent readers never see inconsistent data.
    """

    def __init__(self, datum: RootDatum, word_cap: int = DEFAULT_WORD_CAP):
        self.datum = datum
        self.rank = datum.rank
        self.word_cap = word_cap
        d = datum.lattice_rank
        self._lock = threading.Lock()
        ident = tuple(tuple(int(r == c) for c in range(d)) for r in range(d))
        self.identity = WeylElt(self, ident)
        self.generators = tuple(
            WeylElt(self, self._reflection_matrix(datum.simple_coroots[i], datum.simple_roots[i]))
            for i in range(self.rank)
        )
        self.simple_roots = tuple(simple_root(datum, i) for i in range(self.rank))
        self._words: dict[Matrix, tuple[int, ...]] = {ident: ()}
        self._inverses: dict[Matrix, WeylElt] = {ident: self.identity}
        self._inversion_sets: dict[Matrix, tuple[Root, ...]] = {}
        for i, g in enumerate(self.generators):
            self._words[g.matrix] = (i,)
            self._inverses[g.matrix] = g

    @staticmethod
    def _reflection_matrix(cor: Vector, root: Vector) -> Matrix:
        d = len(cor)
        return tuple(tuple(int(r == c) - cor[r] * root[c] for c in range(d)) for r in range(d))

    # construction -------------------------------------------------------

    def gen(self, i: int) -> WeylElt:
        return self.generators[i]

    def from_word(self, word: Iterable[int]) -> WeylElt:
        m = self.identity.matrix
        for i in word:
            m = _matmul(m, self.generators[i].matrix)
        return WeylElt(self, m)

    def from_matrix(self, matrix: Sequence[Sequence[int]]) -> WeylElt:
        """Wrap a raw matrix, checking it is reachable by descent stripping."""
        w = WeylElt(self, tuple(tuple(r) for r in matrix))
        self.reduced_word(w)
        return w

    def multiply(self, a: WeylElt, b: WeylElt) -> WeylElt:
        return WeylElt(self, _matmul(a.matrix, b.matrix))

    def inverse(self, w: WeylElt) -> WeylElt:
        inv = self._inverses.get(w.matrix)
        if inv is None:
            inv = self.from_word(reversed(self.reduced_word(w)))
            with self._lock:
                self._inverses[w.matrix] = inv
                self._inverses.setdefault(inv.matrix, w)
        return inv

    # descents and words -------------------------------------------------

    def _root_sign(self, x: Vector) -> int:
        exp = self.datum.expand_root(x)
        sign = expansion_sign(exp) if exp is not None else None
        if not sign:
            raise NotAWeylMatrix(f"image {x} of a simple root is not a root")
        return sign

    def _coroot_sign(self, y: Vector) -> int:
        exp = self.datum.expand_coroot(y)
        sign = expansion_sign(exp) if exp is not None else None
        if not sign:
            raise NotAWeylMatrix(f"image {y} of a simple coroot is not a coroot")
        return sign

    def is_left_descent(self, w: WeylElt, i: int) -> bool:
        """l(s_i w) < l(w), i.e. w^{-1}(alpha_i) is negative."""
        return self._root_sign(_tmatvec(w.matrix, self.datum.simple_roots[i])) < 0

    def is_right_descent(self, w: WeylElt, i: int) -> bool:
        """l(w s_i) < l(w), i.e. w(alpha_i^vee) is negative."""
        return self._coroot_sign(_matvec(w.matrix, self.datum.simple_coroots[i])) < 0

    def left_descents(self, w: WeylElt) -> tuple[int, ...]:
        return tuple(i for i in range(self.rank) if self.is_left_descent(w, i))

    def right_descents(self, w: WeylElt) -> tuple[int, ...]:
        return tuple(i for i in range(self.rank) if self.is_right_descent(w, i))

    def reduced_word(self, w: WeylElt) -> tuple[int, ...]:
        hit = self._words.get(w.matrix)
        if hit is not None:
            return hit
        trail: list[tuple[Matrix, int]] = []
        m = w.matrix
        while m not in self._words:
            if len(trail) >= self.word_cap:
                raise NotAWeylMatrix(f"descent stripping exceeded {self.word_cap} steps")
            cur = WeylElt(self, m)
            for i in range(self.rank):
                if self.is_left_descent(cur, i):
                    break
            else:
                raise NotAWeylMatrix("matrix has no left descent but is not the identity")
            trail.append((m, i))
            m = _matmul(self.generators[i].matrix, m)
        word = self._words[m]
        with self._lock:
            for mat, i in reversed(trail):
                word = (i,) + word
                self._words[mat] = word
        return self._words[w.matrix]

    def length(self, w: WeylElt) -> int:
        return len(self.reduced_word(w))

    def format_word(self, word: Sequence[int]) -> str:
        return " ".join(f"s{i + 1}" for i in word) if word else "e"

    # roots --------------------------------------------------------------

    def apply_root(self, w: WeylElt, beta: Root) -> Root:
        """w(beta) with coroot w(beta^vee)."""
        x = w.coapply(beta.root_vec)
        exp = self.datum.expand_root(x)
        return Root(x, w.apply(beta.coroot_vec), exp)

    def apply_root_inverse(self, w: WeylElt, beta: Root) -> Root:
        """w^{-1}(beta) without materializing w^{-1} separately on X."""
        x = w.coapply_inverse(beta.root_vec)
        return Root(x, self.inverse(w).apply(beta.coroot_vec), self.datum.expand_root(x))

    def inversion_set(self, w: WeylElt) -> tuple[Root, ...]:
        """Inv(w) = Phi_+ cap w^{-1} Phi_-, listed in reduced-word order.

        With w^{-1} = s_{i1} ... s_{ik} reduced, Inv(w) is
        {alpha_{i1}, s_{i1}(alpha_{i2}), ..., s_{i1}...s_{i(k-1)}(alpha_{ik})}.
        """
        hit = self._inversion_sets.get(w.matrix)
        if hit is not None:
            return hit
        word_inv = tuple(reversed(self.reduced_word(w)))
        out = []
        prefix = self.identity
        for i in word_inv:
            out.append(self.apply_root(prefix, self.simple_roots[i]))
            prefix = prefix * self.generators[i]
        result = tuple(out)
        with self._lock:
            self._inversion_sets[w.matrix] = result
        return result

    def reflection_of_root(self, beta: Root) -> WeylElt:
        """s_beta: y -> y - <y, beta> beta^vee on Y."""
        m = self._reflection_matrix(beta.coroot_vec, beta.root_vec)
        try:
            return self.from_matrix(m)
        except NotAWeylMatrix as exc:
            raise NotARealRoot(f"{beta.root_vec} does not define a Weyl reflection") from exc

    def reflection_root(self, r: WeylElt) -> Optional[Root]:
        """The positive root gamma with s_gamma = r, or None if r is not a reflection."""
        if r.length % 2 == 0:
            return None
        for gamma in self.inversion_set(r):
            if self._reflection_matrix(gamma.coroot_vec, gamma.root_vec) == r.matrix:
                return gamma
        return None

    def root(self, root_vec: Vector, coroot_vec: Vector) -> Root:
        return make_root(self.datum, root_vec, coroot_vec)

    # orders and distances ----------------------------------------------

    def bruhat_le(self, v: WeylElt, w: WeylElt) -> bool:
        """v <= w, by growing reduced subwords of the reduced word of w."""
        lv = self.length(v)
        if lv > self.length(w):
            return False
        if lv == self.length(w):
            return v == w
        level = {self.identity}
        for j in self.reduced_word(w):
            grown = set(level)
            for u in level:
                if self.length(u) < lv and not self.is_right_descent(u, j):
                    grown.add(u * self.generators[j])
            level = grown
        return v in level

    def relative_length(self, v: WeylElt, w: WeylElt) -> int:
        """l_v(w) = l(v^{-1} w) - l(v)."""
        return self.length(v.inverse() * w) - self.length(v)

    def relative_length_via_sets(self, v: WeylElt, w: WeylElt) -> int:
        """|Inv(w^{-1}) minus Inv(v^{-1})| - |Inv(w^{-1}) cap Inv(v^{-1})|."""
        a = {g.root_vec for g in self.inversion_set(w.inverse())}
        b = {g.root_vec for g in self.inversion_set(v.inverse())}
        return len(a - b) - len(a & b)

    def min_coset_rep(self, w: WeylElt, J: Iterable[int]) -> WeylElt:
        """u^J: strip right descents in J until none remain."""
        J = sorted(set(J))
        while True:
            for j in J:
                if self.is_right_descent(w, j):
                    w = w * self.generators[j]
                    break
            else:
                return w

    def parabolic_part(self, w: WeylElt, J: Iterable[int]) -> WeylElt:
        """u_J with w = u^J u_J."""
        return self.min_coset_rep(w, J).inverse() * w

    def coset_projection(self, v: WeylElt, J: Iterable[int], w: WeylElt) -> WeylElt:
        """The element of v W_J closest to w."""
        return w * self.min_coset_rep(w.inverse() * v, J)

    def vectorial_distance(self, v: WeylElt, w: WeylElt) -> WeylElt:
        return v.inverse() * w

    def numeric_distance(self, v: WeylElt, w: WeylElt) -> int:
        return self.length(v.inverse() * w)

    def on_minimal_gallery(self, a: WeylElt, z: WeylElt, b: WeylElt) -> bool:
        d = self.numeric_distance
        return d(a, z) + d(z, b) == d(a, b)

    def separating_reflection(self, v1: WeylElt, v2: WeylElt, w: WeylElt) -> Root:
        """A positive root whose reflection r moves w away from v1 and towards v2.

        Candidates are the walls crossed by v1, v2 or w; the first one in
        (root height, expansion) order passing both distance tests is returned.
        """
        if self.on_minimal_gallery(v1, v2, w):
            raise PreconditionViolated("v2 lies on a minimal gallery from v1 to w")
        d = self.numeric_distance
        d1, d2 = d(v1, w), d(v2, w)
        cands: dict[Vector, Root] = {}
        for u in (v1, v2, w):
            for g in self.inversion_set(u.inverse()):
                cands.setdefault(g.root_vec, g)
        for g in sorted(cands.values(), key=Root.sort_key):
            rw = self.reflection_of_root(g) * w
            if d(v1, rw) > d1 and d(v2, rw) < d2:
                return g
        raise PreconditionViolated("no separating wall found")

    # enumeration --------------------------------------------------------

    def elements_up_to(self, max_length: int) -> list[WeylElt]:
        """All elements of length <= max_length, ordered by (length, word)."""
        seen = {self.identity}
        frontier = [self.identity]
        out = [self.identity]
        for _ in range(max_length):
            nxt = []
            for u in frontier:
                for i in range(self.rank):
                    if self.is_left_descent(u, i):
                        continue
                    v = self.generators[i] * u
                    if v not in seen:
                        seen.add(v)
                        nxt.append(v)
            frontier = nxt
            out.extend(nxt)
        out.sort(key=lambda u: (u.length, u.word))
        return out

    def iter_bfs(self) -> Iterator[WeylElt]:
        """Breadth-first traversal of the whole group (infinite for indefinite type)."""
        seen = {self.identity}
        queue = deque([self.identity])
        while queue:
            u = queue.popleft()
            yield u
            for g in self.generators:
                v = g * u
                if v not in seen:
                    seen.add(v)
                    queue.append(v)

    def parse_word(self, text: str) -> WeylElt:
        """Parse 'e' or 's1 s2 ...' (1-based, as printed by format_word)."""
        from .errors import ParseError

        toks = text.replace("*", " ").split()
        if toks == ["e"] or not toks:
            return self.identity
        word = []
        for t in toks:
            if not (t.startswith("s") and t[1:].isdigit()) or not 1 <= int(t[1:]) <= self.rank:
                raise ParseError(f"bad generator {t!r}")
            word.append(int(t[1:]) - 1)
        return self.from_word(word)

    def pairing(self, lam: Sequence[int], x: Sequence[int]) -> int:
        return pair(lam, x)
