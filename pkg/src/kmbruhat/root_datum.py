"""Generalized Cartan matrices and integral Kac-Moody root data.

Coweights (elements of Y) and weights (elements of X) are tuples of Python
ints of length ``lattice_rank``; X is identified with the dual of Y through
the standard dot product.

Datum file grammar (one statement per line, ``#`` starts a comment, numbers
separated by spaces and/or commas)::

    row 2 -2            # one line per matrix row, in order
    row -2 2
    lattice_rank 3      # optional explicit realization from here on
    coroot 1 0 0        # |I| lines: simple coroots in Y
    coroot 0 1 0
    root 2 -2 0         # |I| lines: simple roots in X
    root -2 2 1
    weight 1 0 0        # |I| lines: fundamental weights in X
    weight 0 1 0

When any realization line is present, ``coroot``, ``root`` and ``weight``
lines are all required; ``lattice_rank`` may be omitted and is then read off
the vector length.  Without them the minimal realization is built.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, Optional, Sequence

import sympy

from .errors import (
    AsymmetricZero,
    DiagonalNotTwo,
    DimensionMismatch,
    InvalidRealization,
    ParseError,
    PositiveOffDiagonal,
)

Vector = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]

__all__ = [
    "GCM",
    "RootDatum",
    "validate_gcm",
    "build_minimal_realization",
    "pair",
    "height",
    "parse_datum",
    "format_datum",
    "load_datum",
    "parse_cartan",
    "datum_from_cartan",
]


@dataclass(frozen=True)
class GCM:
    """A validated generalized Cartan matrix; build it with :func:`validate_gcm`."""

    entries: Matrix

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    @cached_property
    def rank(self) -> int:
        return sympy.Matrix(self.entries).rank()

    @property
    def corank(self) -> int:
        return self.size - self.rank


def validate_gcm(matrix: Sequence[Sequence[int]]) -> GCM:
    rows = [list(r) for r in matrix]
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise DimensionMismatch("a generalized Cartan matrix must be square and non-empty")
    for r in rows:
        for a in r:
            if isinstance(a, bool) or not isinstance(a, int):
                raise TypeError(f"matrix entries must be integers, got {a!r}")
    for i in range(n):
        for j in range(n):
            a = rows[i][j]
            if i == j:
                if a != 2:
                    raise DiagonalNotTwo(i, j, f"found {a}")
            elif a > 0:
                raise PositiveOffDiagonal(i, j, f"found {a}")
            elif (a == 0) != (rows[j][i] == 0):
                raise AsymmetricZero(i, j, f"a_ij={a}, a_ji={rows[j][i]}")
    return GCM(tuple(tuple(r) for r in rows))


class _LatticeSolver:
    """Exact coordinates of a vector in a fixed family of independent columns.

    ``solve(x)`` returns the integer coefficients c with sum c_k * col_k == x,
    or None when x is not an integer combination of the columns.
    """

    def __init__(self, columns: Sequence[Vector]):
        self.columns = tuple(columns)
        n = len(columns)
        d = len(columns[0])
        full = sympy.Matrix(d, n, lambda r, c: columns[c][r])
        _, pivots = full.T.rref()
        rows = list(pivots)
        if len(rows) != n:
            raise InvalidRealization("vectors are not linearly independent")
        square = full.extract(rows, list(range(n)))
        self.det = int(square.det())
        self.adj = tuple(tuple(int(v) for v in square.adjugate().row(r)) for r in range(n))
        self.rows = tuple(rows)

    def solve(self, x: Vector) -> Optional[Vector]:
        det = self.det
        sub = [x[r] for r in self.rows]
        coeffs = []
        for adj_row in self.adj:
            num = sum(a * b for a, b in zip(adj_row, sub))
            if num % det:
                return None
            coeffs.append(num // det)
        d = len(x)
        for r in range(d):
            if sum(c * col[r] for c, col in zip(coeffs, self.columns)) != x[r]:
                return None
        return tuple(coeffs)


@dataclass(frozen=True)
class RootDatum:
    """A generalized Cartan matrix with an integral realization.

    Invariants checked on construction: ``<coroot_i, root_j> = a_ij``, both
    simple families independent, ``<coroot_i, weight_j> = delta_ij`` and
    ``rho = sum(weights)``.
    """

    gcm: GCM
    lattice_rank: int
    simple_coroots: tuple[Vector, ...]
    simple_roots: tuple[Vector, ...]
    fundamental_weights: tuple[Vector, ...]
    rho: Vector
    _root_solver: _LatticeSolver = field(init=False, repr=False, compare=False)
    _coroot_solver: _LatticeSolver = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n, d = self.gcm.size, self.lattice_rank
        families = (self.simple_coroots, self.simple_roots, self.fundamental_weights)
        if any(len(f) != n for f in families):
            raise InvalidRealization(f"expected {n} coroots, roots and weights")
        if any(len(v) != d for f in families for v in f) or len(self.rho) != d:
            raise InvalidRealization(f"all realization vectors must have length {d}")
        for i in range(n):
            for j in range(n):
                if _dot(self.simple_coroots[i], self.simple_roots[j]) != self.gcm[i, j]:
                    raise InvalidRealization(
                        f"<coroot {i + 1}, root {j + 1}> != a_{i + 1}{j + 1}")
                if _dot(self.simple_coroots[i], self.fundamental_weights[j]) != int(i == j):
                    raise InvalidRealization(
                        f"<coroot {i + 1}, weight {j + 1}> must be {int(i == j)}")
        rho = tuple(sum(col) for col in zip(*self.fundamental_weights))
        if rho != self.rho:
            raise InvalidRealization("rho must be the sum of the fundamental weights")
        object.__setattr__(self, "_root_solver", _LatticeSolver(self.simple_roots))
        object.__setattr__(self, "_coroot_solver", _LatticeSolver(self.simple_coroots))

    @property
    def rank(self) -> int:
        """Number of simple roots |I|."""
        return self.gcm.size

    def pair(self, lam: Sequence[int], x: Sequence[int]) -> int:
        return pair(lam, x)

    def height(self, lam: Sequence[int]) -> int:
        return pair(lam, self.rho)

    def expand_root(self, x: Vector) -> Optional[Vector]:
        """Coefficients of ``x`` over the simple roots, or None if outside their span."""
        return self._root_solver.solve(x)

    def expand_coroot(self, y: Vector) -> Optional[Vector]:
        return self._coroot_solver.solve(y)

    def coroot_combination(self, coeffs: Sequence[int]) -> Vector:
        return _combine(coeffs, self.simple_coroots, self.lattice_rank)

    def root_combination(self, coeffs: Sequence[int]) -> Vector:
        return _combine(coeffs, self.simple_roots, self.lattice_rank)

    def zero(self) -> Vector:
        return (0,) * self.lattice_rank


def _dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def _combine(coeffs: Sequence[int], basis: Sequence[Vector], d: int) -> Vector:
    out = [0] * d
    for c, v in zip(coeffs, basis):
        if c:
            for k in range(d):
                out[k] += c * v[k]
    return tuple(out)


def pair(lam: Sequence[int], x: Sequence[int]) -> int:
    """The duality bracket <lam, x> between Y and X."""
    if len(lam) != len(x):
        raise DimensionMismatch(f"cannot pair vectors of lengths {len(lam)} and {len(x)}")
    return _dot(lam, x)


def height(datum: RootDatum, lam: Sequence[int]) -> int:
    """ht(lam) = <lam, rho>."""
    return pair(lam, datum.rho)


def build_minimal_realization(gcm: GCM) -> RootDatum:
    """Realization of dimension |I| + corank with coroots the first unit vectors.

    The root alpha_j has the j-th column of A as its first |I| coordinates.
    For the k-th column of A that is dependent on earlier columns, alpha_j
    gets a 1 in the extra coordinate |I| + k, which makes the roots independent.
    """
    n = gcm.size
    d = n + gcm.corank
    _, pivots = sympy.Matrix(gcm.entries).rref()
    dependent = [j for j in range(n) if j not in pivots]
    roots = []
    for j in range(n):
        col = [gcm[i, j] for i in range(n)] + [0] * (d - n)
        if j in dependent:
            col[n + dependent.index(j)] = 1
        roots.append(tuple(col))
    coroots = tuple(tuple(int(k == i) for k in range(d)) for i in range(n))
    weights = coroots
    rho = tuple(int(k < n) for k in range(d))
    return RootDatum(gcm, d, coroots, tuple(roots), weights, rho)


def datum_from_cartan(matrix: Sequence[Sequence[int]]) -> RootDatum:
    return build_minimal_realization(validate_gcm(matrix))


_INT = re.compile(r"^[+-]?\d+$")


def _ints(tokens: Iterable[str], lineno: int) -> list[int]:
    out = []
    for tok in tokens:
        if not _INT.match(tok):
            raise ParseError(f"line {lineno}: expected an integer, got {tok!r}")
        out.append(int(tok))
    return out


def parse_cartan(text: str) -> GCM:
    """Parse the ``--cartan`` flag form: rows separated by ';', entries by ','."""
    rows = []
    for chunk in text.split(";"):
        toks = [t for t in re.split(r"[,\s]+", chunk.strip()) if t]
        if not toks:
            raise ParseError(f"empty row in {text!r}")
        rows.append(_ints(toks, 1))
    try:
        return validate_gcm(rows)
    except DimensionMismatch as exc:
        raise ParseError(str(exc)) from exc


def parse_datum(text: str) -> RootDatum:
    rows: list[list[int]] = []
    coroots: list[Vector] = []
    roots: list[Vector] = []
    weights: list[Vector] = []
    lattice_rank: Optional[int] = None
    targets = {"coroot": coroots, "root": roots, "weight": weights}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, *rest = [t for t in re.split(r"[,\s]+", line) if t]
        values = _ints(rest, lineno)
        if key == "row":
            rows.append(values)
        elif key == "lattice_rank":
            if len(values) != 1 or values[0] < 1:
                raise ParseError(f"line {lineno}: lattice_rank takes one positive integer")
            lattice_rank = values[0]
        elif key in targets:
            targets[key].append(tuple(values))
        else:
            raise ParseError(f"line {lineno}: unknown keyword {key!r}")
    if not rows:
        raise ParseError("datum file has no 'row' lines")
    try:
        gcm = validate_gcm(rows)
    except DimensionMismatch as exc:
        raise ParseError(str(exc)) from exc
    if not (coroots or roots or weights or lattice_rank):
        return build_minimal_realization(gcm)
    if not (coroots and roots and weights):
        raise ParseError("an explicit realization needs coroot, root and weight lines")
    d = lattice_rank if lattice_rank is not None else len(coroots[0])
    rho = tuple(sum(col) for col in zip(*weights)) if all(len(w) == d for w in weights) else ()
    datum = RootDatum(gcm, d, tuple(coroots), tuple(roots), tuple(weights), rho)
    for name, family in (("coroots", coroots), ("roots", roots)):
        if sympy.Matrix(family).rank() != gcm.size:
            raise InvalidRealization(f"simple {name} are not linearly independent")
    return datum


def format_datum(datum: RootDatum) -> str:
    """Render a datum in the file grammar; ``parse_datum`` inverts it."""

    def line(key: str, values: Iterable[int]) -> str:
        return " ".join([key, *map(str, values)])

    out = [line("row", r) for r in datum.gcm.entries]
    out.append(line("lattice_rank", [datum.lattice_rank]))
    out += [line("coroot", v) for v in datum.simple_coroots]
    out += [line("root", v) for v in datum.simple_roots]
    out += [line("weight", v) for v in datum.fundamental_weights]
    return "\n".join(out) + "\n"


def load_datum(path: str | Path) -> RootDatum:
    return parse_datum(Path(path).read_text())
