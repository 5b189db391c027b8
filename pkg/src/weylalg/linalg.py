"""
Exact sparse linear algebra over the rationals.

Matrices are stored row-wise as ``{row: {col: Fraction}}``. Rank uses
fraction-free elimination: rows are scaled to primitive integer vectors and
reduced against pivots with integer combinations, dividing out the content
after each step so entries stay small.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .errors import ArgumentError


class SparseMatrix:
    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int, rows=None):
        self.nrows = nrows
        self.ncols = ncols
        self.rows = {}
        if rows:
            for r, row in rows.items():
                clean = {c: Fraction(v) for c, v in row.items() if v}
                if clean:
                    self.rows[r] = clean

    @classmethod
    def from_columns(cls, nrows: int, columns: list) -> SparseMatrix:
        """``columns[j]`` is a ``{row: value}`` dict, the image of basis vector ``j``."""
        m = cls(nrows, len(columns))
        for j, col in enumerate(columns):
            for i, v in col.items():
                if v:
                    m.rows.setdefault(i, {})[j] = Fraction(v)
        return m

    @classmethod
    def from_dense(cls, dense) -> SparseMatrix:
        dense = [list(r) for r in dense]
        ncols = len(dense[0]) if dense else 0
        return cls(len(dense), ncols, {i: dict(enumerate(r)) for i, r in enumerate(dense)})

    def __getitem__(self, key):
        i, j = key
        return self.rows.get(i, {}).get(j, Fraction(0))

    def nnz(self) -> int:
        return sum(len(r) for r in self.rows.values())

    def is_zero(self) -> bool:
        return not self.rows

    def to_dense(self) -> list:
        return [[self[i, j] for j in range(self.ncols)] for i in range(self.nrows)]

    def transpose(self) -> SparseMatrix:
        t = SparseMatrix(self.ncols, self.nrows)
        for i, row in self.rows.items():
            for j, v in row.items():
                t.rows.setdefault(j, {})[i] = v
        return t

    def __matmul__(self, other: SparseMatrix) -> SparseMatrix:
        if self.ncols != other.nrows:
            raise ArgumentError(f"shape mismatch {self.ncols} vs {other.nrows}")
        out = {}
        for i, row in self.rows.items():
            acc = {}
            for k, v in row.items():
                orow = other.rows.get(k)
                if not orow:
                    continue
                for j, w in orow.items():
                    acc[j] = acc.get(j, 0) + v * w
            acc = {j: v for j, v in acc.items() if v}
            if acc:
                out[i] = acc
        m = SparseMatrix(self.nrows, other.ncols)
        m.rows = out
        return m

    def __eq__(self, other):
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return (self.nrows, self.ncols) == (other.nrows, other.ncols) and self.rows == other.rows

    def __repr__(self):
        return f"SparseMatrix({self.nrows}x{self.ncols}, nnz={self.nnz()})"

    def rank(self) -> int:
        return rank(self.rows.values())


def _primitive(row: dict) -> dict:
    den = 1
    for v in row.values():
        den = lcm(den, v.denominator)
    ints = {c: int(v * den) for c, v in row.items()}
    g = 0
    for v in ints.values():
        g = gcd(g, v)
    if g > 1:
        ints = {c: v // g for c, v in ints.items()}
    return ints


def rank(rows) -> int:
    """Rank over the rationals of an iterable of sparse ``{col: value}`` rows."""
    pivots = {}
    for row in rows:
        if not row:
            continue
        r = _primitive(row)
        while r:
            c = min(r)
            p = pivots.get(c)
            if p is None:
                pivots[c] = r
                break
            a, b = p[c], r[c]
            g = gcd(a, b)
            a, b = a // g, b // g
            new = {}
            for k, v in r.items():
                new[k] = a * v
            for k, v in p.items():
                w = new.get(k, 0) - b * v
                if w:
                    new[k] = w
                else:
                    new.pop(k, None)
            cont = 0
            for v in new.values():
                cont = gcd(cont, v)
                if cont == 1:
                    break
            if cont > 1:
                new = {k: v // cont for k, v in new.items()}
            r = new
    return len(pivots)


def inverse(matrix) -> list:
    """Inverse of a square rational matrix by Gauss-Jordan elimination."""
    n = len(matrix)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            raise ArgumentError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def dense_rank(matrix) -> int:
    return rank({j: v for j, v in enumerate(row) if v} for row in matrix)


@dataclass
class ChainComplexSlice:
    """One differential ``d: C_source -> C_target`` with explicit bases.

    Column ``j`` of ``matrix`` is the image of ``source_basis[j]``.
    """

    source_degree: int
    target_degree: int
    source_basis: list
    target_basis: list
    matrix: SparseMatrix

    def rank(self) -> int:
        return self.matrix.rank()
