"""Exact rational matrices with fraction-free elimination.

Rank and determinant clear denominators row by row and then run
Bareiss-style integer elimination, so every intermediate value is an
exact minor of the scaled matrix and entry growth stays polynomial.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import ShapeError
from .rational import rat


class RMatrix:
    """Immutable matrix over the rationals, stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        ent = tuple(rat(e) for e in entries)
        if len(ent) != rows * cols:
            raise ShapeError(f"expected {rows * cols} entries, got {len(ent)}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", ent)

    def __setattr__(self, *_):
        raise AttributeError("RMatrix is immutable")

    # -- construction ---------------------------------------------------

    @staticmethod
    def from_rows(rows: Sequence[Sequence]) -> "RMatrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        if any(len(row) != c for row in rows):
            raise ShapeError("ragged rows")
        return RMatrix(r, c, [e for row in rows for e in row])

    @staticmethod
    def identity(n: int) -> "RMatrix":
        return RMatrix(n, n, [Fraction(int(i == j)) for i in range(n) for j in range(n)])

    @staticmethod
    def zeros(rows: int, cols: int) -> "RMatrix":
        return RMatrix(rows, cols, [Fraction(0)] * (rows * cols))

    # -- access ----------------------------------------------------------

    def at(self, r: int, c: int) -> Fraction:
        return self.entries[r * self.cols + c]

    def row(self, r: int) -> tuple:
        return self.entries[r * self.cols:(r + 1) * self.cols]

    def col(self, c: int) -> tuple:
        return tuple(self.entries[r * self.cols + c] for r in range(self.rows))

    def to_rows(self) -> list:
        return [list(self.row(r)) for r in range(self.rows)]

    def is_zero(self) -> bool:
        return all(e == 0 for e in self.entries)

    # -- algebra ----------------------------------------------------------

    def __add__(self, other: "RMatrix") -> "RMatrix":
        self._same_shape(other)
        return RMatrix(self.rows, self.cols,
                       [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "RMatrix") -> "RMatrix":
        self._same_shape(other)
        return RMatrix(self.rows, self.cols,
                       [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> "RMatrix":
        return RMatrix(self.rows, self.cols, [-a for a in self.entries])

    def scale(self, s) -> "RMatrix":
        s = rat(s)
        return RMatrix(self.rows, self.cols, [s * a for a in self.entries])

    def __matmul__(self, other: "RMatrix") -> "RMatrix":
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.shape()} by {other.shape()}")
        out = []
        for r in range(self.rows):
            row = self.row(r)
            for c in range(other.cols):
                out.append(sum((row[k] * other.at(k, c) for k in range(self.cols)),
                               Fraction(0)))
        return RMatrix(self.rows, other.cols, out)

    def mul_vec(self, vec: Sequence) -> tuple:
        v = [rat(x) for x in vec]
        if len(v) != self.cols:
            raise ShapeError("vector length mismatch")
        return tuple(sum((self.at(r, k) * v[k] for k in range(self.cols)), Fraction(0))
                     for r in range(self.rows))

    def transpose(self) -> "RMatrix":
        return RMatrix(self.cols, self.rows,
                       [self.at(r, c) for c in range(self.cols) for r in range(self.rows)])

    def hstack(self, other: "RMatrix") -> "RMatrix":
        if self.rows != other.rows:
            raise ShapeError("row count mismatch in hstack")
        out = []
        for r in range(self.rows):
            out.extend(self.row(r))
            out.extend(other.row(r))
        return RMatrix(self.rows, self.cols + other.cols, out)

    def vstack(self, other: "RMatrix") -> "RMatrix":
        if self.cols != other.cols:
            raise ShapeError("column count mismatch in vstack")
        return RMatrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    def shape(self) -> tuple:
        return (self.rows, self.cols)

    # -- elimination -------------------------------------------------------

    def _integer_rows(self) -> tuple:
        """Scale each row to integers; returns (rows, product of scales)."""
        rows = []
        scale = Fraction(1)
        for r in range(self.rows):
            row = self.row(r)
            mult = 1
            for e in row:
                mult = mult * e.denominator // gcd(mult, e.denominator)
            scale *= mult
            rows.append([int(e * mult) for e in row])
        return rows, scale

    def rank(self) -> int:
        """Exact rank via fraction-free (Bareiss) elimination."""
        m, _ = self._integer_rows()
        nr, nc = self.rows, self.cols
        prev = 1
        piv_r = 0
        for piv_c in range(nc):
            if piv_r == nr:
                break
            pr = next((r for r in range(piv_r, nr) if m[r][piv_c] != 0), None)
            if pr is None:
                continue
            if pr != piv_r:
                m[pr], m[piv_r] = m[piv_r], m[pr]
            p = m[piv_r][piv_c]
            for r in range(piv_r + 1, nr):
                factor = m[r][piv_c]
                for c in range(piv_c + 1, nc):
                    m[r][c] = (p * m[r][c] - factor * m[piv_r][c]) // prev
                m[r][piv_c] = 0
            prev = p
            piv_r += 1
        return piv_r

    def det(self) -> Fraction:
        """Exact determinant (Bareiss for sizes above three)."""
        if self.rows != self.cols:
            raise ShapeError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return Fraction(1)
        if n == 1:
            return self.entries[0]
        if n == 2:
            a, b, c, d = self.entries
            return a * d - b * c
        if n == 3:
            a, b, c, d, e, f, g, h, i = self.entries
            return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
        m, scale = self._integer_rows()
        sign = 1
        prev = 1
        for k in range(n - 1):
            pr = next((r for r in range(k, n) if m[r][k] != 0), None)
            if pr is None:
                return Fraction(0)
            if pr != k:
                m[pr], m[k] = m[k], m[pr]
                sign = -sign
            p = m[k][k]
            for r in range(k + 1, n):
                factor = m[r][k]
                for c in range(k + 1, n):
                    m[r][c] = (p * m[r][c] - factor * m[k][c]) // prev
                m[r][k] = 0
            prev = p
        return Fraction(sign * m[n - 1][n - 1]) / scale

    def rref(self) -> tuple:
        """Reduced row echelon form; returns (rows, pivot column list)."""
        m = self.to_rows()
        nr, nc = self.rows, self.cols
        pivots = []
        piv_r = 0
        for piv_c in range(nc):
            if piv_r == nr:
                break
            pr = next((r for r in range(piv_r, nr) if m[r][piv_c] != 0), None)
            if pr is None:
                continue
            m[pr], m[piv_r] = m[piv_r], m[pr]
            p = m[piv_r][piv_c]
            m[piv_r] = [e / p for e in m[piv_r]]
            for r in range(nr):
                if r != piv_r and m[r][piv_c] != 0:
                    f = m[r][piv_c]
                    m[r] = [e - f * q for e, q in zip(m[r], m[piv_r])]
            pivots.append(piv_c)
            piv_r += 1
        return m, pivots

    def nullspace(self) -> list:
        """Basis of the right kernel, as tuples of Fractions."""
        m, pivots = self.rref()
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        for fc in free:
            v = [Fraction(0)] * self.cols
            v[fc] = Fraction(1)
            for r, pc in enumerate(pivots):
                v[pc] = -m[r][fc]
            basis.append(tuple(v))
        return basis

    def inverse(self) -> "RMatrix":
        if self.rows != self.cols:
            raise ShapeError("inverse of a non-square matrix")
        n = self.rows
        aug = RMatrix(n, 2 * n, [self.at(r, c) if c < n else Fraction(int(c - n == r))
                                 for r in range(n) for c in range(2 * n)])
        m, pivots = aug.rref()
        if pivots != list(range(n)):
            raise ShapeError("matrix is singular")
        return RMatrix(n, n, [m[r][c] for r in range(n) for c in range(n, 2 * n)])

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (isinstance(other, RMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"RMatrix({self.to_rows()!r})"

    def _same_shape(self, other: "RMatrix"):
        if self.rows != other.rows or self.cols != other.cols:
            raise ShapeError(f"shape mismatch: {self.shape()} vs {other.shape()}")


def stack_rows(vectors: Sequence[Sequence]) -> RMatrix:
    """Matrix whose rows are the given equal-length vectors."""
    return RMatrix.from_rows([list(v) for v in vectors])
