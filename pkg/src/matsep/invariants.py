"""Generating semi-invariants and the counting formulas attached to them.

Two actions are covered.  For n-tuples of 2x2 matrices acted on by a pair
of determinant-one groups (left and right multiplication), the generating
invariants are the determinants det(A_i), the pairings

    <A_i|A_j> = Tr(A_i)Tr(A_j) - Tr(A_i A_j),   i < j,

and the quadrilinear invariants xi(A_i,A_j,A_k,A_l) defined as the
coefficient of e_i e_j e_k e_l in the determinant of the doubled block
matrix [[e_i A_i, e_j A_j], [e_k A_k, e_l A_l]].  For l x n matrices under
left determinant-one multiplication the generators are the maximal minors.

Generator vectors are reported in a frozen canonical order (determinants,
then pairings in lexicographic index order, then quadrilinear terms in
lexicographic order) so separation witnesses are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Sequence, Tuple

from .errors import PreconditionError, ShapeError
from .matrix import RMatrix
from .rational import rat


@dataclass(frozen=True)
class MatrixTupleLR:
    """An n-tuple of 2x2 rational matrices."""

    matrices: Tuple[RMatrix, ...]

    def __post_init__(self):
        if not self.matrices:
            raise ShapeError("tuple must contain at least one matrix")
        for m in self.matrices:
            if m.shape() != (2, 2):
                raise ShapeError("every component must be 2x2")

    @property
    def n(self) -> int:
        return len(self.matrices)

    @staticmethod
    def from_entries(entries: Sequence[Sequence]) -> "MatrixTupleLR":
        """Build from per-matrix entry quadruples (a, b, c, d)."""
        return MatrixTupleLR(tuple(RMatrix(2, 2, e) for e in entries))

    def entry_vector(self, r: int, c: int) -> Tuple[Fraction, ...]:
        """The length-n vector of (r, c) entries across the tuple."""
        return tuple(m.at(r, c) for m in self.matrices)

    def is_upper(self) -> bool:
        return all(m.at(1, 0) == 0 for m in self.matrices)


@dataclass(frozen=True)
class LeftMatrix:
    """An l x n rational matrix, l >= 2, for the left action."""

    matrix: RMatrix

    def __post_init__(self):
        if self.matrix.rows < 2:
            raise ShapeError("left action needs at least two rows")

    @property
    def l(self) -> int:
        return self.matrix.rows

    @property
    def n(self) -> int:
        return self.matrix.cols

    @staticmethod
    def from_rows(rows: Sequence[Sequence]) -> "LeftMatrix":
        return LeftMatrix(RMatrix.from_rows(rows))


@dataclass(frozen=True)
class GeneratorVector:
    """All generating invariants of a tuple, in canonical order."""

    n: int
    dets: Tuple[Fraction, ...]
    brackets: Tuple[Fraction, ...]
    xis: Tuple[Fraction, ...]

    def __post_init__(self):
        n = self.n
        if (len(self.dets), len(self.brackets), len(self.xis)) != \
                (n, comb(n, 2), comb(n, 4)):
            raise ShapeError("generator block lengths do not match n")

    def __len__(self) -> int:
        return len(self.dets) + len(self.brackets) + len(self.xis)

    def labeled(self):
        """Yield ((kind, 1-based index tuple), value) in canonical order."""
        for i, v in enumerate(self.dets, start=1):
            yield ("det", (i,)), v
        for (i, j), v in zip(combinations(range(1, self.n + 1), 2), self.brackets):
            yield ("bracket", (i, j)), v
        for idx, v in zip(combinations(range(1, self.n + 1), 4), self.xis):
            yield ("xi", idx), v

    def values(self) -> Tuple[Fraction, ...]:
        return self.dets + self.brackets + self.xis


def det_inv(A: MatrixTupleLR, i: int) -> Fraction:
    """det(A_i), 1-based index."""
    if not 1 <= i <= A.n:
        raise PreconditionError(f"index {i} out of range 1..{A.n}")
    return A.matrices[i - 1].det()


def bracket(A: MatrixTupleLR, i: int, j: int) -> Fraction:
    """Tr(A_i)Tr(A_j) - Tr(A_i A_j) for 1 <= i < j <= n."""
    if not (1 <= i < j <= A.n):
        raise PreconditionError(f"need 1 <= i < j <= {A.n}, got ({i}, {j})")
    X, Y = A.matrices[i - 1], A.matrices[j - 1]
    tr_x = X.at(0, 0) + X.at(1, 1)
    tr_y = Y.at(0, 0) + Y.at(1, 1)
    tr_xy = (X.at(0, 0) * Y.at(0, 0) + X.at(0, 1) * Y.at(1, 0)
             + X.at(1, 0) * Y.at(0, 1) + X.at(1, 1) * Y.at(1, 1))
    return tr_x * tr_y - tr_xy


def _doubled_block(A: MatrixTupleLR, idx: Tuple[int, int, int, int],
                   weights: Tuple[int, int, int, int]) -> RMatrix:
    """4x4 matrix [[w0*A_i, w1*A_j], [w2*A_k, w3*A_l]] (0-based idx)."""
    mats = [A.matrices[m].scale(w) for m, w in zip(idx, weights)]
    top = mats[0].hstack(mats[1])
    bottom = mats[2].hstack(mats[3])
    return top.vstack(bottom)


def xi(A: MatrixTupleLR, i: int, j: int, k: int, l: int) -> Fraction:
    """Multilinear coefficient of the doubled 2x2 block determinant.

    Extracted by inclusion-exclusion over the sixteen 0/1 weightings of
    the four blocks: sum over S of (-1)^(4-|S|) det(block matrix with
    weight 1 on the blocks in S and 0 elsewhere).
    """
    if not (1 <= i < j < k < l <= A.n):
        raise PreconditionError("indices must satisfy 1 <= i < j < k < l <= n")
    idx = (i - 1, j - 1, k - 1, l - 1)
    total = Fraction(0)
    for mask in range(16):
        weights = tuple((mask >> b) & 1 for b in range(4))
        size = sum(weights)
        term = _doubled_block(A, idx, weights).det()
        total += term if (4 - size) % 2 == 0 else -term
    return total


def generators_lr(A: MatrixTupleLR) -> GeneratorVector:
    """All generating invariants in the frozen canonical order."""
    n = A.n
    dets = tuple(det_inv(A, i) for i in range(1, n + 1))
    brackets = tuple(bracket(A, i, j) for i, j in combinations(range(1, n + 1), 2))
    xis = tuple(xi(A, *idx) for idx in combinations(range(1, n + 1), 4))
    return GeneratorVector(n, dets, brackets, xis)


def minors_left(A: LeftMatrix) -> Tuple[Fraction, ...]:
    """All maximal minors, column subsets in lexicographic order.

    Empty when n < l: the invariant ring is trivial there.
    """
    l, n = A.l, A.n
    if n < l:
        return ()
    out = []
    for cols in combinations(range(n), l):
        sub = RMatrix(l, l, [A.matrix.at(r, c) for r in range(l) for c in cols])
        out.append(sub.det())
    return tuple(out)


def minor_column_sets(l: int, n: int) -> Tuple[Tuple[int, ...], ...]:
    """1-based column index sets matching the order of minors_left."""
    if n < l:
        return ()
    return tuple(tuple(c + 1 for c in cols) for cols in combinations(range(n), l))


def generator_count_lr(n: int) -> int:
    """Size of the generating set: (n^4 - 6n^3 + 23n^2 + 6n) / 24."""
    if n < 1:
        raise PreconditionError("n must be at least 1")
    num = n**4 - 6 * n**3 + 23 * n**2 + 6 * n
    assert num % 24 == 0
    count = num // 24
    assert count == n + comb(n, 2) + comb(n, 4)
    return count


def invariant_dim_lr(n: int) -> int:
    """Krull dimension of the invariant ring of the two-sided action."""
    if n < 1:
        raise PreconditionError("n must be at least 1")
    if n == 1:
        return 1
    if n == 2:
        return 3
    return 4 * n - 6


def invariant_dim_left(l: int, n: int) -> int:
    """Krull dimension l*n - l^2 + 1 of the left action, 0 for n < l."""
    if l < 2:
        raise PreconditionError("l must be at least 2")
    if n < l:
        return 0
    return l * n - l * l + 1


def lower_bound_lr(n: int) -> int:
    """Minimum size of any separating set for the two-sided action.

    The closed form 5n - 9 dips below the Krull dimension for small n,
    and the dimension is always a valid lower bound, so take the max.
    """
    return max(invariant_dim_lr(n), 5 * n - 9)


def lower_bound_left(l: int, n: int) -> int:
    """Minimum separating-set size for the left action, n >= l >= 2."""
    if l < 2:
        raise PreconditionError("l must be at least 2")
    if n < l:
        raise PreconditionError("need n >= l")
    return max(invariant_dim_left(l, n), (2 * l - 2) * n - 2 * (l * l - l))
