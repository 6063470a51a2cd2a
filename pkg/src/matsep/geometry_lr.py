"""Geometry of the two-sided action on tuples of 2x2 matrices.

Covers the stability test (simultaneous triangularizability), nullcone
membership by degree-two invariants, the correspondence between
non-separated upper-triangular pairs and nullcone points with two free
vectors, membership in the two nullcone components (row-proportional and
column-proportional), the diagonal-proportionality patterns cut out by
that correspondence, and the stacked-row rank criteria for membership in
the closure of the action graph.

Labeling convention: ``in_cr``/``in_cc`` test the explicit patterns

    row pattern:     d = lam * d'  and  a' = lam * a,
    column pattern:  d = lam * a'  and  d' = lam * a,

both taken up to projective proportionality so the sets are closed.  The
correspondence map sends row-pattern pairs onto column-proportional
nullcone tuples and column-pattern pairs onto row-proportional ones; the
identity tests in the certification module pin this down.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import FrozenSet, List, Optional, Tuple

from .binform import BinaryForm, binary_form_gcd, rational_projective_roots
from .errors import PreconditionError, ShapeError
from .invariants import MatrixTupleLR, bracket, det_inv
from .matrix import RMatrix, stack_rows
from .separation import GroupElementLR, act_lr, separated_lr

ProjectivePoint = Tuple[Fraction, Fraction]


@dataclass(frozen=True)
class UpperPair:
    """A pair of upper-triangular tuples of the same length."""

    first: MatrixTupleLR
    second: MatrixTupleLR

    def __post_init__(self):
        if self.first.n != self.second.n:
            raise ShapeError("pair components must have the same length")
        if not (self.first.is_upper() and self.second.is_upper()):
            raise ShapeError("both components must be upper-triangular")

    @property
    def n(self) -> int:
        return self.first.n

    # entry vectors across the tuple, named after the generic pair
    def a_vec(self):
        return self.first.entry_vector(0, 0)

    def b_vec(self):
        return self.first.entry_vector(0, 1)

    def d_vec(self):
        return self.first.entry_vector(1, 1)

    def a2_vec(self):
        return self.second.entry_vector(0, 0)

    def b2_vec(self):
        return self.second.entry_vector(0, 1)

    def d2_vec(self):
        return self.second.entry_vector(1, 1)


@dataclass(frozen=True)
class PhiImage:
    """A nullcone candidate plus the two free upper-right vectors."""

    B: MatrixTupleLR
    b: Tuple[Fraction, ...]
    b2: Tuple[Fraction, ...]

    def __post_init__(self):
        if not (self.B.n == len(self.b) == len(self.b2)):
            raise ShapeError("vector lengths must match the tuple length")


@dataclass(frozen=True)
class StabilityReport:
    stable: bool
    triangularizer: Optional[GroupElementLR] = None
    common_direction: Optional[ProjectivePoint] = None


def direction_forms(A: MatrixTupleLR) -> List[BinaryForm]:
    """Quadratic forms q_ij(v) = det[A_i v | A_j v], one per index pair.

    A common projective root of all q_ij is exactly a direction v whose
    images A_1 v, ..., A_n v span at most a line.
    """
    forms = []
    for i, j in combinations(range(A.n), 2):
        X, Y = A.matrices[i], A.matrices[j]
        a_i, b_i, c_i, d_i = X.entries
        a_j, b_j, c_j, d_j = Y.entries
        # det[(a_i v1 + b_i v2, c_i v1 + d_i v2) | (same for j)]
        c_uu = a_i * c_j - a_j * c_i
        c_uv = a_i * d_j + b_i * c_j - a_j * d_i - b_j * c_i
        c_vv = b_i * d_j - b_j * d_i
        forms.append(BinaryForm(2, (c_vv, c_uv, c_uu)))
    return forms


def _direction_gcd(A: MatrixTupleLR) -> BinaryForm:
    return binary_form_gcd(direction_forms(A))


def common_directions(A: MatrixTupleLR) -> Optional[List[ProjectivePoint]]:
    """Rational directions v with dim span{A_i v} <= 1.

    Returns None when every direction works (a single matrix, or all the
    pairwise forms vanish identically); otherwise the list may be empty
    (either stable or only irrational common roots) or carry the rational
    common roots.
    """
    gcd = _direction_gcd(A)
    if gcd.is_zero:
        return None
    if gcd.degree == 0:
        return []
    return rational_projective_roots(gcd)


def has_common_direction(A: MatrixTupleLR) -> bool:
    """True iff some nonzero complex direction has all images on a line."""
    gcd = _direction_gcd(A)
    return gcd.is_zero or gcd.degree > 0


def triangularizer_for_direction(A: MatrixTupleLR, v: ProjectivePoint) -> GroupElementLR:
    """Determinant-one pair sending A into upper-triangular form.

    The direction v becomes the first column of the inverse right factor;
    a covector annihilating the common image line becomes the second row
    of the left factor.
    """
    v1, v2 = Fraction(v[0]), Fraction(v[1])
    if v1 == 0 and v2 == 0:
        raise PreconditionError("direction must be nonzero")
    if v1 != 0:
        h = RMatrix(2, 2, [v1, Fraction(0), v2, 1 / v1])
    else:
        h = RMatrix(2, 2, [v1, -1 / v2, v2, Fraction(0)])
    images = [m.mul_vec((v1, v2)) for m in A.matrices]
    pivot = next((s for s in images if s != (0, 0)), None)
    if pivot is None:
        w = (Fraction(0), Fraction(1))
    else:
        w = (-pivot[1], pivot[0])
    if w[1] != 0:
        w = (w[0] / w[1], Fraction(1))
        g1 = RMatrix(2, 2, [Fraction(1), Fraction(0), w[0], w[1]])
    else:
        w = (Fraction(1), Fraction(0))
        g1 = RMatrix(2, 2, [Fraction(0), Fraction(-1), w[0], w[1]])
    return GroupElementLR(g1, h.inverse())


def is_stable_lr(A: MatrixTupleLR) -> StabilityReport:
    """Stability test for the two-sided action.

    A tuple is non-stable exactly when some nonzero direction v has all
    images A_i v inside a single line, i.e. when the pairwise quadratic
    forms share a projective root.  With a rational common root the
    report carries an explicit triangularizer; with only irrational
    roots it reports non-stable without a witness.
    """
    gcd = _direction_gcd(A)
    if gcd.is_zero:
        v = (Fraction(1), Fraction(0))
        return StabilityReport(False, triangularizer_for_direction(A, v), v)
    if gcd.degree == 0:
        return StabilityReport(True)
    roots = rational_projective_roots(gcd)
    if roots:
        v = roots[0]
        return StabilityReport(False, triangularizer_for_direction(A, v), v)
    return StabilityReport(False, None, None)


def nullcone_member_lr(A: MatrixTupleLR) -> bool:
    """True iff all invariants vanish; degree at most two suffices."""
    n = A.n
    if any(det_inv(A, i) != 0 for i in range(1, n + 1)):
        return False
    return all(bracket(A, i, j) == 0 for i, j in combinations(range(1, n + 1), 2))


def phi(p: UpperPair) -> PhiImage:
    """Repack an upper pair's diagonals into a single tuple.

    The pair is non-separated exactly when the repacked tuple lies in
    the nullcone; the upper-right vectors are carried along unchanged.
    """
    B = MatrixTupleLR(tuple(
        RMatrix(2, 2, [-a, a2, -d2, d])
        for a, d, a2, d2 in zip(p.a_vec(), p.d_vec(), p.a2_vec(), p.d2_vec())))
    return PhiImage(B, p.b_vec(), p.b2_vec())


def phi_inverse(img: PhiImage) -> UpperPair:
    """Unique upper pair with the given diagonal data and b-vectors."""
    first = []
    second = []
    for m, b, b2 in zip(img.B.matrices, img.b, img.b2):
        neg_a, a2, neg_d2, d = m.entries
        first.append(RMatrix(2, 2, [-neg_a, b, Fraction(0), d]))
        second.append(RMatrix(2, 2, [a2, b2, Fraction(0), -neg_d2]))
    return UpperPair(MatrixTupleLR(tuple(first)), MatrixTupleLR(tuple(second)))


def _proportional_rows(row1, row2) -> bool:
    return stack_rows([row1, row2]).rank() <= 1


def in_dr(B: MatrixTupleLR) -> bool:
    """Row-proportional nullcone component.

    The 2 x 2n array stacking (a-entries, b-entries) over (c-entries,
    d-entries) has rank at most one: all matrices share a common column
    factor, equivalently a common left null covector.
    """
    top = B.entry_vector(0, 0) + B.entry_vector(0, 1)
    bottom = B.entry_vector(1, 0) + B.entry_vector(1, 1)
    return _proportional_rows(top, bottom) and nullcone_member_lr(B)


def in_dc(B: MatrixTupleLR) -> bool:
    """Column-proportional nullcone component (common right null vector)."""
    left = B.entry_vector(0, 0) + B.entry_vector(1, 0)
    right = B.entry_vector(0, 1) + B.entry_vector(1, 1)
    return _proportional_rows(left, right) and nullcone_member_lr(B)


def in_cr(p: UpperPair) -> bool:
    """Row pattern: (d, a') proportional to (d', a), and non-separated."""
    if separated_lr(p.first, p.second).separated:
        return False
    return _proportional_rows(p.d2_vec() + p.a_vec(), p.d_vec() + p.a2_vec())


def in_cc(p: UpperPair) -> bool:
    """Column pattern: (d, d') proportional to (a', a), and non-separated."""
    if separated_lr(p.first, p.second).separated:
        return False
    return _proportional_rows(p.a2_vec() + p.a_vec(), p.d_vec() + p.d2_vec())


def m_matrix(p: UpperPair) -> RMatrix:
    """6 x n stack of the rows a, b, d, a', b', d'."""
    return stack_rows([p.a_vec(), p.b_vec(), p.d_vec(),
                       p.a2_vec(), p.b2_vec(), p.d2_vec()])


def m_r(p: UpperPair) -> RMatrix:
    """4 x n stack (a, b, b', d') attached to row-pattern pairs."""
    return stack_rows([p.a_vec(), p.b_vec(), p.b2_vec(), p.d2_vec()])


def m_c(p: UpperPair) -> RMatrix:
    """4 x n stack (a, b, b', a') attached to column-pattern pairs."""
    return stack_rows([p.a_vec(), p.b_vec(), p.b2_vec(), p.a2_vec()])


def _require_non_separated(p: UpperPair):
    if separated_lr(p.first, p.second).separated:
        raise PreconditionError("not in separating variety: the pair is separated")


def graph_member_upper(p: UpperPair) -> bool:
    """Graph-closure membership for a non-separated upper pair.

    Holds exactly when the six stacked rows span at most three
    dimensions.
    """
    _require_non_separated(p)
    return m_matrix(p).rank() <= 3


GAMMA = "GAMMA"
CR = "CR"
CC = "CC"


def classify_pair(p: UpperPair) -> FrozenSet[str]:
    """Component membership flags for a non-separated upper pair.

    GAMMA marks graph-closure membership (stacked rank at most three);
    CR and CC mark the row and column patterns.  Every non-separated
    upper pair carries at least one flag, since the nullcone splits into
    its row- and column-proportional components.
    """
    _require_non_separated(p)
    flags = set()
    if m_matrix(p).rank() <= 3:
        flags.add(GAMMA)
    if in_cr(p):
        flags.add(CR)
    if in_cc(p):
        flags.add(CC)
    return frozenset(flags)


_FALLBACK_DIRECTIONS = ((Fraction(1), Fraction(0)),
                        (Fraction(0), Fraction(1)),
                        (Fraction(1), Fraction(1)))


def classify_pair_any(A: MatrixTupleLR, A2: MatrixTupleLR) -> FrozenSet[str]:
    """Component flags for an arbitrary non-separated pair.

    Stable non-separated pairs share a closed orbit, so they sit on the
    graph itself.  Non-stable pairs are reduced to upper-triangular
    representatives, one per rational common direction on each side, and
    the flags are unioned over representatives (pattern membership only
    depends on the direction choice up to the triangular stabiliser).
    GAMMA is exact for any representative; when a side admits every
    direction, the enumeration falls back to three canonical directions
    and CR/CC are a sound but possibly incomplete under-approximation.
    Sides with only irrational directions are rejected.
    """
    if separated_lr(A, A2).separated:
        raise PreconditionError("not in separating variety: the pair is separated")

    gcd_a, gcd_b = _direction_gcd(A), _direction_gcd(A2)
    dirs_a = common_directions(A)
    dirs_b = common_directions(A2)
    stable_a = not gcd_a.is_zero and gcd_a.degree == 0
    stable_b = not gcd_b.is_zero and gcd_b.degree == 0
    if stable_a or stable_b:
        if not (stable_a and stable_b):
            raise PreconditionError("non-separated pair with mixed stability")
        return frozenset({GAMMA})

    if dirs_a == []:
        raise PreconditionError("first tuple has no rational triangularizing direction")
    if dirs_b == []:
        raise PreconditionError("second tuple has no rational triangularizing direction")
    cand_a = _FALLBACK_DIRECTIONS if dirs_a is None else tuple(dirs_a)
    cand_b = _FALLBACK_DIRECTIONS if dirs_b is None else tuple(dirs_b)

    flags = set()
    for va in cand_a:
        ga = triangularizer_for_direction(A, va)
        ua = act_lr(ga, A)
        for vb in cand_b:
            gb = triangularizer_for_direction(A2, vb)
            ub = act_lr(gb, A2)
            flags |= classify_pair(UpperPair(ua, ub))
    return frozenset(flags)
