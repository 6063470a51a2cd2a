"""Shared generators and independent oracles for the test suite.

The oracles here deliberately avoid the production code paths: brackets
and quadrilinear invariants are recomputed through symbolic expansion,
common roots through resultants, and derivatives through symbolic
differentiation, so agreement is evidence rather than tautology.
"""

from fractions import Fraction
from random import Random

from matsep import (LeftMatrix, MatrixTupleLR, RMatrix, SparsePoly,
                    GroupElementL, GroupElementLR, poly_expand_det)


def rand_fraction(rng: Random, lo=-9, hi=9, denominators=(1, 1, 1, 2, 3)) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.choice(denominators))


def rand_matrix(rng: Random, rows: int, cols: int, lo=-9, hi=9) -> RMatrix:
    return RMatrix(rows, cols, [rand_fraction(rng, lo, hi) for _ in range(rows * cols)])


def rand_tuple(rng: Random, n: int, lo=-9, hi=9) -> MatrixTupleLR:
    return MatrixTupleLR(tuple(rand_matrix(rng, 2, 2, lo, hi) for _ in range(n)))


def rand_upper_tuple(rng: Random, n: int, lo=-9, hi=9) -> MatrixTupleLR:
    mats = []
    for _ in range(n):
        a, b, d = (rand_fraction(rng, lo, hi) for _ in range(3))
        mats.append(RMatrix(2, 2, [a, b, Fraction(0), d]))
    return MatrixTupleLR(tuple(mats))


def rand_sl2(rng: Random, shears=3) -> RMatrix:
    """Random determinant-one matrix built from elementary shears."""
    g = RMatrix.identity(2)
    for _ in range(shears):
        x = Fraction(rng.randint(-4, 4))
        if rng.random() < 0.5:
            g = g @ RMatrix.from_rows([[1, x], [0, 1]])
        else:
            g = g @ RMatrix.from_rows([[1, 0], [x, 1]])
    return g


def rand_group_lr(rng: Random) -> GroupElementLR:
    return GroupElementLR(rand_sl2(rng), rand_sl2(rng))


def rand_sl(rng: Random, l: int, shears=4) -> RMatrix:
    """Random determinant-one l x l matrix from elementary row shears."""
    g = RMatrix.identity(l)
    for _ in range(shears):
        i = rng.randrange(l)
        j = rng.randrange(l)
        if i == j:
            continue
        x = Fraction(rng.randint(-3, 3))
        shear = RMatrix.from_rows(
            [[Fraction(int(r == c)) + (x if (r, c) == (i, j) else 0)
              for c in range(l)] for r in range(l)])
        g = g @ shear
    return g


def rand_group_left(rng: Random, l: int) -> GroupElementL:
    return GroupElementL(rand_sl(rng, l))


def rand_left(rng: Random, l: int, n: int, lo=-9, hi=9) -> LeftMatrix:
    return LeftMatrix(rand_matrix(rng, l, n, lo, hi))


def rand_left_nullcone(rng: Random, l: int, n: int) -> LeftMatrix:
    """Random rank-deficient l x n matrix (last row in the span above)."""
    rows = [[rand_fraction(rng) for _ in range(n)] for _ in range(l - 1)]
    coeffs = [rand_fraction(rng, -3, 3) for _ in range(l - 1)]
    last = [sum((c * row[i] for c, row in zip(coeffs, rows)), Fraction(0))
            for i in range(n)]
    return LeftMatrix(RMatrix.from_rows(rows + [last]))


# -- nullcone samples for the 2x2 family --------------------------------------


def rand_nullcone_row_pattern(rng: Random, n: int) -> MatrixTupleLR:
    a = [rand_fraction(rng) for _ in range(n)]
    b = [rand_fraction(rng) for _ in range(n)]
    lam = rand_fraction(rng, -4, 4)
    return MatrixTupleLR(tuple(RMatrix(2, 2, [a[i], b[i], lam * a[i], lam * b[i]])
                               for i in range(n)))


def rand_nullcone_col_pattern(rng: Random, n: int) -> MatrixTupleLR:
    a = [rand_fraction(rng) for _ in range(n)]
    c = [rand_fraction(rng) for _ in range(n)]
    lam = rand_fraction(rng, -4, 4)
    return MatrixTupleLR(tuple(RMatrix(2, 2, [a[i], lam * a[i], c[i], lam * c[i]])
                               for i in range(n)))


def rand_nullcone_triangular(rng: Random, n: int) -> MatrixTupleLR:
    """Conjugated upper-triangular nullcone tuple (a row or d row zero)."""
    from matsep import act_lr
    mats = []
    kill_d = rng.random() < 0.5
    for _ in range(n):
        a = Fraction(0) if not kill_d else rand_fraction(rng)
        d = Fraction(0) if kill_d else rand_fraction(rng)
        mats.append(RMatrix(2, 2, [a, rand_fraction(rng), Fraction(0), d]))
    return act_lr(rand_group_lr(rng), MatrixTupleLR(tuple(mats)))


# -- symbolic oracles ----------------------------------------------------------


def bracket_oracle(X: RMatrix, Y: RMatrix) -> Fraction:
    """Tr(X)Tr(Y) - Tr(XY) via full symbolic expansion, then substitution."""
    vs = tuple(f"{m}{i}" for m in "xy" for i in range(4))
    xe = [SparsePoly.var(vs, f"x{i}") for i in range(4)]
    ye = [SparsePoly.var(vs, f"y{i}") for i in range(4)]
    tr_x = xe[0] + xe[3]
    tr_y = ye[0] + ye[3]
    tr_xy = xe[0] * ye[0] + xe[1] * ye[2] + xe[2] * ye[1] + xe[3] * ye[3]
    sym = tr_x * tr_y - tr_xy
    values = {f"x{i}": X.entries[i] for i in range(4)}
    values.update({f"y{i}": Y.entries[i] for i in range(4)})
    return sym.evaluate(values)


def xi_oracle(A: MatrixTupleLR, i: int, j: int, k: int, l: int) -> Fraction:
    """Coefficient extraction by full symbolic expansion in the four
    block weights, independent of the inclusion-exclusion route."""
    vs = ("ei", "ej", "ek", "el")
    e = [SparsePoly.var(vs, v) for v in vs]
    mats = [A.matrices[m - 1] for m in (i, j, k, l)]
    grid = [[None] * 4 for _ in range(4)]
    for br in range(2):
        for bc in range(2):
            block = mats[2 * br + bc]
            weight = e[2 * br + bc]
            for r in range(2):
                for c in range(2):
                    grid[2 * br + r][2 * bc + c] = weight * block.at(r, c)
    det = poly_expand_det(grid)
    coeff = det.coefficient_of({"ei": 1, "ej": 1, "ek": 1, "el": 1})
    const = coeff.terms.get((0, 0, 0, 0), Fraction(0))
    return const


def sylvester_resultant_quadratics(f, g) -> Fraction:
    """Homogeneous resultant of two degree-two binary forms.

    Vanishes exactly when the forms share a projective root, including
    the root at infinity when both leading coefficients vanish.
    """
    c0, c1, c2 = f.coefficients
    d0, d1, d2 = g.coefficients
    z = Fraction(0)
    return RMatrix.from_rows([
        [c2, c1, c0, z],
        [z, c2, c1, c0],
        [d2, d1, d0, z],
        [z, d2, d1, d0]]).det()
