"""Randomized exact certification of component dimensions.

Every dimension claim is backed by an explicit rational parameterization
of the component.  The exact Jacobian of the parameterization at a
random integer point lower-bounds the dimension of the image closure (a
rank-r differential forces an r-dimensional image), so achieving the
claimed rank certifies the dimension from below; matching the claimed
value is recorded as CERTIFIED.  A computed rank exceeding the claim is
impossible for a correct parameterization and raises immediately.

Trials draw integer coordinates in [-20, 20] from a generator seeded by
(seed, trial index), so every certificate is reproducible from its seed
and recorded witness point.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple

from .dual import jacobian_of
from .errors import CertificationError, ChartSingularityError, PreconditionError
from .matrix import RMatrix
from .rational import rat
from .sparsepoly import SparsePoly, poly_expand_det

CERTIFIED = "CERTIFIED"
LOWER_BOUND_ONLY = "LOWER_BOUND_ONLY"
FAILED = "FAILED"


@dataclass(frozen=True)
class Parameterization:
    """A rational map from a parameter cube into a flattened point space.

    The evaluator accepts a list of scalars (exact rationals or dual
    numbers) and must stay inside +, -, *, / by chart denominators; the
    chart guards are the denominators that must not vanish at a sample.
    """

    name: str
    param_count: int
    output_count: int
    evaluator: Callable[[Sequence], List]
    chart_guards: Tuple[Callable[[Sequence], Fraction], ...] = ()


@dataclass(frozen=True)
class DimensionCertificate:
    name: str
    claimed: int
    achieved_rank: int
    trials: int
    witness_point: Optional[Tuple[Fraction, ...]]
    verdict: str


@dataclass(frozen=True)
class ClaimRow:
    name: str
    claimed: int
    description: str


def jacobian(param: Parameterization, point: Sequence) -> RMatrix:
    """Exact Jacobian (output rows by parameter columns) at a point."""
    if len(point) != param.param_count:
        raise PreconditionError("point length must equal the parameter count")
    return jacobian_of(param.evaluator, point, param.chart_guards)


def certify_dimension(param: Parameterization, claimed: int,
                      trials: int = 5, seed: int = 0) -> DimensionCertificate:
    """Maximize the Jacobian rank over random integer sample points."""
    if trials < 1:
        raise PreconditionError("at least one trial is required")
    best = -1
    witness = None
    for trial in range(trials):
        rng = random.Random(seed * 1_000_003 + trial)
        point = _sample_point(param, rng)
        rank = jacobian(param, point).rank()
        if rank > claimed:
            raise CertificationError(
                f"{param.name}: rank {rank} exceeds claimed dimension {claimed}; "
                "the parameterization does not land in the claimed component")
        if rank > best:
            best, witness = rank, tuple(point)
    if best == claimed:
        verdict = CERTIFIED
    elif best > 0:
        verdict = LOWER_BOUND_ONLY
    else:
        verdict = FAILED
    return DimensionCertificate(param.name, claimed, best, trials, witness, verdict)


def _sample_point(param: Parameterization, rng: random.Random) -> List[Fraction]:
    for _ in range(100):
        point = [Fraction(rng.randint(-20, 20)) for _ in range(param.param_count)]
        if all(guard(point) != 0 for guard in param.chart_guards):
            return point
    raise ChartSingularityError(
        f"{param.name}: all samples hit chart singularities")


# -- determinant-one charts --------------------------------------------------


def sl2_chart(alpha, beta, gamma) -> RMatrix:
    """[[1+a, b], [c, (1+bc)/(1+a)]], an exact determinant-one matrix."""
    alpha, beta, gamma = rat(alpha), rat(beta), rat(gamma)
    if 1 + alpha == 0:
        raise ChartSingularityError("chart singularity at alpha = -1")
    return RMatrix.from_rows(_sl2_chart_g([alpha, beta, gamma]))


def _sl2_chart_g(params) -> list:
    alpha, beta, gamma = params
    top_left = 1 + alpha
    return [[top_left, beta],
            [gamma, (1 + beta * gamma) / top_left]]


def _sl_chart_g(l: int, params) -> list:
    """l x l determinant-one chart around the identity.

    All entries except the bottom-right are identity plus a free
    parameter; the bottom-right is solved from the determinant, which is
    legitimate while the leading principal (l-1)-minor is nonzero.
    """
    grid = [[None] * l for _ in range(l)]
    idx = 0
    for r in range(l):
        for c in range(l):
            if (r, c) == (l - 1, l - 1):
                continue
            grid[r][c] = (1 if r == c else 0) + params[idx]
            idx += 1
    minor = _gdet([row[:l - 1] for row in grid[:l - 1]])
    grid[l - 1][l - 1] = 0
    rest = _gdet(grid)
    grid[l - 1][l - 1] = (1 - rest) / minor
    return grid


def _sl_chart_guard(l: int, offset: int) -> Callable[[Sequence], Fraction]:
    def guard(point: Sequence) -> Fraction:
        params = [rat(p) for p in point[offset:offset + l * l - 1]]
        grid = [[Fraction(int(r == c)) for c in range(l)] for r in range(l)]
        idx = 0
        for r in range(l):
            for c in range(l):
                if (r, c) == (l - 1, l - 1):
                    continue
                grid[r][c] += params[idx]
                idx += 1
        return RMatrix.from_rows([row[:l - 1] for row in grid[:l - 1]]).det()
    return guard


# -- generic small-matrix arithmetic (works on rationals and duals) ----------


def _gdet(grid):
    n = len(grid)
    if n == 1:
        return grid[0][0]
    acc = None
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in grid[1:]]
        term = grid[0][j] * _gdet(minor)
        if j % 2:
            term = -term
        acc = term if acc is None else acc + term
    return acc


def _gmul(A, B):
    rows, inner, cols = len(A), len(B), len(B[0])
    return [[sum(A[r][k] * B[k][c] for k in range(inner)) for c in range(cols)]
            for r in range(rows)]


def _adj2(M):
    """Inverse of a determinant-one 2x2 matrix."""
    return [[M[1][1], -M[0][1]], [-M[1][0], M[0][0]]]


def _act2(g1, g2, mats):
    g2i = _adj2(g2)
    return [_gmul(_gmul(g1, m), g2i) for m in mats]


def _flatten_mats(mats):
    return [e for m in mats for row in m for e in row]


# -- builtin parameterizations for the 2x2 family -----------------------------


def _chart_guards_at(offsets: Sequence[int]) -> Tuple[Callable, ...]:
    return tuple((lambda pt, o=o: 1 + rat(pt[o])) for o in offsets)


def _saturate(pairs_eval, n: int, base_count: int):
    """Wrap a pair evaluator with four determinant-one chart factors."""
    def evaluator(ps):
        first, second = pairs_eval(ps)
        g1 = _sl2_chart_g(ps[base_count:base_count + 3])
        g2 = _sl2_chart_g(ps[base_count + 3:base_count + 6])
        h1 = _sl2_chart_g(ps[base_count + 6:base_count + 9])
        h2 = _sl2_chart_g(ps[base_count + 9:base_count + 12])
        return _flatten_mats(_act2(g1, g2, first)) + _flatten_mats(_act2(h1, h2, second))
    guards = _chart_guards_at([base_count, base_count + 3,
                               base_count + 6, base_count + 9])
    return evaluator, guards


def _gamma_pair(n: int):
    """(A, g.A) with A free and g a pair of determinant-one charts."""
    def evaluator(ps):
        mats = [[[ps[4 * i], ps[4 * i + 1]], [ps[4 * i + 2], ps[4 * i + 3]]]
                for i in range(n)]
        g1 = _sl2_chart_g(ps[4 * n:4 * n + 3])
        g2 = _sl2_chart_g(ps[4 * n + 3:4 * n + 6])
        return _flatten_mats(mats) + _flatten_mats(_act2(g1, g2, mats))
    return Parameterization(
        name="gamma", param_count=4 * n + 6, output_count=8 * n,
        evaluator=evaluator, chart_guards=_chart_guards_at([4 * n, 4 * n + 3]))


def _cr_pair_eval(n: int):
    """Row-pattern pairs from (a, b, b', d', lam)."""
    def pairs(ps):
        a, b = ps[0:n], ps[n:2 * n]
        b2, d2 = ps[2 * n:3 * n], ps[3 * n:4 * n]
        lam = ps[4 * n]
        first = [[[a[i], b[i]], [0, lam * d2[i]]] for i in range(n)]
        second = [[[lam * a[i], b2[i]], [0, d2[i]]] for i in range(n)]
        return first, second
    return pairs, 4 * n + 1


def _cc_pair_eval(n: int):
    """Column-pattern pairs from (a, a', b, b', lam)."""
    def pairs(ps):
        a, a2 = ps[0:n], ps[n:2 * n]
        b, b2 = ps[2 * n:3 * n], ps[3 * n:4 * n]
        lam = ps[4 * n]
        first = [[[a[i], b[i]], [0, lam * a2[i]]] for i in range(n)]
        second = [[[a2[i], b2[i]], [0, lam * a[i]]] for i in range(n)]
        return first, second
    return pairs, 4 * n + 1


def _span_cr_pair_eval(n: int):
    """Row-pattern pairs whose four defining vectors span <= 3 dimensions."""
    def pairs(ps):
        u = [ps[0:n], ps[n:2 * n], ps[2 * n:3 * n]]
        c = ps[3 * n:3 * n + 12]
        lam = ps[3 * n + 12]
        def combo(o):
            return [c[o] * u[0][i] + c[o + 1] * u[1][i] + c[o + 2] * u[2][i]
                    for i in range(n)]
        a, b, b2, d2 = combo(0), combo(3), combo(6), combo(9)
        first = [[[a[i], b[i]], [0, lam * d2[i]]] for i in range(n)]
        second = [[[lam * a[i], b2[i]], [0, d2[i]]] for i in range(n)]
        return first, second
    return pairs, 3 * n + 13


def _cr_cc_pair_eval(n: int):
    """Pairs in both patterns, from (a, b, b', lam, mu)."""
    def pairs(ps):
        a, b, b2 = ps[0:n], ps[n:2 * n], ps[2 * n:3 * n]
        lam, mu = ps[3 * n], ps[3 * n + 1]
        first = [[[a[i], b[i]], [0, mu * (lam * a[i])]] for i in range(n)]
        second = [[[lam * a[i], b2[i]], [0, mu * a[i]]] for i in range(n)]
        return first, second
    return pairs, 3 * n + 2


def _pair_param(name: str, n: int, pair_eval_factory, saturated: bool) -> Parameterization:
    pairs, base = pair_eval_factory(n)
    if saturated:
        evaluator, guards = _saturate(pairs, n, base)
        return Parameterization(name, base + 12, 8 * n, evaluator, guards)

    def evaluator(ps):
        first, second = pairs(ps)
        return _flatten_mats(first) + _flatten_mats(second)
    return Parameterization(name, base, 8 * n, evaluator, ())


# -- builtin parameterizations for the left family ---------------------------


def _gamma_left_param(l: int, n: int) -> Parameterization:
    def evaluator(ps):
        rows = [list(ps[r * n:(r + 1) * n]) for r in range(l)]
        g = _sl_chart_g(l, ps[l * n:l * n + l * l - 1])
        moved = _gmul(g, rows)
        return [e for row in rows for e in row] + [e for row in moved for e in row]
    return Parameterization(
        name="gamma-left", param_count=l * n + l * l - 1, output_count=2 * l * n,
        evaluator=evaluator, chart_guards=(_sl_chart_guard(l, l * n),))


def _nullcone_rows(l: int, n: int, ps, offset: int):
    """Rank-deficient l x n block: free top rows, dependent last row."""
    rows = [list(ps[offset + r * n:offset + (r + 1) * n]) for r in range(l - 1)]
    coeffs = ps[offset + (l - 1) * n:offset + (l - 1) * n + (l - 1)]
    last = [sum(coeffs[r] * rows[r][i] for r in range(l - 1)) for i in range(n)]
    return rows + [last]


def _nullcone_left_param(l: int, n: int) -> Parameterization:
    def evaluator(ps):
        return [e for row in _nullcone_rows(l, n, ps, 0) for e in row]
    return Parameterization("nullcone-left", (l - 1) * (n + 1), l * n, evaluator)


def _nullcone_pair_left_param(l: int, n: int) -> Parameterization:
    half = (l - 1) * (n + 1)

    def evaluator(ps):
        first = _nullcone_rows(l, n, ps, 0)
        second = _nullcone_rows(l, n, ps, half)
        return [e for row in first for e in row] + [e for row in second for e in row]
    return Parameterization("nullcone-pair-left", 2 * half, 2 * l * n, evaluator)


def _z_left_param(l: int, n: int) -> Parameterization:
    """Stacked 2l x n matrices with both row blocks rank-deficient and a
    common span of dimension at most l."""
    def evaluator(ps):
        pos = 0
        a_rows = [list(ps[pos + r * n:pos + (r + 1) * n]) for r in range(l - 1)]
        pos += (l - 1) * n
        alpha = ps[pos:pos + (l - 1)]
        pos += l - 1
        a_last = [sum(alpha[r] * a_rows[r][i] for r in range(l - 1)) for i in range(n)]
        b_first = list(ps[pos:pos + n])
        pos += n
        span = a_rows + [b_first]
        b_mid = []
        for _ in range(l - 2):
            coeffs = ps[pos:pos + l]
            pos += l
            b_mid.append([sum(coeffs[r] * span[r][i] for r in range(l))
                          for i in range(n)])
        bs = [b_first] + b_mid
        coeffs = ps[pos:pos + (l - 1)]
        b_last = [sum(coeffs[r] * bs[r][i] for r in range(l - 1)) for i in range(n)]
        rows = a_rows + [a_last] + bs + [b_last]
        return [e for row in rows for e in row]
    return Parameterization("z-left", l * n + l * l - 2, 2 * l * n, evaluator)


# -- claim tables -------------------------------------------------------------


_LR_CLAIMS = (
    ("gamma", lambda n: 4 * n + 6, "graph closure of the two-sided action"),
    ("sat-cr", lambda n: 4 * n + 5, "saturation of the row-pattern component"),
    ("sat-cc", lambda n: 4 * n + 5, "saturation of the column-pattern component"),
    ("gamma-sat-cr", lambda n: 3 * n + 8,
     "intersection of the graph closure with the saturated row pattern"),
    ("sat-cr-cc", lambda n: 3 * n + 6, "saturation of the double-pattern locus"),
    ("gamma-cr", lambda n: 3 * n + 4,
     "row-pattern pairs inside the graph closure (spanning rank <= 3)"),
    ("cr-cc", lambda n: 3 * n + 2, "pairs satisfying both patterns"),
)

_LEFT_CLAIMS = (
    ("gamma-left", lambda l, n: l * n + l * l - 1, "graph closure of the left action"),
    ("nullcone-left", lambda l, n: (l - 1) * (n + 1), "left-action nullcone"),
    ("nullcone-pair-left", lambda l, n: 2 * (l - 1) * (n + 1),
     "pairs of left-action nullcone points"),
    ("z-left", lambda l, n: l * n + l * l - 2,
     "stacked matrices with both blocks rank-deficient and joint rank <= l"),
)


def builtin_claims(n: Optional[int] = None, l: Optional[int] = None) -> List[ClaimRow]:
    """Claim table for the selected family.

    With only n given: the 2x2 family (valid for n >= 4).  With l given:
    the left family at (l, n), needing l >= 2 and n >= l.
    """
    if l is None:
        if n is None or n < 4:
            raise PreconditionError("2x2 family claims need n >= 4")
        return [ClaimRow(name, dim(n), f"{desc}, n = {n}")
                for name, dim, desc in _LR_CLAIMS]
    if l < 2:
        raise PreconditionError("left family needs l >= 2")
    if n is None or n < l:
        raise PreconditionError("left family needs n >= l")
    return [ClaimRow(name, dim(l, n), f"{desc}, l = {l}, n = {n}")
            for name, dim, desc in _LEFT_CLAIMS]


def builtin_parameterization(name: str, n: Optional[int] = None,
                             l: Optional[int] = None) -> Parameterization:
    if l is None:
        if n is None:
            raise PreconditionError("n is required")
        if name == "gamma":
            return _gamma_pair(n)
        if name == "sat-cr":
            return _pair_param(name, n, _cr_pair_eval, saturated=True)
        if name == "sat-cc":
            return _pair_param(name, n, _cc_pair_eval, saturated=True)
        if name == "gamma-sat-cr":
            return _pair_param(name, n, _span_cr_pair_eval, saturated=True)
        if name == "sat-cr-cc":
            return _pair_param(name, n, _cr_cc_pair_eval, saturated=True)
        if name == "gamma-cr":
            return _pair_param(name, n, _span_cr_pair_eval, saturated=False)
        if name == "cr-cc":
            return _pair_param(name, n, _cr_cc_pair_eval, saturated=False)
        raise PreconditionError(f"unknown 2x2 family claim {name!r}")
    if n is None:
        raise PreconditionError("n is required")
    if name == "gamma-left":
        return _gamma_left_param(l, n)
    if name == "nullcone-left":
        return _nullcone_left_param(l, n)
    if name == "nullcone-pair-left":
        return _nullcone_pair_left_param(l, n)
    if name == "z-left":
        return _z_left_param(l, n)
    raise PreconditionError(f"unknown left family claim {name!r}")


def certify_builtin(n: Optional[int] = None, l: Optional[int] = None,
                    names: Optional[Sequence[str]] = None,
                    trials: int = 5, seed: int = 0) -> List[DimensionCertificate]:
    """Certify every builtin claim of a family (optionally filtered)."""
    rows = builtin_claims(n, l)
    if names is not None:
        wanted = set(names)
        unknown = wanted - {r.name for r in rows}
        if unknown:
            raise PreconditionError(f"unknown claim names: {sorted(unknown)}")
        rows = [r for r in rows if r.name in wanted]
    out = []
    for row in rows:
        param = builtin_parameterization(row.name, n, l)
        out.append(certify_dimension(param, row.claimed, trials, seed))
    return out


# -- symbolic identity oracle -------------------------------------------------


_XI_VARS = tuple(f"{base}_{s}" for base in ("a", "b", "d", "e") for s in "ijkl")


def verify_xi_identity() -> bool:
    """Expand the doubled block determinant for generic upper-triangular
    symbols and pin down the quadrilinear coefficient.

    Checks that the determinant factors as

        (e_i e_l a_i a_l - e_j e_k a_j a_k)(e_i e_l d_i d_l - e_j e_k d_j d_k)

    and that the coefficient of e_i e_j e_k e_l is exactly
    -(a_i a_l d_j d_k + a_j a_k d_i d_l).
    """
    vs = _XI_VARS
    a = {s: SparsePoly.var(vs, f"a_{s}") for s in "ijkl"}
    b = {s: SparsePoly.var(vs, f"b_{s}") for s in "ijkl"}
    d = {s: SparsePoly.var(vs, f"d_{s}") for s in "ijkl"}
    e = {s: SparsePoly.var(vs, f"e_{s}") for s in "ijkl"}
    zero = SparsePoly.zero(vs)
    grid = [
        [e["i"] * a["i"], e["i"] * b["i"], e["j"] * a["j"], e["j"] * b["j"]],
        [zero, e["i"] * d["i"], zero, e["j"] * d["j"]],
        [e["k"] * a["k"], e["k"] * b["k"], e["l"] * a["l"], e["l"] * b["l"]],
        [zero, e["k"] * d["k"], zero, e["l"] * d["l"]],
    ]
    det = poly_expand_det(grid)
    factored = ((e["i"] * e["l"] * a["i"] * a["l"] - e["j"] * e["k"] * a["j"] * a["k"])
                * (e["i"] * e["l"] * d["i"] * d["l"] - e["j"] * e["k"] * d["j"] * d["k"]))
    if det != factored:
        return False
    coeff = det.coefficient_of({"e_i": 1, "e_j": 1, "e_k": 1, "e_l": 1})
    closed = -(a["i"] * a["l"] * d["j"] * d["k"] + a["j"] * a["k"] * d["i"] * d["l"])
    return coeff == closed


_BR_VARS = tuple(f"{base}_{s}" for base in ("a", "d", "ap", "dp") for s in "ijkl")


def verify_bracket_identity() -> bool:
    """Verify the bracket combination expressing the quadrilinear
    difference through pairwise-bracket differences.

    With P_pq = a_p d_q + a_q d_p (the pairing of upper-triangular
    matrices), P'_pq its primed copy and D_pq = P_pq - P'_pq, the
    identity

        2*(a_i a_l d_j d_k + a_j a_k d_i d_l - primed copy)
          = P_ij D_kl + P'_kl D_ij + P_ik D_jl
            + P'_jl D_ik - P_il D_jk - P'_jk D_il

    holds in all sixteen symbols, so the quadrilinear invariants agree
    as soon as every pairing agrees.  The expansion behind it,

        P_ij P_kl + P_ik P_jl - P_il P_jk
          = 2*(a_i a_l d_j d_k + a_j a_k d_i d_l),

    is checked first.
    """
    vs = _BR_VARS
    a = {s: SparsePoly.var(vs, f"a_{s}") for s in "ijkl"}
    d = {s: SparsePoly.var(vs, f"d_{s}") for s in "ijkl"}
    ap = {s: SparsePoly.var(vs, f"ap_{s}") for s in "ijkl"}
    dp = {s: SparsePoly.var(vs, f"dp_{s}") for s in "ijkl"}

    def P(p, q):
        return a[p] * d[q] + a[q] * d[p]

    def Pp(p, q):
        return ap[p] * dp[q] + ap[q] * dp[p]

    def D(p, q):
        return P(p, q) - Pp(p, q)

    plain = a["i"] * a["l"] * d["j"] * d["k"] + a["j"] * a["k"] * d["i"] * d["l"]
    primed = ap["i"] * ap["l"] * dp["j"] * dp["k"] + ap["j"] * ap["k"] * dp["i"] * dp["l"]

    quad = P("i", "j") * P("k", "l") + P("i", "k") * P("j", "l") - P("i", "l") * P("j", "k")
    if quad != plain * 2:
        return False

    lhs = (plain - primed) * 2
    rhs = (P("i", "j") * D("k", "l") + Pp("k", "l") * D("i", "j")
           + P("i", "k") * D("j", "l") + Pp("j", "l") * D("i", "k")
           - P("i", "l") * D("j", "k") - Pp("j", "k") * D("i", "l"))
    return lhs == rhs
