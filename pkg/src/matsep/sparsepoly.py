"""Sparse multivariate polynomials over the rationals.

Terms are stored as a map from exponent vectors to nonzero coefficients,
so equality of two polynomials is literal equality of term maps.  This is
the identity oracle: two expressions are the same polynomial if and only
if their expanded canonical forms coincide, no numerics involved.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Sequence, Tuple

from .errors import ShapeError
from .rational import rat

Exponents = Tuple[int, ...]


class SparsePoly:
    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Dict[Exponents, Fraction]):
        object.__setattr__(self, "variables", tuple(variables))
        clean = {}
        nv = len(self.variables)
        for exps, coeff in terms.items():
            if len(exps) != nv:
                raise ShapeError("exponent vector length mismatch")
            c = rat(coeff)
            if c != 0:
                clean[tuple(exps)] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *_):
        raise AttributeError("SparsePoly is immutable")

    # -- construction ---------------------------------------------------

    @staticmethod
    def zero(variables: Sequence[str]) -> "SparsePoly":
        return SparsePoly(variables, {})

    @staticmethod
    def const(variables: Sequence[str], value) -> "SparsePoly":
        return SparsePoly(variables, {(0,) * len(variables): rat(value)})

    @staticmethod
    def var(variables: Sequence[str], name: str) -> "SparsePoly":
        variables = tuple(variables)
        i = variables.index(name)
        exps = tuple(int(j == i) for j in range(len(variables)))
        return SparsePoly(variables, {exps: Fraction(1)})

    # -- ring operations --------------------------------------------------

    def _coerce(self, other) -> "SparsePoly":
        if isinstance(other, SparsePoly):
            if other.variables != self.variables:
                raise ShapeError("polynomials over different variable lists")
            return other
        return SparsePoly.const(self.variables, other)

    def __add__(self, other) -> "SparsePoly":
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, Fraction(0)) + c
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        return SparsePoly(self.variables, out)

    __radd__ = __add__

    def __neg__(self) -> "SparsePoly":
        return SparsePoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "SparsePoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "SparsePoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "SparsePoly":
        other = self._coerce(other)
        out: Dict[Exponents, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, Fraction(0)) + c1 * c2
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        return SparsePoly(self.variables, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "SparsePoly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = SparsePoly.const(self.variables, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- queries ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def sorted_terms(self) -> list:
        """Terms in graded lexicographic order (the canonical ordering)."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def coefficient_of(self, assignment: Dict[str, int]) -> "SparsePoly":
        """Coefficient of prod(var^exp), as a polynomial in the other variables.

        Keeps the full variable list; the extracted variables appear with
        exponent zero in the result.
        """
        idx = {self.variables.index(v): e for v, e in assignment.items()}
        out: Dict[Exponents, Fraction] = {}
        for exps, c in self.terms.items():
            if all(exps[i] == e for i, e in idx.items()):
                reduced = tuple(0 if i in idx else x for i, x in enumerate(exps))
                out[reduced] = out.get(reduced, Fraction(0)) + c
        return SparsePoly(self.variables, out)

    def derivative(self, name: str) -> "SparsePoly":
        i = self.variables.index(name)
        out: Dict[Exponents, Fraction] = {}
        for exps, c in self.terms.items():
            if exps[i] > 0:
                e = tuple(x - int(j == i) for j, x in enumerate(exps))
                out[e] = out.get(e, Fraction(0)) + c * exps[i]
        return SparsePoly(self.variables, out)

    def evaluate(self, values: Dict[str, object]):
        """Evaluate with any scalars supporting ring arithmetic.

        Works for Fractions and for dual numbers, which is how symbolic
        derivatives are cross-checked against forward-mode ones.
        """
        vals = [values[v] for v in self.variables]
        acc = None
        for exps, c in self.sorted_terms():
            term = c
            for v, e in zip(vals, exps):
                for _ in range(e):
                    term = term * v
            acc = term if acc is None else acc + term
        return acc if acc is not None else Fraction(0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparsePoly):
            if isinstance(other, (int, Fraction)):
                other = SparsePoly.const(self.variables, other)
            else:
                return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def __repr__(self):
        if self.is_zero():
            return "0"
        parts = []
        for exps, c in self.sorted_terms():
            factors = [f"{v}^{e}" if e > 1 else v
                       for v, e in zip(self.variables, exps) if e]
            body = "*".join(factors)
            if body:
                parts.append(f"{c}*{body}" if c != 1 else body)
            else:
                parts.append(str(c))
        return " + ".join(parts)


def poly_expand_det(grid: Sequence[Sequence[SparsePoly]]) -> SparsePoly:
    """Exact symbolic determinant by cofactor expansion, size up to six."""
    n = len(grid)
    if n == 0:
        raise ShapeError("empty determinant")
    if n > 6:
        raise ShapeError("symbolic determinant limited to size six")
    if any(len(row) != n for row in grid):
        raise ShapeError("non-square grid")
    return _cofactor_det([list(row) for row in grid])


def _cofactor_det(grid):
    n = len(grid)
    if n == 1:
        return grid[0][0]
    acc = None
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in grid[1:]]
        term = grid[0][j] * _cofactor_det(minor)
        if j % 2:
            term = -term
        acc = term if acc is None else acc + term
    return acc
