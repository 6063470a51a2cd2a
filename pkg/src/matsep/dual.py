"""Forward-mode dual numbers over exact rationals.

A DualScalar carries a value and one exact partial derivative per active
parameter; arithmetic applies the product and chain rules with Fraction
coefficients, so Jacobians of rational maps come out exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

from .errors import ChartSingularityError, ShapeError
from .matrix import RMatrix
from .rational import rat


class DualScalar:
    __slots__ = ("value", "partials")

    def __init__(self, value, partials: Sequence[Fraction]):
        object.__setattr__(self, "value", rat(value))
        object.__setattr__(self, "partials", tuple(rat(p) for p in partials))

    def __setattr__(self, *_):
        raise AttributeError("DualScalar is immutable")

    @staticmethod
    def constant(value, nparams: int) -> "DualScalar":
        return DualScalar(value, (Fraction(0),) * nparams)

    @staticmethod
    def variable(value, index: int, nparams: int) -> "DualScalar":
        return DualScalar(value, tuple(Fraction(int(i == index)) for i in range(nparams)))

    def _coerce(self, other) -> "DualScalar":
        if isinstance(other, DualScalar):
            if len(other.partials) != len(self.partials):
                raise ShapeError("dual numbers with different parameter counts")
            return other
        return DualScalar.constant(other, len(self.partials))

    def __add__(self, other) -> "DualScalar":
        o = self._coerce(other)
        return DualScalar(self.value + o.value,
                          tuple(a + b for a, b in zip(self.partials, o.partials)))

    __radd__ = __add__

    def __neg__(self) -> "DualScalar":
        return DualScalar(-self.value, tuple(-p for p in self.partials))

    def __sub__(self, other) -> "DualScalar":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "DualScalar":
        return self._coerce(other) - self

    def __mul__(self, other) -> "DualScalar":
        o = self._coerce(other)
        return DualScalar(self.value * o.value,
                          tuple(a * o.value + self.value * b
                                for a, b in zip(self.partials, o.partials)))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "DualScalar":
        o = self._coerce(other)
        if o.value == 0:
            raise ZeroDivisionError("dual division by a scalar with zero value")
        inv = 1 / o.value
        return DualScalar(self.value * inv,
                          tuple((a * o.value - self.value * b) * inv * inv
                                for a, b in zip(self.partials, o.partials)))

    def __rtruediv__(self, other) -> "DualScalar":
        return self._coerce(other) / self

    def __pow__(self, k: int) -> "DualScalar":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = DualScalar.constant(1, len(self.partials))
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, DualScalar):
            return self.value == other.value and self.partials == other.partials
        if isinstance(other, (int, Fraction)):
            return self.value == other and all(p == 0 for p in self.partials)
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.partials))

    def __repr__(self):
        return f"DualScalar({self.value}, {list(self.partials)})"


def seed_point(point: Sequence) -> list:
    """Duals for a parameter vector, one independent direction each."""
    pt = [rat(x) for x in point]
    k = len(pt)
    return [DualScalar.variable(v, i, k) for i, v in enumerate(pt)]


def jacobian_of(evaluator: Callable, point: Sequence,
                guards: Sequence[Callable] = ()) -> RMatrix:
    """Exact Jacobian of a rational map at a rational point.

    Raises ChartSingularityError if any chart denominator vanishes there.
    """
    pt = [rat(x) for x in point]
    for guard in guards:
        if guard(pt) == 0:
            raise ChartSingularityError("chart denominator vanishes at the point")
    k = len(pt)
    outputs = evaluator(seed_point(pt))
    rows = []
    for out in outputs:
        if isinstance(out, DualScalar):
            rows.append(list(out.partials))
        else:
            rows.append([Fraction(0)] * k)
    return RMatrix(len(rows), k, [e for row in rows for e in row])
