"""Binary forms and their greatest common divisor over the rationals.

A binary form of degree d is a homogeneous polynomial q(u, v) stored by
the coefficient of u^i v^(d-i) at index i.  A family of forms shares a
projective root over the complex numbers exactly when its gcd has
positive degree; the root [1:0] at infinity corresponds to all leading
coefficients vanishing and is tracked separately from the dehomogenised
univariate gcd.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as int_gcd
from typing import List, Optional, Sequence, Tuple

from .rational import rat


@dataclass(frozen=True)
class BinaryForm:
    degree: int
    coefficients: Tuple[Fraction, ...]  # index = exponent of the first variable

    def __post_init__(self):
        coeffs = tuple(rat(c) for c in self.coefficients)
        if len(coeffs) != self.degree + 1:
            raise ValueError("coefficient count must be degree + 1")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coefficients)

    def evaluate(self, u, v):
        u, v = rat(u), rat(v)
        return sum((c * u**i * v**(self.degree - i)
                    for i, c in enumerate(self.coefficients)), Fraction(0))

    @staticmethod
    def zero() -> "BinaryForm":
        return BinaryForm(0, (Fraction(0),))


def _strip(p: List[Fraction]) -> List[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(num: List[Fraction], den: List[Fraction]):
    num = list(num)
    q = [Fraction(0)] * max(0, len(num) - len(den) + 1)
    while len(num) >= len(den) and _strip(num):
        shift = len(num) - len(den)
        factor = num[-1] / den[-1]
        q[shift] = factor
        for i, d in enumerate(den):
            num[shift + i] -= factor * d
        _strip(num)
    return q, num


def _poly_gcd(p: List[Fraction], q: List[Fraction]) -> List[Fraction]:
    """Monic gcd of univariate rational polynomials (Euclid)."""
    a, b = _strip(list(p)), _strip(list(q))
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, _strip(r)
    if not a:
        return []
    lead = a[-1]
    return [c / lead for c in a]


def _dehomogenize(form: BinaryForm) -> List[Fraction]:
    """q(x, 1) as a coefficient list; drops the power of v at infinity."""
    return _strip(list(form.coefficients))


def binary_form_gcd(forms: Sequence[BinaryForm]) -> BinaryForm:
    """Gcd of binary forms; positive degree iff a common complex root exists.

    An all-zero family yields the zero form, which callers must treat as
    "everything vanishes" (every direction is a common root).
    """
    nonzero = [f for f in forms if not f.is_zero]
    if not nonzero:
        return BinaryForm.zero()
    # multiplicity of the common root at infinity: each form contributes
    # degree minus dehomogenised degree
    inf_mult = min(f.degree - (len(_dehomogenize(f)) - 1) for f in nonzero)
    g: List[Fraction] = _dehomogenize(nonzero[0])
    for f in nonzero[1:]:
        g = _poly_gcd(g, _dehomogenize(f))
        if len(g) == 1 and inf_mult == 0:
            break
    deg = (len(g) - 1) + inf_mult
    coeffs = [Fraction(0)] * (deg + 1)
    for i, c in enumerate(g):
        coeffs[i] = c
    return BinaryForm(deg, tuple(coeffs))


def _rational_roots(coeffs: List[Fraction]) -> List[Fraction]:
    """All rational roots of a univariate polynomial, ascending."""
    p = _strip(list(coeffs))
    if not p or len(p) == 1:
        return []
    roots = set()
    while p[0] == 0:
        roots.add(Fraction(0))
        p = p[1:]
    if len(p) > 1:
        mult = 1
        for c in p:
            mult = mult * c.denominator // int_gcd(mult, c.denominator)
        ip = [int(c * mult) for c in p]
        lead, tail = abs(ip[-1]), abs(ip[0])
        for num in _divisors(tail):
            for den in _divisors(lead):
                for cand in (Fraction(num, den), Fraction(-num, den)):
                    if sum((c * cand**i for i, c in enumerate(ip)), Fraction(0)) == 0:
                        roots.add(cand)
    return sorted(roots)


def _divisors(n: int) -> List[int]:
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


ProjectivePoint = Tuple[Fraction, Fraction]


def rational_projective_roots(form: BinaryForm) -> Optional[List[ProjectivePoint]]:
    """Rational projective roots [u:v], normalised to (1,0) or (x,1).

    Returns None for the zero form (every point is a root); the point at
    infinity, when present, is listed first, then finite roots ascending.
    """
    if form.is_zero:
        return None
    roots: List[ProjectivePoint] = []
    if form.coefficients[form.degree] == 0:
        roots.append((Fraction(1), Fraction(0)))
    for x in _rational_roots(list(form.coefficients)):
        roots.append((x, Fraction(1)))
    return roots
