from fractions import Fraction
from random import Random

from matsep import BinaryForm, binary_form_gcd, rational_projective_roots
from helpers import sylvester_resultant_quadratics


def form(*coeffs):
    return BinaryForm(len(coeffs) - 1, tuple(Fraction(c) for c in coeffs))


def test_gcd_no_common_root():
    # u^2 and v^2
    g = binary_form_gcd([form(0, 0, 1), form(1, 0, 0)])
    assert g.degree == 0 and not g.is_zero


def test_gcd_shared_factor():
    # uv and u^2 share u
    g = binary_form_gcd([form(0, 1, 0), form(0, 0, 1)])
    assert g.degree == 1
    assert g.coefficients == (Fraction(0), Fraction(1))


def test_gcd_mixed_degrees():
    # u^2 - v^2 and u - v share u - v; frozen from the univariate oracle:
    # gcd(x^2 - 1, x - 1) = x - 1, no root at infinity
    g = binary_form_gcd([form(-1, 0, 1), form(-1, 1)])
    assert g.degree == 1
    assert g.coefficients == (Fraction(-1), Fraction(1))


def test_gcd_all_zero_is_flagged():
    g = binary_form_gcd([form(0, 0, 0), form(0)])
    assert g.is_zero


def test_root_at_infinity():
    # both leading coefficients vanish: common root [1:0]
    g = binary_form_gcd([form(1, 2, 0), form(3, 5, 0)])
    assert g.degree >= 1
    roots = rational_projective_roots(g)
    assert (Fraction(1), Fraction(0)) in roots


def test_rational_projective_roots_finite():
    # (u - 2v)(u + 3v): roots [2:1] and [-3:1]
    g = form(-6, 1, 1)
    roots = rational_projective_roots(g)
    assert roots == [(Fraction(-3), Fraction(1)), (Fraction(2), Fraction(1))]


def test_irrational_roots_not_listed():
    # u^2 - 2v^2 has no rational projective roots
    assert rational_projective_roots(form(-2, 0, 1)) == []


def test_gcd_positive_degree_iff_resultant_vanishes():
    rng = Random(303)
    checked = 0
    while checked < 200:
        f = form(*(rng.randint(-5, 5) for _ in range(3)))
        g = form(*(rng.randint(-5, 5) for _ in range(3)))
        if f.is_zero or g.is_zero:
            continue
        res = sylvester_resultant_quadratics(f, g)
        gcd = binary_form_gcd([f, g])
        assert (gcd.degree > 0) == (res == 0), (f, g, res, gcd)
        checked += 1
    # force some common-root cases, including at infinity
    for _ in range(50):
        a, b = rng.randint(-5, 5), rng.randint(-5, 5)
        c, d = rng.randint(1, 5), rng.randint(-5, 5)
        # both divisible by (c*u + (a - unused)v)? build products explicitly
        shared = (a, c)  # root u = -a/c... represented by factor (c u + a v)
        f = _times_linear(shared, (b, 1))
        g = _times_linear(shared, (d, 1))
        assert sylvester_resultant_quadratics(f, g) == 0
        assert binary_form_gcd([f, g]).degree > 0


def _times_linear(p, q):
    """(p1 v + p2 u)(q1 v + q2 u) as a degree-two form."""
    (p1, p2), (q1, q2) = p, q
    return BinaryForm(2, (Fraction(p1 * q1), Fraction(p1 * q2 + p2 * q1),
                          Fraction(p2 * q2)))
