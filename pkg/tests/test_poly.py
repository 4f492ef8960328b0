from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st
from mpmath import mp

from padejacobi.errors import NotMonic
from padejacobi.poly import (Poly, companion_matrix, poly_eval, poly_gcd,
                             poly_roots, resultant_nonzero)

coeff = st.fractions(min_value=-20, max_value=20, max_denominator=12)
polys = st.lists(coeff, min_size=1, max_size=6).map(Poly)
nonzero_polys = polys.filter(lambda p: not p.is_zero())


def test_trim_and_degree():
    p = Poly([Fraction(1), Fraction(2), Fraction(0), Fraction(0)])
    assert p.degree == 1
    assert Poly([Fraction(0)]).is_zero()


@given(polys, polys)
def test_add_commutes(a, b):
    assert a + b == b + a


@given(polys, polys, polys)
def test_mul_distributes(a, b, c):
    assert a * (b + c) == a * b + a * c


@given(polys, nonzero_polys)
@settings(max_examples=60)
def test_divmod_reconstructs(a, b):
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.is_zero() or r.degree < b.degree


@given(nonzero_polys, nonzero_polys, nonzero_polys)
@settings(max_examples=40)
def test_gcd_divides_both(a, b, g):
    x, y = a * g, b * g
    d = poly_gcd(x, y)
    assert d.degree >= g.degree
    for z in (x, y):
        _, r = z.divmod(d)
        assert r.is_zero()


def test_from_roots_and_eval():
    p = Poly.from_roots([Fraction(1), Fraction(-2)])
    assert p(Fraction(1)) == 0 and p(Fraction(-2)) == 0
    assert p(Fraction(0)) == -2


def test_companion_needs_monic():
    with pytest.raises(NotMonic):
        companion_matrix(Poly([Fraction(1), Fraction(2)]))


def test_roots_match_constructed():
    # [DERIVED: roots chosen, polynomial built from them]
    roots = [Fraction(-3), Fraction(0), Fraction(1, 2), Fraction(2)]
    p = Poly.from_roots(roots)
    found = sorted(r.real for r in poly_roots(p))
    for f, want in zip(found, sorted(roots)):
        assert abs(f - mp.mpf(want.numerator) / want.denominator) < 1e-60


def test_roots_complex_pair():
    p = Poly([Fraction(1), Fraction(0), Fraction(1)])  # x^2 + 1
    rs = sorted(poly_roots(p), key=lambda z: z.imag)
    assert abs(rs[0] + 1j) < 1e-60 and abs(rs[1] - 1j) < 1e-60


def test_resultant_nonzero():
    a = Poly.from_roots([Fraction(1), Fraction(2)])
    b = Poly.from_roots([Fraction(3)])
    assert resultant_nonzero(a, b)
    assert not resultant_nonzero(a, Poly.from_roots([Fraction(2)]))


def test_poly_eval_float_path():
    p = Poly([Fraction(1), Fraction(1)])
    v = poly_eval(p, mp.mpf("0.5"))
    assert abs(v - mp.mpf("1.5")) == 0
