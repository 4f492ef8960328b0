from fractions import Fraction

import pytest
from mpmath import mp

from padejacobi.errors import PoleOfPerturbation, TooCloseToSupport
from padejacobi.measures import (ARCSINE, LEBESGUE, TABLE, FunctionSpec,
                                 MeasureSpec, RationalPerturbation,
                                 assemble_series, eval_exact, measure_moments,
                                 moments)
from padejacobi.poly import Poly

F = Fraction

ARCSINE_SPEC = MeasureSpec(intervals=((F(-1), F(1)),), density=ARCSINE)


def _quad_moment(j, lo, hi, weight):
    return mp.quad(lambda t: weight(t) * t ** j, [lo, 0, hi])


def test_arcsine_moments_vs_quadrature():
    # [DERIVED: adaptive quadrature oracle for 1/(pi sqrt(1-t^2))]
    moms = measure_moments(ARCSINE_SPEC, 7)
    for j, m_exact in enumerate(moms):
        q = _quad_moment(j, -1, 1,
                         lambda t: 1 / (mp.pi * mp.sqrt(1 - t * t)))
        assert abs(mp.mpf(m_exact.numerator) / m_exact.denominator - q) < 1e-12


def test_arcsine_closed_form():
    # m_{2k} = C(2k,k)/4^k, odd vanish  [DERIVED: central binomial]
    moms = measure_moments(ARCSINE_SPEC, 7)
    assert moms == [F(1), F(0), F(1, 2), F(0), F(3, 8), F(0), F(5, 16)]


def test_arcsine_recentred_shift():
    c = F(1, 3)
    shifted = MeasureSpec(intervals=((c - 1, c + 1),), density=ARCSINE,
                          arcsine_center=c)
    moms = measure_moments(shifted, 5)
    cf = mp.mpf(1) / 3
    for j, m_exact in enumerate(moms):
        q = _quad_moment(j, cf - 1, cf + 1,
                         lambda t: 1 / (mp.pi * mp.sqrt(1 - (t - cf) ** 2)))
        assert abs(mp.mpf(m_exact.numerator) / m_exact.denominator - q) < 1e-12


def test_lebesgue_moments_closed_form():
    m = MeasureSpec(intervals=((F(-1), F(-1, 2)), (F(1, 4), F(1))),
                    density=LEBESGUE)
    moms = measure_moments(m, 3)
    for j in range(3):
        want = (F(-1, 2) ** (j + 1) - F(-1) ** (j + 1)) / (j + 1) \
            + (F(1) ** (j + 1) - F(1, 4) ** (j + 1)) / (j + 1)
        assert moms[j] == want


def test_atoms_contribute_power_sums():
    m = MeasureSpec(atoms=((F(1, 2), F(3)), (F(-2), F(1))))
    moms = measure_moments(m, 4)
    assert moms == [F(3) + 1, F(3, 2) - 2, F(3, 4) + 4, F(3, 8) - 8]


def test_table_density_is_inexact_but_close():
    # flat table approximating Lebesgue on [0, 1]
    m = MeasureSpec(intervals=((F(0), F(1)),), density=TABLE,
                    table=((F(0), F(1)), (F(1), F(1))))
    assert not m.is_exact()
    moms = measure_moments(m, 3)
    for j in range(3):
        assert abs(moms[j] - mp.mpf(1) / (j + 1)) < 1e-30


def test_normalize():
    m = MeasureSpec(intervals=((F(0), F(2)),), density=LEBESGUE,
                    normalize=True)
    assert measure_moments(m, 1)[0] == 1


def test_measure_spec_validation():
    with pytest.raises(ValueError):
        MeasureSpec(intervals=((F(1), F(0)),))
    with pytest.raises(ValueError):
        MeasureSpec(intervals=((F(0), F(2)), (F(1), F(3))))
    with pytest.raises(ValueError):
        MeasureSpec(atoms=((F(0), F(-1)),))


def test_perturbation_degree_guard_and_poles():
    with pytest.raises(ValueError):
        RationalPerturbation(q1=Poly([F(0), F(0), F(1)]),
                             w1=Poly([F(0), F(1)]))
    p = RationalPerturbation(q2=Poly([F(1)]), w2=Poly([F(-3), F(1)]))
    with pytest.raises(PoleOfPerturbation):
        p.r2_at(F(3))
    assert p.r2_at(F(4)) == 1


def test_perturbed_series_matches_hand_product():
    # r2 = 1/(lambda-3) adds the pole's own Markov series to s
    # [DERIVED: 1/(lam-3) = -sum -3^j lam^(-j-1) => adds -3^j]
    spec = FunctionSpec(
        measure=ARCSINE_SPEC,
        perturbation=RationalPerturbation(q2=Poly([F(1)]),
                                          w2=Poly([F(-3), F(1)])))
    base = moments(FunctionSpec(measure=ARCSINE_SPEC), 5)
    got = moments(spec, 5)
    for j in range(5):
        assert got[j] == base[j] - F(3) ** j


def test_t_weight_shifts_moments():
    spec = FunctionSpec(measure=ARCSINE_SPEC, t_weight=True)
    plain = measure_moments(ARCSINE_SPEC, 6)
    assert list(moments(spec, 5).coeffs) == plain[1:]


def test_gap_detection():
    spec = FunctionSpec(measure=MeasureSpec(
        intervals=((F(-1), F(-2, 5)), (F(3, 10), F(1))), density=LEBESGUE))
    assert spec.gap() == (F(-2, 5), F(3, 10))
    assert FunctionSpec(measure=ARCSINE_SPEC).gap() is None


def test_eval_exact_matches_series_tail():
    # partial sums of the expansion approach eval_exact far from support
    spec = FunctionSpec(measure=ARCSINE_SPEC)
    lam = mp.mpf(3)
    exact = eval_exact(spec, lam)
    s = assemble_series(spec, 40)
    approx = mp.mpf(s.constant_term.numerator) / s.constant_term.denominator
    for j, c in enumerate(s.coeffs):
        approx -= mp.mpf(c.numerator) / c.denominator * lam ** (-j - 1)
    assert abs(exact - approx) < 1e-15
    # and the closed form -1/sqrt(lam^2-1) for lam > 1  [DERIVED]
    assert abs(exact - (-1 / mp.sqrt(lam * lam - 1))) < 1e-60


def test_eval_exact_guards_support():
    spec = FunctionSpec(measure=ARCSINE_SPEC)
    with pytest.raises(TooCloseToSupport):
        eval_exact(spec, mp.mpf("0.5"))
