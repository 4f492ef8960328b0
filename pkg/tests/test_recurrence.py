from fractions import Fraction

import pytest
from mpmath import mp

from padejacobi.errors import NotAdmissible, PoleHit
from padejacobi.measures import (ARCSINE, FunctionSpec, MeasureSpec,
                                 assemble_series, eval_exact)
from padejacobi.pfraction import build_gjm, expand_pfraction
from padejacobi.poly import Poly, poly_eval
from padejacobi.recurrence import (christoffel, m_function, poly_pair, tau,
                                   tau_sequence, zero_distance)
from padejacobi.scalars import to_mpf
from padejacobi.series import series_from_rational

F = Fraction

ARCSINE_SPEC = FunctionSpec(
    measure=MeasureSpec(intervals=((F(-1), F(1)),), density=ARCSINE))


def arcsine_pair(depth=8, order=24):
    return poly_pair(expand_pfraction(assemble_series(ARCSINE_SPEC, order),
                                      depth))


def cheb_t_monic(n):
    """Monic first-kind Chebyshev polynomial 2^(1-n) T_n, via the
    normalized-arcsine recurrence (first offdiagonal 1/2, then 1/4)."""
    if n == 0:
        return Poly.one()
    a, b = Poly.one(), Poly([F(0), F(1)])
    for k in range(1, n):
        c = F(1, 2) if k == 1 else F(1, 4)
        a, b = b, Poly([F(0), F(1)]) * b - a.scale(c)
    return b


def test_denominators_are_monic_chebyshev_t():
    # arcsine P-hat_n = 2^(1-n) T_n  [DERIVED: Chebyshev recurrence oracle]
    pair = arcsine_pair()
    for n in range(1, 8):
        assert pair.P[n] == cheb_t_monic(n)


def test_wronskian_invariant():
    # P_{j+1} Q_j - Q_{j+1} P_j is the constant -eps_0 prod eps eps b^2
    # [DERIVED: Liouville invariant of the three-term recurrence]
    pair = arcsine_pair()
    pf = pair.pf
    for j in range(1, 6):
        w = pair.P[j + 1] * pair.Q[j] - pair.Q[j + 1] * pair.P[j]
        assert w.degree == 0
        want = F(-1) * pf.steps[0].eps
        for i in range(1, j + 1):
            want *= pf.steps[i - 1].eps * pf.steps[i].eps * pf.steps[i - 1].b_sq
        assert w.coeffs[0] == want


def test_denominator_is_characteristic_polynomial():
    # P_hat_j = det(lambda I - J_[0,j-1]) numerically at sample points
    pair = arcsine_pair()
    g = build_gjm(pair.pf)
    for j in (2, 3, 5):
        M = g.dense(0, j - 1)
        n = len(M)
        for lam in (mp.mpf(2), mp.mpf("-1.7")):
            A = mp.matrix(n, n)
            for r in range(n):
                for c in range(n):
                    A[r, c] = to_mpf(M[r][c])
            det = mp.det(lam * mp.eye(n) - A)
            assert abs(det - to_mpf(poly_eval(pair.P[j], lam))) < 1e-60


def test_m_function_converges_to_exact_value():
    pair = arcsine_pair(depth=14, order=40)
    lam = mp.mpf(2)
    exact = eval_exact(ARCSINE_SPEC, lam)
    errs = [abs(m_function(pair, j, lam) - exact) for j in (4, 8, 12)]
    assert errs[2] < errs[1] < errs[0]
    assert errs[2] < 1e-12


def test_m_function_pole_guard():
    # single atom at 1/2: m-function at the atom hits the pole
    s = series_from_rational(Poly([F(1)]), Poly([F(1, 2), F(-1)]), 10)
    pair = poly_pair(expand_pfraction(s, 5))
    with pytest.raises(PoleHit):
        m_function(pair, 1, F(1, 2))
    assert m_function(pair, 1, F(2)) == F(1) / (F(1, 2) - 2)


def test_tau_values_arcsine():
    # arcsine: tau_j = U_{j+1}(0)/U_j(0); odd U vanish at 0 => j odd
    # admissible with tau = -1/2 * U-ratio ... compare to direct evaluation
    pair = arcsine_pair()
    for j in range(1, 7):
        if pair.P[j](F(0)) == 0:
            with pytest.raises(NotAdmissible):
                tau(pair, j)
        else:
            assert tau(pair, j) == pair.P[j + 1](F(0)) / pair.P[j](F(0))


def test_tau_sequence_reports_inadmissible_entries():
    ts = tau_sequence(arcsine_pair())
    kinds = [e.admissible for e in ts.entries]
    assert False in kinds and True in kinds
    assert ts.sup_abs() == max(abs(to_mpf(v))
                               for _, v in ts.admissible_values())


def test_christoffel_divisibility():
    # (P_j - tau_{j-1} P_{j-1}) vanishes at 0 by construction
    pair = arcsine_pair()
    for j in (3, 5, 7):
        c = christoffel(pair, j)
        assert c.degree == pair.P[j].degree - 1
        lhs = pair.P[j] - pair.P[j - 1].scale(tau(pair, j - 1))
        assert Poly([F(0), F(1)]) * c == lhs


def test_zero_distance_positive_off_support():
    pair = arcsine_pair()
    d = zero_distance(pair, 6)
    # all zeros of the monic U_6 lie in (-1, 1), none at 0 within 1e-30
    assert d > 0
    assert d < 1
