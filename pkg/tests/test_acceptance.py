"""Acceptance suite: one test per primary criterion, each emitting a
single pass/fail line.  Tolerances are the stated ones; exact-path
checks use literal rational equality."""

import time
from fractions import Fraction

from mpmath import mp

from padejacobi.defclass import DSeries, admissible_indices, classify, \
    d_inverse_schur, d_schur_transform
from padejacobi.errors import NotAdmissible
from padejacobi.gapgeometry import (GapSpec, elliptic_K, harmonic_measure,
                                    legendre_defect)
from padejacobi.hankel import MomentSequence, normal_indices
from padejacobi.measures import (ARCSINE, LEBESGUE, FunctionSpec, MeasureSpec,
                                 assemble_series, eval_exact)
from padejacobi.pade import (condition_b_report, diagonal, modified_diagonal,
                             pade_oracle, subdiagonal, verify_contact)
from padejacobi.pfraction import expand_pfraction
from padejacobi.recurrence import poly_pair, tau, tau_sequence
from padejacobi.scalars import set_precision, to_mpf
from padejacobi.scenarios import (GAP_LEBESGUE_ATOMS, GAP_LEBESGUE_INTERVALS,
                                  run_scenario, two_periodic_moments)
from padejacobi.series import FormalSeries

F = Fraction


def report(n, ok, detail):
    line = f"[criterion {n:2d}] {'PASS' if ok else 'FAIL'} - {detail}"
    print(line)
    assert ok, line


# -- shared specs -------------------------------------------------------------

ARCSINE_SPEC = FunctionSpec(
    MeasureSpec(intervals=((F(-1), F(1)),), density=ARCSINE))
ARCSINE_T = FunctionSpec(ARCSINE_SPEC.measure, t_weight=True)
EVEN_GAP_INTERVALS = ((F(-1), F(-1, 2)), (F(1, 2), F(1)))
EVEN_GAP = FunctionSpec(
    MeasureSpec(intervals=EVEN_GAP_INTERVALS, density=LEBESGUE))
EVEN_GAP_T = FunctionSpec(EVEN_GAP.measure, t_weight=True)
GAP_LEB = FunctionSpec(MeasureSpec(intervals=GAP_LEBESGUE_INTERVALS,
                                   density=LEBESGUE,
                                   atoms=GAP_LEBESGUE_ATOMS))
GAP_LEB_T = FunctionSpec(GAP_LEB.measure, t_weight=True)
ATOM_PAIR = FunctionSpec(
    MeasureSpec(atoms=((F(-1, 2), F(1, 3)), (F(2, 3), F(1, 4)))))


def spec_pair(spec, depth, extra=4):
    s = assemble_series(spec, 2 * depth + extra)
    return s, poly_pair(expand_pfraction(s, depth))


def two_periodic_pair(depth):
    s = FormalSeries(list(two_periodic_moments(2 * depth + 4)))
    return s, poly_pair(expand_pfraction(s, depth))


def shifted_series(ds):
    """The series of G = lambda * F from the series of F (constant 0)."""
    return FormalSeries(list(ds.coeffs[1:]), -ds.coeffs[0])


# -- criteria -----------------------------------------------------------------

def test_criterion_01_two_periodic_tau_formulas():
    t0 = time.time()
    _, pair = two_periodic_pair(23)
    ok = True
    for k in range(11):
        ok = ok and tau(pair, 2 * k) == -(k + 1)
        if 2 * k + 1 < pair.depth:
            ok = ok and tau(pair, 2 * k + 1) == F(1, k + 1)
    elapsed = time.time() - t0
    ok = ok and elapsed < 5
    report(1, ok, "two-periodic tau_2k = -(k+1), tau_2k+1 = 1/(k+1) "
           f"exactly for k <= 10 in {elapsed:.2f}s")


def test_criterion_02_two_periodic_pole_escape():
    _, pair = two_periodic_pair(19)
    worst = None
    ok = True
    for k in range(1, 9):
        sub = subdiagonal(pair, 2 * k + 1)
        big = max(abs(p) for p in sub.poles())
        ok = ok and big >= k - mp.mpf(2) ** (-mp.prec // 2)
        worst = big if worst is None else min(worst, big / k)
    report(2, ok, "subdiagonal largest pole modulus >= k at truncation "
           f"2k+1 for k <= 8 (min ratio {mp.nstr(worst, 6)})")


def test_criterion_03_shifted_chebyshev_tau_identity():
    c = mp.cos(mp.pi * (mp.sqrt(2) - 1))
    spec = FunctionSpec(MeasureSpec(density=ARCSINE, arcsine_center=c))
    s = assemble_series(spec, 2 * 41 + 2)
    pair = poly_pair(expand_pfraction(s, 41))
    worst = mp.mpf(0)
    for n in range(41):
        got = to_mpf(tau(pair, n))
        # monic orthogonal polynomials are 2^(1-n) T_n(x-c); the ratio
        # formula holds from n = 1, and at n = 0 under T_0 = 1/2
        want = -c if n == 0 else -mp.chebyt(n + 1, c) / (2 * mp.chebyt(n, c))
        worst = max(worst, abs(got - want) / abs(want))
    report(3, worst < mp.mpf(10) ** -20,
           f"tau_n = -T_(n+1)(c)/(2 T_n(c)) for n <= 40, worst relative "
           f"error {mp.nstr(worst, 6)}")


def _contact_cases():
    """(label, source series, approximant, target series) for every
    shipped scenario and approximant kind."""
    cases = []
    specs = [("markov-arcsine", ARCSINE_SPEC), ("arcsine-t", ARCSINE_T),
             ("even-gap", EVEN_GAP), ("normal-indices", EVEN_GAP_T),
             ("gap-lebesgue", GAP_LEB), ("gap-lebesgue-t", GAP_LEB_T),
             ("atom-pair", ATOM_PAIR)]
    sources = [(name, spec_pair(spec, 8)) for name, spec in specs]
    c = mp.cos(mp.pi * (mp.sqrt(2) - 1))
    sources.append(("shifted-chebyshev", spec_pair(
        FunctionSpec(MeasureSpec(density=ARCSINE, arcsine_center=c)), 8)))
    sources.append(("two-periodic", two_periodic_pair(8)))
    for name, (s, pair) in sources:
        g = shifted_series(s)
        if s.is_exact():
            c1 = 1 + s.constant_term - s.coeffs[0]
        else:
            c1 = mp.mpf(1) + to_mpf(s.constant_term) - to_mpf(s.coeffs[0])
        one_plus = FormalSeries(list(s.coeffs[1:]), c1)
        for j in range(1, pair.depth + 1):
            cases.append((f"{name} diagonal j={j}", diagonal(pair, j), s))
            try:
                sub = subdiagonal(pair, j)
                cases.append((f"{name} subdiagonal j={j}", sub, s))
                from padejacobi.pade import definitizable_diagonal
                cases.append((f"{name} definitizable j={j}",
                              definitizable_diagonal(pair, j), g))
            except NotAdmissible:
                pass
            if pair.pf.is_classical():
                cases.append((f"{name} modified j={j}",
                              modified_diagonal(pair, j), one_plus))
    return cases


def test_criterion_04_pade_defining_property():
    checked, ok, worst = 0, True, mp.mpf(0)
    for label, r, target in _contact_cases():
        through = min(r.contact_order, target.truncation_order)
        matched, defect = verify_contact(r, target, through=through)
        scale = max([mp.mpf(1)] + [abs(to_mpf(cc))
                                   for cc in target.coeffs[:through]])
        rel = defect / scale
        if target.is_exact() and r.num.is_exact() and r.den.is_exact():
            good = matched >= through and defect == 0
        else:
            good = matched >= through and rel < mp.mpf(10) ** -40
        worst = max(worst, rel)
        ok = ok and good
        checked += 1
        if not good:
            print(f"  contact failure: {label} matched={matched} "
                  f"needed={through} rel={mp.nstr(rel, 6)}")
    report(4, ok and checked > 50,
           f"re-expansion matches through contact_order-1 for {checked} "
           f"approximants, worst relative defect {mp.nstr(worst, 6)}")


def test_criterion_05_oracle_equivalence():
    specs = [("markov-arcsine", spec_pair(ARCSINE_SPEC, 9)),
             ("even-gap", spec_pair(EVEN_GAP, 9)),
             ("gap-lebesgue", spec_pair(GAP_LEB, 9)),
             ("atom-pair", spec_pair(ATOM_PAIR, 9)),
             ("two-periodic", two_periodic_pair(9))]
    ok, n_diag, n_sub = True, 0, 0
    for name, (s, pair) in specs:
        g = shifted_series(s)
        for j in range(1, pair.depth + 1):
            n = pair.normal_index(j)
            if n > 8:
                break
            r = diagonal(pair, j).reduced()
            o = pade_oracle(s, n, n).reduced()
            ok = ok and r.num == o.num and r.den == o.den
            n_diag += 1
            try:
                sub = subdiagonal(pair, j).reduced()
            except NotAdmissible:
                continue
            if n - 1 > 0:
                og = pade_oracle(g, n - 1, n - 1).reduced()
                ok = ok and sub.num == og.num \
                    and sub.den == og.den.shift_up()
            else:
                og = pade_oracle(g, 0, 0)
                ok = ok and sub.num == og.num \
                    and sub.den == og.den.shift_up()
            n_sub += 1
    report(5, ok and n_diag >= 20 and n_sub >= 8,
           f"recurrence route equals linear-solve oracle exactly "
           f"({n_diag} diagonal, {n_sub} subdiagonal cases, n <= 8)")


def test_criterion_06_shift_identity():
    specs = [("arcsine-t", ARCSINE_T), ("normal-indices", EVEN_GAP_T),
             ("gap-lebesgue-t", GAP_LEB_T)]
    ok, n_checked = True, 0
    for name, tspec in specs:
        G = assemble_series(tspec, 26)
        fs = FormalSeries([F(0)] + list(G.coeffs[:-1]))
        fpair = poly_pair(expand_pfraction(fs, 12))
        gpair = poly_pair(expand_pfraction(FormalSeries(list(G.coeffs)), 12))
        gidx = {gpair.normal_index(j): j for j in range(1, gpair.depth + 1)}
        for j in range(1, fpair.depth + 1):
            n = fpair.normal_index(j)
            if n > 10:
                break
            try:
                sub = subdiagonal(fpair, j)
            except NotAdmissible:
                continue
            if n - 1 not in gidx:
                ok = n == 1 and ok  # [0/0] of G is the zero constant
                continue
            dg = diagonal(gpair, gidx[n - 1])
            ok = ok and dg.num * sub.den == sub.num.shift_up() * dg.den
            n_checked += 1
    report(6, ok and n_checked >= 9,
           f"lambda * F^[n/n-1] equals the diagonal of the shifted "
           f"function, cross-multiplied exactly ({n_checked} cases)")


def test_criterion_07_markov_convergence():
    _, pair = spec_pair(ARCSINE_SPEC, 16)
    lam = mp.mpf(2)
    exact = -1 / mp.sqrt(3)
    errs = [abs(to_mpf(diagonal(pair, j).evaluate(lam)) - exact)
            for j in range(1, 16)]
    ok = errs[-1] < mp.mpf(10) ** -8
    band_ok = all(errs[i + 1] <= 10 * errs[i] for i in range(len(errs) - 1))
    ok = ok and band_ok and errs[-1] < errs[0]
    report(7, ok, f"|F^[n/n](2) + 1/sqrt(3)| = {mp.nstr(errs[-1], 6)} "
           "by n = 15, nonincreasing within a 10x band")


def test_criterion_08_gap_convergence():
    depth = 20
    G = assemble_series(GAP_LEB_T, 2 * depth + 4)
    gpair = poly_pair(expand_pfraction(FormalSeries(list(G.coeffs)), depth))
    lam = F(1, 20)
    ref = eval_exact(GAP_LEB_T, lam)
    alpha, beta = GAP_LEB_T.gap()
    lo = to_mpf(alpha) + mp.mpf(10) ** -6
    hi = to_mpf(beta) - mp.mpf(10) ** -6
    errs, clean = [], True
    for j in range(1, gpair.depth + 1):
        d = diagonal(gpair, j)
        errs.append(abs(to_mpf(d.evaluate(lam)) - ref))
        ingap = [r for r in d.poles()
                 if abs(r.imag) < mp.mpf(2) ** (-mp.prec // 2)
                 and lo < r.real < hi]
        clean = clean and not ingap
    ok = errs[-1] < mp.mpf(10) ** -6 and errs[-1] < errs[0] and clean
    report(8, ok, f"in-gap error {mp.nstr(errs[-1], 6)} < 1e-6 at depth "
           f"{gpair.depth}; zero denominator roots inside the gap at "
           "every depth")


def test_criterion_09_dclass_structure():
    ok = True
    for name, tspec in (("gap-lebesgue-t", GAP_LEB_T),
                        ("normal-indices", EVEN_GAP_T)):
        G = assemble_series(tspec, 30)
        ds = DSeries(G)
        cls = classify(ds, 10)
        ok = ok and cls.kappa == 1 and cls.frak_n1 == 2
        ok = ok and cls.boundary_sign_ok is True
        pf = expand_pfraction(FormalSeries(list(G.coeffs)), 10)
        ok = ok and all(st.k <= 2 for st in pf.steps)
        # N_F = N(frak s) cap N(s), with the independent intersection
        s = MomentSequence([F(0)] + list(G.coeffs))
        nis = admissible_indices(s, 8)
        t = MomentSequence(list(G.coeffs))
        inter = tuple(n for n in normal_indices(s, 8).indices
                      if n <= nis.horizon
                      and n in normal_indices(t, 8).indices)
        ok = ok and tuple(nis.indices) == inter and len(nis.indices) >= 2
    report(9, ok, "t-weighted gap scenarios: kappa = 1, frak_n1 = 2 with "
           "positive boundary coefficient, all blocks <= 2x2, and "
           "N_F = N(frak s) cap N(s) exactly")


def test_criterion_10_schur_roundtrip():
    ok = True
    for name, tspec in (("arcsine-t", ARCSINE_T),
                        ("normal-indices", EVEN_GAP_T),
                        ("gap-lebesgue-t", GAP_LEB_T)):
        ds = DSeries(assemble_series(tspec, 30))
        step, nxt = d_schur_transform(ds)
        back = d_inverse_schur(step, nxt)
        restored = back.series.scale(back.factor)
        n = min(24, restored.truncation_order)
        ok = ok and n >= 24 \
            and restored.coeffs[:24] == list(ds.coeffs)[:24]
    report(10, ok, "inverse Schur after forward Schur restores the first "
           "24 coefficients exactly on 3 D-nought scenarios")


def test_criterion_11_elliptic_layer():
    ok = abs(elliptic_K(mp.mpf(0)) - mp.pi / 2) < mp.mpf(10) ** -70
    k = 1 / mp.sqrt(2)
    kp = mp.sqrt(1 - k * k)
    ok = ok and abs(elliptic_K(k) - elliptic_K(kp)) < mp.mpf(10) ** -70
    hm = harmonic_measure(GapSpec(F(-1, 2), F(1, 2)))
    ok = ok and abs(hm.omega_infinity - mp.mpf("0.5")) < mp.mpf(10) ** -15
    res = max(abs(legendre_defect(mp.mpf(x))) for x in ("0.3", "0.7"))
    ok = ok and res < mp.mpf(10) ** -60
    report(11, ok, "K(0) = pi/2 to 1e-70, K(1/sqrt 2) = K' to 1e-70, "
           "symmetric omega(inf) = 1/2 to 1e-15, Legendre residual "
           f"{mp.nstr(res, 6)} < 1e-60")


def test_criterion_12_condition_b_stability():
    ok = True
    verdicts = {}
    for bits in (128, 256, 512):
        set_precision(bits)
        _, pair = two_periodic_pair(16)
        v2 = condition_b_report(tau_sequence(pair)).verdict
        s, epair = spec_pair(EVEN_GAP, 12)
        ve = condition_b_report(tau_sequence(epair)).verdict
        verdicts[bits] = (v2, ve)
        ok = ok and v2 == "linear-growth" and ve == "bounded"
    set_precision(256)
    rep2 = run_scenario("two-periodic")
    repe = run_scenario("even-gap")
    ok = ok and ("tau sequence diagnosed as linear growth", True) \
        in rep2.checks
    ok = ok and ("tau sequence diagnosed as bounded", True) in repe.checks
    report(12, ok, "two-periodic: linear-growth; even-gap: bounded; "
           f"stable at 128/256/512 bits ({verdicts})")
