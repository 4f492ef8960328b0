"""Spurious poles in a spectral gap, and the elliptic number that
predicts their fate.

For a measure supported on two bands around a gap containing the
origin, subdiagonal approximants may place a spurious pole inside the
gap.  Whether those poles accumulate on finitely many points or fill
the whole gap is decided by a single number: the harmonic measure at
infinity of the right band, computed here from complete elliptic
integrals.  A symmetric gap gives exactly 1/2 (rational: finitely many
limit points); a generic gap gives an irrational value (dense limit
set).  The t-weighted variant is definitizable of index one and its
diagonal approximants converge inside the gap with no gap poles at
all.
"""

from fractions import Fraction

from mpmath import mp

from padejacobi import (LEBESGUE, FormalSeries, FunctionSpec, GapSpec,
                        MeasureSpec, assemble_series, diagonal, eval_exact,
                        expand_pfraction, harmonic_measure, pole_forecast,
                        poly_pair, set_precision, subdiagonal, to_mpf)
from padejacobi.errors import NotAdmissible
from padejacobi.scenarios import (GAP_LEBESGUE_ATOMS,
                                  GAP_LEBESGUE_INTERVALS)

set_precision(256)

for label, (alpha, beta) in (("symmetric", (Fraction(-1, 2), Fraction(1, 2))),
                             ("asymmetric", (Fraction(-2, 5),
                                             Fraction(3, 10)))):
    gap = GapSpec(alpha, beta)
    hm = harmonic_measure(gap)
    fc = pole_forecast(gap)
    print(f"{label} gap ({alpha}, {beta}):")
    print(f"  omega(infinity) = {mp.nstr(to_mpf(hm.omega_infinity), 25)}")
    print(f"  rationality: {fc.verdict_infinity.verdict}, "
          f"forecast: {fc.forecast}")

print("\nobserved in-gap poles of the subdiagonal approximants "
      "(asymmetric two-band Lebesgue weight):")
spec = FunctionSpec(MeasureSpec(intervals=GAP_LEBESGUE_INTERVALS,
                                density=LEBESGUE,
                                atoms=GAP_LEBESGUE_ATOMS))
alpha, beta = spec.gap()
F = assemble_series(spec, 28)
pair = poly_pair(expand_pfraction(F, 12))
for j in range(2, pair.depth + 1):
    try:
        sub = subdiagonal(pair, j)
    except NotAdmissible:
        continue
    ingap = [p.real for p in sub.reduced().poles()
             if abs(p.imag) < mp.mpf(2) ** (-mp.prec // 2)
             and to_mpf(alpha) < p.real < to_mpf(beta)]
    print(f"  j = {j:2d}:", " ".join(mp.nstr(p, 10) for p in ingap) or "-")

print("\nt-weighted variant: diagonal approximants converge at "
      "lambda = 1/20 inside the gap, no gap poles:")
tspec = FunctionSpec(spec.measure, t_weight=True)
G = assemble_series(tspec, 44)
gpair = poly_pair(expand_pfraction(FormalSeries(list(G.coeffs)), 20))
lam = Fraction(1, 20)
ref = eval_exact(tspec, lam)
for j in (5, 10, 15, 20):
    err = abs(to_mpf(diagonal(gpair, j).evaluate(lam)) - ref)
    print(f"  depth {j:2d}   error {mp.nstr(err, 6)}")
