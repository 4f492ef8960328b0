"""Escaping subdiagonal poles from a two-periodic Jacobi matrix.

The moment sequence (1, 1, 2, 3, ...) generated matrix-first from the
two-periodic Jacobi matrix (alternating diagonal 1, 0, 1, 0, ..., all
couplings 1) stays exactly rational through the whole pipeline.  Its
corner ratios tau follow closed forms, tau_{2k} = -(k+1) and
tau_{2k+1} = 1/(k+1): the sequence grows linearly, so the boundedness
condition for locally uniform subdiagonal convergence fails, and a
pole of the subdiagonal approximant escapes to -infinity.
"""

from mpmath import mp

from padejacobi import (FormalSeries, condition_b_report, expand_pfraction,
                        poly_pair, set_precision, subdiagonal, tau,
                        tau_sequence)
from padejacobi.scenarios import two_periodic_moments

set_precision(256)

moms = two_periodic_moments(40)
print("matrix-first moments:", [str(m) for m in moms[:8]], "...")

pair = poly_pair(expand_pfraction(FormalSeries(list(moms)), 18))
print("\ncorner ratios tau_j (exact rationals):")
for j in range(12):
    print(f"  tau_{j:2d} = {tau(pair, j)}")

cb = condition_b_report(tau_sequence(pair))
print(f"\ncondition-(B) verdict: {cb.verdict} "
      f"(sup |tau| over the horizon = {cb.sup_abs})")

print("\nlargest-modulus pole of the subdiagonal approximant at "
      "truncation 2k+1:")
for k in range(1, 8):
    sub = subdiagonal(pair, 2 * k + 1)
    big = max(abs(p) for p in sub.poles())
    print(f"  k = {k}   max |pole| = {mp.nstr(big, 8)}   (lower bound {k})")
print("\nthe escaping pole is the signature of the unbounded tau "
      "sequence: no locally uniform convergence on the left half-line.")
