"""An irrational rotation driving the corner ratios.

Recentring the arcsine measure at c = cos(pi * theta) with theta =
sqrt(2) - 1 makes the corner ratios tau_n follow the Chebyshev ratio
-T_{n+1}(c) / (2 T_n(c)).  Because theta is irrational the angles
n * pi * theta equidistribute, the ratio never settles, and |tau_n|
has unbounded excursions whenever n * theta comes close to 1/2 mod 1 -
yet the sequence returns near |c| infinitely often.  (The density
argument needs true irrationality, which a finite-precision float can
only support empirically; the built-in verdict is three-valued for
exactly that reason.)
"""

from mpmath import mp

from padejacobi import (ARCSINE, FunctionSpec, MeasureSpec, assemble_series,
                        classify_rational, expand_pfraction, poly_pair,
                        set_precision, tau, to_mpf)

set_precision(256)

theta = mp.sqrt(2) - 1
c = mp.cos(mp.pi * theta)
v = classify_rational(theta, 10 ** 4)
print(f"theta = sqrt(2) - 1, empirical rationality verdict: {v.verdict} "
      f"(best p/q = {v.approximation}, residual {mp.nstr(v.residual, 4)})")

spec = FunctionSpec(MeasureSpec(density=ARCSINE, arcsine_center=c))
F = assemble_series(spec, 62)
pair = poly_pair(expand_pfraction(F, 30))

print("\n  n    tau_n                 -T_(n+1)(c)/(2 T_n(c))    |T_n(c)|")
for n in range(30):
    got = to_mpf(tau(pair, n))
    want = -c if n == 0 else -mp.chebyt(n + 1, c) / (2 * mp.chebyt(n, c))
    print(f"  {n:2d}   {mp.nstr(got, 12):>20}   {mp.nstr(want, 12):>20}"
          f"   {mp.nstr(abs(mp.chebyt(n, c)), 6)}")

print("\nlarge |tau_n| excursions line up with T_n(c) near zero, i.e. "
      "n*theta close to 1/2 modulo 1 - the irrational rotation at work.")
