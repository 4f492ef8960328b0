"""A classical Markov function end to end.

The Cauchy transform of the arcsine measure on [-1, 1] has an explicit
value off the support, F(lambda) = -1/sqrt(lambda^2 - 1), and its
continued-fraction expansion is the textbook Chebyshev recurrence: all
diagonal entries zero, off-diagonal couplings 1/sqrt(2) then 1/2.  This
script expands the function, prints the scalar Jacobi matrix, and shows
the geometric convergence of the diagonal approximants at lambda = 2.
"""

from fractions import Fraction

from mpmath import mp

from padejacobi import (ARCSINE, FunctionSpec, MeasureSpec, assemble_series,
                        build_gjm, diagonal, eval_exact, expand_pfraction,
                        poly_pair, set_precision, to_mpf)

set_precision(256)

spec = FunctionSpec(MeasureSpec(intervals=((Fraction(-1), Fraction(1)),),
                                density=ARCSINE))
F = assemble_series(spec, 40)
print("first coefficients s_j:", [str(c) for c in F.coeffs[:8]])

pf = expand_pfraction(F, 16)
a, b = build_gjm(pf).classical_coefficients()
print("\nscalar Jacobi matrix:")
print("  diagonal a_j   :", [str(x) for x in a[:6]], "...")
print("  offdiagonal b_j:", [mp.nstr(to_mpf(x), 8) for x in b[:6]], "...")

pair = poly_pair(pf)
lam = mp.mpf(2)
exact = eval_exact(spec, lam)
print(f"\nexact F(2) = {mp.nstr(exact, 25)}  (= -1/sqrt(3))")
print("diagonal approximants at lambda = 2:")
prev = None
for j in range(1, pair.depth + 1):
    err = abs(to_mpf(diagonal(pair, j).evaluate(lam)) - exact)
    ratio = "" if prev is None else f"   ratio {mp.nstr(err / prev, 4)}"
    print(f"  n = {j:2d}   error {mp.nstr(err, 6)}{ratio}")
    prev = err
print("\nthe error ratio settles near 1/(2+sqrt(3))^2 ="
      f" {mp.nstr(1 / (2 + mp.sqrt(3)) ** 2, 6)},"
      " the square of the Zhukovsky coordinate of lambda = 2.")
