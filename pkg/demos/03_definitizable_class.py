"""The definitizable class: t-weighted Markov functions.

Multiplying the arcsine measure by the (sign-changing) weight t makes
the transform G(lambda) = Int t dsigma(t)/(t - lambda) leave the
positive-definite world: exactly one Hankel eigenvalue goes negative
(index kappa = 1), every other principal determinant degenerates, and
the continued fraction develops 2x2 blocks.  The structure is still
rigid, and the Schur step that peels off one block is exactly
invertible.
"""

from fractions import Fraction

from padejacobi import (ARCSINE, DSeries, FunctionSpec, MeasureSpec,
                        assemble_series, build_gjm, classify, d_inverse_schur,
                        d_pfraction, d_schur_transform, set_precision)

set_precision(256)

tspec = FunctionSpec(MeasureSpec(intervals=((Fraction(-1), Fraction(1)),),
                                 density=ARCSINE), t_weight=True)
G = assemble_series(tspec, 30)
ds = DSeries(G)
print("t-sequence:", [str(c) for c in ds.coeffs[:8]], "...")

rep = classify(ds, 10)
print(f"\nclassification: kappa = {rep.kappa} (negative Hankel inertia, "
      f"stabilized), first normal index = {rep.frak_n1}, "
      f"class = {rep.dclass}")
print(f"  index bound n_1 <= 2*kappa: {rep.index_bound_ok}")
print(f"  boundary coefficient positive: {rep.boundary_sign_ok}")
print(f"  inertia per truncation size: {rep.inertia_per_n}")

pf = d_pfraction(ds, 8)
print("\nP-fraction block sizes:", [st.k for st in pf.steps])
print("generalized Jacobi matrix, first block:")
g = build_gjm(pf)
for row in g.diag_block(0):
    print("  ", [str(x) for x in row])

step, remainder = d_schur_transform(ds)
print(f"\none Schur step peels a degree-{step.p.degree} block: "
      f"p = {step.p.coeffs}, eps = {step.eps}, b^2 = {step.b_sq}")
back = d_inverse_schur(step, remainder)
restored = back.series.scale(back.factor)
n = min(24, restored.truncation_order)
print(f"inverse step restores the first {n} coefficients exactly:",
      restored.coeffs[:n] == list(ds.coeffs)[:n])
