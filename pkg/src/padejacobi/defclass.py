"""Definitizable (D-class) series: shift bookkeeping between a function
G and F = G/lambda, classification by stabilized Hankel inertia, the
D-Schur transform with its determinant-formula cross-check, and the
admissible-index set computed by two independent routes.

Conventions: for G(lambda) = -g - sum_j t_j lambda^(-j-1) the shifted
function F = G/lambda has moments s_0 = g, s_{j+1} = t_j.  The t_j are
the 'shifted sequence'; kappa is the stabilized negative inertia of its
Hankel matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import (Inconsistent, NotNormalized)
from .hankel import (MomentSequence, NormalIndexSet, monic_orthogonal_poly,
                     normal_indices, stabilized_inertia)
from .pfraction import (PFraction, PFractionStep, expand_pfraction,
                        schur_step)
from .recurrence import poly_pair
from .scalars import is_exact, is_zero, to_mpf, zero_threshold
from .series import FormalSeries


@dataclass(frozen=True)
class DSeries:
    """A definitizable-class series G = c - sum t_j lambda^(-j-1).

    ``normalized`` means the first nonzero t-coefficient has modulus
    one; ``factor`` records what was divided out to get there."""

    series: FormalSeries
    normalized: bool = False
    factor: object = Fraction(1)

    @property
    def constant(self):
        return self.series.constant_term

    @property
    def coeffs(self):
        return self.series.coeffs


def shift_moments(s: MomentSequence) -> DSeries:
    """The series of G = lambda * F from the moments of F: the constant
    slot picks up -s_0 and the tail coefficients shift down by one."""
    return DSeries(FormalSeries(list(s.coeffs[1:]), -s.coeffs[0]))


def unshift(ds: DSeries, gamma=None) -> MomentSequence:
    """Moments of F = G/lambda; ``gamma`` overrides s_0 when the
    constant slot of G is zero (pure D-nought case)."""
    if gamma is None:
        gamma = -ds.constant
    return MomentSequence([gamma] + list(ds.coeffs))


def normalize(ds: DSeries) -> DSeries:
    """Divide out the modulus of the first nonzero t-coefficient."""
    if ds.normalized:
        return ds
    nu = ds.series.first_nonzero_index()
    if nu is None:
        raise NotNormalized("cannot normalize the zero series")
    f = abs(ds.coeffs[nu])
    return DSeries(ds.series.scale(1 / f), True, ds.factor * f)


@dataclass(frozen=True)
class ClassificationReport:
    kappa: int                    # stabilized negative inertia
    kappa_caveat: bool            # inertia still moving near the horizon
    frak_n1: Optional[int]        # first normal index of the t-sequence
    dclass: str                   # "D0" (constant 0) or "D"
    index_bound_ok: Optional[bool]     # frak_n1 <= 2*kappa
    boundary_sign_ok: Optional[bool]   # t_{frak_n1 - 1} > 0 when equal
    inertia_per_n: tuple


def classify(ds: DSeries, horizon: int) -> ClassificationReport:
    """Stabilized negative inertia and the structural checks that a
    definitizable series of that index must satisfy.

    The index kappa is that of F = G/lambda, whose moment sequence is
    the t-sequence pushed down one slot with s_0 = -constant; the
    Hankel inertia of that sequence stabilizes (at kappa), unlike the
    inertia of the t-sequence itself.  The first normal index frak_n1
    is read from the t-sequence."""
    t = MomentSequence(ds.coeffs)
    s = unshift(ds)
    usable = min(horizon, (len(t) + 1) // 2)
    s_usable = min(horizon, (len(s) + 1) // 2)
    kappa, caveat, per_n = stabilized_inertia(s, s_usable)
    nis = normal_indices(t, usable)
    n1 = nis.indices[0] if nis.indices else None
    dclass = "D0" if is_zero(ds.constant) else "D"
    bound_ok = sign_ok = None
    if n1 is not None and kappa > 0:
        bound_ok = n1 <= 2 * kappa
        if n1 == 2 * kappa:
            lead = ds.coeffs[n1 - 1]
            sign_ok = (lead > 0) if is_exact(lead) else to_mpf(lead) > 0
        else:
            sign_ok = True
    return ClassificationReport(kappa, caveat, n1, dclass,
                                bound_ok, sign_ok, tuple(per_n))


def d_schur_transform(ds: DSeries, cross_check: bool = True):
    """One Schur step -1/G = eps*p + b^2*G_next on a normalized D-class
    series with vanishing constant slot.

    When ``cross_check`` is set the extracted monic p is compared with
    the bordered-Hankel determinant formula for the degree-frak_n1
    orthogonal polynomial of the t-sequence; disagreement raises
    Inconsistent."""
    if not is_zero(ds.constant):
        raise NotNormalized("D-Schur step needs a vanishing constant slot")
    work = normalize(ds)
    step, nxt = schur_step(work.series)
    if cross_check:
        t = MomentSequence(work.coeffs)
        n1 = step.p.degree
        if 2 * n1 - 1 <= len(t):
            ref = monic_orthogonal_poly(t, n1)
            if step.p.is_exact() and ref.is_exact():
                agree = step.p == ref
            else:
                bound = max(abs(to_mpf(c)) for c in ref.coeffs) or 1
                agree = all(
                    is_zero((to_mpf(step.p.coeff(k)) - to_mpf(ref.coeff(k)))
                            / bound)
                    for k in range(max(step.p.degree, ref.degree) + 1))
            if not agree:
                raise Inconsistent(
                    "Schur-step denominator disagrees with the "
                    "determinant-formula orthogonal polynomial")
    # the factor removed from the input rides along on the remainder so
    # the inverse transform can restore the original scale
    return step, DSeries(nxt, True, work.factor)


def d_inverse_schur(step: PFractionStep, nxt: DSeries) -> DSeries:
    """Reconstruct the normalized G from -1/G = eps*p + b^2*G_next;
    multiply by the carried ``factor`` to restore the original scale.

    Recovers 2*deg(p) more provable coefficients than ``nxt`` carries,
    inverting the loss of the forward step."""
    p, eps, bsq = step.p, step.eps, step.b_sq
    m = p.degree
    Nhat = nxt.series.truncation_order
    # H(x) = x^m * (eps*p(1/x) + b^2*G_next(1/x)); H(0) = eps*lc(p) != 0
    order = m + Nhat + 1
    H = [Fraction(0)] * (order + 1)
    for i, c in enumerate(p.coeffs):
        H[m - i] = eps * c
    g = nxt.series._xcoeffs()
    for k, c in enumerate(g):
        if m + k <= order:
            H[m + k] += bsq * c
    # G = -eps^2 * x^m / H(x) ... with eps^2 = 1: G = -x^m * (1/H)(x)
    h = _inv_series(H, order)
    s = []
    for j in range(2 * m + Nhat):
        k = j + 1 - m
        s.append(h[k] if 0 <= k <= order else Fraction(0))
    return DSeries(FormalSeries(s), nxt.normalized, nxt.factor)


def _inv_series(G, order):
    g0 = G[0]
    h = [Fraction(1) / g0 if is_exact(g0) else 1 / g0]
    for n in range(1, order + 1):
        acc = 0
        for k in range(1, n + 1):
            gk = G[k] if k < len(G) else 0
            acc += gk * h[n - k]
        h.append(-acc / g0)
    return h


def d_pfraction(ds: DSeries, depth: int, strict: bool = False) -> PFraction:
    """Full P-fraction of a D-class series with vanishing constant slot;
    identical algorithm to the N-class expansion, recorded prescale
    includes the normalization factor."""
    if not is_zero(ds.constant):
        raise NotNormalized("expansion needs a vanishing constant slot")
    return expand_pfraction(ds.series, depth, strict=strict)


def admissible_indices(s: MomentSequence, horizon: int) -> NormalIndexSet:
    """Indices n_j that are normal for both the moment sequence of F
    and its shift (the moments of G = lambda*F), computed two ways:

      1. intersection of the two normal-index sets,
      2. normal indices n_j of F with Phat_j(0) != 0 along the
         P-fraction of F (det H_{n_j}(t) is proportional to
         Phat_j(0) * det H_{n_j}(s), so the conditions coincide).

    The routes must agree; disagreement raises Inconsistent."""
    ns = normal_indices(s, horizon)
    t = MomentSequence(s.coeffs[1:])
    t_horizon = min(horizon, (len(t) + 1) // 2)
    nt = normal_indices(t, t_horizon)

    F = FormalSeries(list(s.coeffs))
    pf = expand_pfraction(F, horizon)
    pair = poly_pair(pf)
    # both routes are only provable up to the depth the expansion reached
    limit = t_horizon
    if not pf.finite and pair.depth > 0:
        limit = min(limit, pair.normal_index(pair.depth))
    route1 = tuple(n for n in ns.indices if n <= limit and n in nt.indices)
    route2 = []
    for j in range(1, pair.depth + 1):
        n = pair.normal_index(j)
        if n > limit:
            break
        p0 = pair.P[j](0)
        nonzero = (p0 != 0) if is_exact(p0) else not is_zero(to_mpf(p0))
        if nonzero:
            route2.append(n)
    if route1 != tuple(route2):
        raise Inconsistent(
            f"admissible-index routes disagree: {route1} vs {tuple(route2)}")
    return NormalIndexSet(route1, limit,
                          None if s.exact else zero_threshold())
