"""Harmonic measure of a two-interval support with a gap around the
origin, and the rational/irrational dichotomy that governs the limit
set of gap poles of subdiagonal approximants.

The support is E = [-1, alpha] U [beta, 1] with -1 < alpha < 0 <
beta < 1.  Everything is computed at the session precision: the
elliptic modulus from the endpoint cross-ratio, complete integrals by
the arithmetic-geometric mean, sn by the descending amplitude
recursion, and the harmonic-measure arguments by bisection on the
monotone sn^2 along (0, K).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from mpmath import mp

from .errors import InvalidGap, ModulusOutOfRange, RootBracketFailure
from .scalars import to_mpf


@dataclass(frozen=True)
class GapSpec:
    """Open gap (alpha, beta) around the origin inside [-1, 1]."""

    alpha: object
    beta: object

    def __post_init__(self):
        a, b = to_mpf(self.alpha), to_mpf(self.beta)
        if not (-1 < a < 0 < b < 1):
            raise InvalidGap("need -1 < alpha < 0 < beta < 1")

    @property
    def support(self):
        return ((Fraction(-1), self.alpha), (self.beta, Fraction(1)))


def modulus(gap: GapSpec):
    """Elliptic modulus k of the two-interval support:
    k^2 = 2(beta - alpha) / ((1 - alpha)(1 + beta))."""
    a, b = to_mpf(gap.alpha), to_mpf(gap.beta)
    ksq = 2 * (b - a) / ((1 - a) * (1 + b))
    if not 0 < ksq < 1:
        raise ModulusOutOfRange(f"k^2 = {ksq} outside (0, 1)")
    return mp.sqrt(ksq)


def elliptic_K(k):
    """Complete elliptic integral of the first kind by the AGM:
    K(k) = pi / (2 * agm(1, sqrt(1 - k^2)))."""
    k = to_mpf(k)
    if not 0 <= k < 1:
        raise ModulusOutOfRange("need 0 <= k < 1")
    return mp.pi / (2 * mp.agm(1, mp.sqrt(1 - k * k)))


def elliptic_E(k):
    """Complete integral of the second kind via the AGM side sequence;
    used for the Legendre-relation self-check."""
    k = to_mpf(k)
    if not 0 <= k < 1:
        raise ModulusOutOfRange("need 0 <= k < 1")
    a, b, c = mp.mpf(1), mp.sqrt(1 - k * k), k
    ssum = c * c / 2
    pow2 = mp.mpf(1)
    while abs(c) > mp.mpf(2) ** (-mp.prec):
        a, b, c = (a + b) / 2, mp.sqrt(a * b), (a - b) / 2
        pow2 *= 2
        ssum += pow2 * c * c / 2
    K = mp.pi / (2 * a)
    return K * (1 - ssum)


def legendre_defect(k):
    """|E K' + E' K - K K' - pi/2|: zero for consistent K and E."""
    k = to_mpf(k)
    kp = mp.sqrt(1 - k * k)
    K, E = elliptic_K(k), elliptic_E(k)
    Kp, Ep = elliptic_K(kp), elliptic_E(kp)
    return abs(E * Kp + Ep * K - K * Kp - mp.pi / 2)


def jacobi_sn(u, k):
    """sn(u, k) on the real line by the descending AGM amplitude
    recursion (Landen)."""
    u, k = to_mpf(u), to_mpf(k)
    if not 0 <= k < 1:
        raise ModulusOutOfRange("need 0 <= k < 1")
    if k == 0:
        return mp.sin(u)
    a = [mp.mpf(1)]
    b = [mp.sqrt(1 - k * k)]
    c = [k]
    while abs(c[-1]) > mp.mpf(2) ** (-mp.prec):
        an, bn = a[-1], b[-1]
        a.append((an + bn) / 2)
        b.append(mp.sqrt(an * bn))
        c.append((an - bn) / 2)
        if len(a) > mp.prec:
            raise RootBracketFailure("AGM failed to contract")
    N = len(a) - 1
    phi = mp.mpf(2) ** N * a[N] * u
    for n in range(N, 0, -1):
        phi = (phi + mp.asin(c[n] * mp.sin(phi) / a[n])) / 2
    return mp.sin(phi)


def _invert_sn_sq(target, k, K):
    """u in (0, K) with sn(u, k)^2 = target, by bisection (sn^2 is
    strictly increasing from 0 to 1 along (0, K))."""
    target = to_mpf(target)
    if not 0 < target < 1:
        raise RootBracketFailure(f"sn^2 target {target} outside (0, 1)")
    lo, hi = mp.mpf(0), K
    flo = -target
    fhi = 1 - target
    if flo >= 0 or fhi <= 0:
        raise RootBracketFailure("sn^2 bracket lost")
    for _ in range(int(mp.prec) + 16):
        mid = (lo + hi) / 2
        fm = jacobi_sn(mid, k) ** 2 - target
        if fm == 0:
            return mid
        if fm < 0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


@dataclass(frozen=True)
class HarmonicMeasure:
    omega_infinity: object        # harmonic measure at infinity of [beta, 1]
    omega_zero: object            # harmonic measure at the origin
    modulus: object
    K: object


def harmonic_measure(gap: GapSpec) -> HarmonicMeasure:
    """Harmonic measures omega(infinity) and omega(0) of the right
    support band, via sn^2 inversion:

        sn^2(u_inf) = (1 - alpha)/2,            omega(inf) = u_inf/K,
        sn^2(u_0)   = -2 alpha/(k^2 (1-alpha)), omega(0)   = u_0/K.

    The orientation u/K (rather than 1 - u/K) is fixed by two checks:
    it agrees with the equilibrium-measure quadrature oracle for
    omega(inf), and it sends x -> beta to omega -> 1 (a point on the
    band carries full measure of that band).
    """
    a = to_mpf(gap.alpha)
    k = modulus(gap)
    K = elliptic_K(k)
    u_inf = _invert_sn_sq((1 - a) / 2, k, K)
    t0 = -2 * a / (k * k * (1 - a))
    u_0 = _invert_sn_sq(t0, k, K)
    return HarmonicMeasure(u_inf / K, u_0 / K, k, K)


# -- rational/irrational dichotomy --------------------------------------------

@dataclass(frozen=True)
class RationalityVerdict:
    verdict: str                  # "rational" | "irrational" | "undecided"
    approximation: Optional[Tuple[int, int]]  # best (p, q) found
    residual: object              # |x - p/q| for that approximation


def classify_rational(x, max_denominator: int = 10 ** 6) -> RationalityVerdict:
    """Empirical three-valued rationality test by continued-fraction
    convergents at the session precision.

    'rational' when a convergent with denominator <= max_denominator
    matches x to well below the precision floor; 'irrational' when every
    such convergent misses by far more than the floor; 'undecided' in
    the grey zone."""
    x = to_mpf(x)
    floor = mp.mpf(2) ** (-mp.prec + 16)
    # convergents of the continued fraction of x
    p0, q0, p1, q1 = 1, 0, int(mp.floor(x)), 1
    frac = x - mp.floor(x)
    best = (p1, q1, abs(x - p1))
    while q1 <= max_denominator and frac > floor:
        frac = 1 / frac
        a = int(mp.floor(frac))
        frac -= a
        p0, q0, p1, q1 = p1, q1, a * p1 + p0, a * q1 + q0
        if q1 > max_denominator:
            break
        r = abs(x - mp.mpf(p1) / q1)
        if r < best[2]:
            best = (p1, q1, r)
    p, q, r = best
    if r <= floor * q:
        return RationalityVerdict("rational", (p, q), r)
    # best possible rational with denominator q can only be ~1/(q*q') away;
    # being far from all small-denominator rationals is evidence of
    # irrationality at this precision
    if r > mp.mpf(2) ** (-mp.prec // 2):
        return RationalityVerdict("irrational", (p, q), r)
    return RationalityVerdict("undecided", (p, q), r)


@dataclass(frozen=True)
class GapPoleForecast:
    measure: HarmonicMeasure
    verdict_infinity: RationalityVerdict
    forecast: str


def pole_forecast(gap: GapSpec,
                  max_denominator: int = 10 ** 6) -> GapPoleForecast:
    """Forecast for the limit set of spurious gap poles of subdiagonal
    approximants: a rational harmonic measure at infinity yields
    finitely many limit points (eventually periodic pole motion); an
    irrational one yields a dense limit set in the gap closure."""
    hm = harmonic_measure(gap)
    v = classify_rational(hm.omega_infinity, max_denominator)
    if v.verdict == "rational":
        forecast = "finitely-many-limit-points"
    elif v.verdict == "irrational":
        forecast = "dense-in-gap"
    else:
        forecast = "undecided"
    return GapPoleForecast(hm, v, forecast)
