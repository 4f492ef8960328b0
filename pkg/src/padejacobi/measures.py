"""Measure/function specifications, moments, and reference evaluation.

A :class:`FunctionSpec` describes

    F(lambda)      = r1(lambda) * Int dsigma(t)/(t-lambda) + r2(lambda)

or, with the t-weight flag set,

    Ffrak(lambda)  = r1(lambda) * Int t*dsigma(t)/(t-lambda) + r2(lambda).

Moments are exact rationals for arcsine (normalized), Lebesgue with
rational endpoints, and atomic data; sampled-table densities go through
adaptive Gauss-Legendre quadrature and clear the exactness flag.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence, Tuple

from mpmath import mp

from .errors import (PoleOfPerturbation, QuadratureNonConvergence,
                     TooCloseToSupport)
from .hankel import MomentSequence
from .poly import Poly, poly_eval
from .scalars import is_exact, to_mpf, zero_threshold
from .series import FormalSeries, series_add, series_from_rational, series_mul

ARCSINE = "arcsine"
LEBESGUE = "lebesgue"
TABLE = "table"


@dataclass(frozen=True)
class MeasureSpec:
    """A nonnegative measure: absolutely continuous part plus atoms.

    ``density`` is one of {"arcsine", "lebesgue", "table", None}; the
    arcsine density may be recentered with ``arcsine_center`` (the
    supporting interval then is [c-1, c+1]).  Tables are (t, rho(t))
    samples interpolated linearly.
    """

    intervals: Tuple[Tuple[object, object], ...] = ()
    density: Optional[str] = None
    arcsine_center: object = Fraction(0)
    table: Tuple[Tuple[object, object], ...] = ()
    atoms: Tuple[Tuple[object, object], ...] = ()
    normalize: bool = False

    def __post_init__(self):
        object.__setattr__(self, "intervals",
                           tuple((lo, hi) for lo, hi in self.intervals))
        object.__setattr__(self, "atoms", tuple(tuple(a) for a in self.atoms))
        object.__setattr__(self, "table", tuple(tuple(r) for r in self.table))
        ordered = sorted(self.intervals, key=lambda iv: to_mpf(iv[0]))
        for (a, b) in ordered:
            if not to_mpf(a) < to_mpf(b):
                raise ValueError("empty interval")
        for (_, b), (a2, _) in zip(ordered, ordered[1:]):
            if not to_mpf(b) < to_mpf(a2):
                raise ValueError("intervals must be disjoint and ordered")
        for _, w in self.atoms:
            if to_mpf(w) < 0:
                raise ValueError("atom weights must be nonnegative")

    def is_exact(self) -> bool:
        if self.density == TABLE:
            return False
        vals = [x for iv in self.intervals for x in iv]
        vals += [x for a in self.atoms for x in a]
        vals.append(self.arcsine_center)
        return all(is_exact(v) for v in vals)

    def support_points(self):
        pts = [x for iv in self.intervals for x in iv]
        pts += [t for t, _ in self.atoms]
        return pts


@dataclass(frozen=True)
class RationalPerturbation:
    """r1 = q1/w1 (nonnegative on the real line, checked by sampling)
    and r2 = q2/w2, both bounded at infinity."""

    q1: Poly = field(default_factory=Poly.one)
    w1: Poly = field(default_factory=Poly.one)
    q2: Poly = field(default_factory=Poly.zero)
    w2: Poly = field(default_factory=Poly.one)

    def __post_init__(self):
        if self.q1.degree > self.w1.degree and not self.q1.is_zero():
            raise ValueError("deg q1 must not exceed deg w1")
        if self.q2.degree > self.w2.degree and not self.q2.is_zero():
            raise ValueError("deg q2 must not exceed deg w2")
        self._check_r1_sign()

    def _check_r1_sign(self):
        # sampled nonnegativity check of r1 on [-1, 1]; a warning, not a proof
        for i in range(1025):
            x = mp.mpf(-1) + mp.mpf(2) * i / 1024
            w = poly_eval(self.w1, x)
            if abs(w) < zero_threshold():
                continue
            if poly_eval(self.q1, x) / w < -zero_threshold():
                warnings.warn("r1 appears to be negative on [-1,1]",
                              stacklevel=3)
                break

    def is_trivial(self) -> bool:
        return (self.q1 == self.w1 and self.q2.is_zero())

    def r1_at(self, lam):
        den = poly_eval(self.w1, lam)
        if abs(to_mpf(den)) < zero_threshold():
            raise PoleOfPerturbation("lambda is a pole of r1")
        return poly_eval(self.q1, lam) / den

    def r2_at(self, lam):
        den = poly_eval(self.w2, lam)
        if abs(to_mpf(den)) < zero_threshold():
            raise PoleOfPerturbation("lambda is a pole of r2")
        return poly_eval(self.q2, lam) / den


@dataclass(frozen=True)
class FunctionSpec:
    measure: MeasureSpec
    perturbation: Optional[RationalPerturbation] = None
    t_weight: bool = False

    def gap(self):
        """(alpha, beta) of the gap around 0, when the support has one."""
        ivs = sorted(self.measure.intervals, key=lambda iv: to_mpf(iv[0]))
        for (a, b), (a2, b2) in zip(ivs, ivs[1:]):
            if to_mpf(b) < 0 < to_mpf(a2):
                return (b, a2)
        return None


# -- measure moments ----------------------------------------------------------

def _arcsine_raw_moments(count: int):
    """Moments of the normalized arcsine measure on [-1, 1]:
    m_{2k} = C(2k, k) / 4^k, odd moments vanish."""
    out = []
    for j in range(count):
        if j % 2:
            out.append(Fraction(0))
        else:
            k = j // 2
            out.append(Fraction(math.comb(2 * k, k), 4 ** k))
    return out


def _binomial_shift(moms, c, count):
    """Moments of the pushforward t -> t + c."""
    out = []
    for j in range(count):
        acc = 0
        for i in range(j + 1):
            acc += math.comb(j, i) * (c ** (j - i)) * moms[i]
        out.append(acc)
    return out


def _table_density(table):
    ts = [to_mpf(t) for t, _ in table]
    rs = [to_mpf(r) for _, r in table]

    def rho(x):
        if x <= ts[0]:
            return rs[0]
        if x >= ts[-1]:
            return rs[-1]
        for a, b, ra, rb in zip(ts, ts[1:], rs, rs[1:]):
            if a <= x <= b:
                return ra + (rb - ra) * (x - a) / (b - a)
        return mp.mpf(0)

    return rho


def _quad_interval(f: Callable, lo, hi):
    """Gauss-Legendre with node doubling until two successive levels
    agree to 2^(-prec/2) relative."""
    lo, hi = to_mpf(lo), to_mpf(hi)
    tol = zero_threshold()
    prev = None
    for maxdegree in (6, 7, 8, 9, 10, 12):
        val = mp.quad(f, [lo, hi], method="gauss-legendre",
                      maxdegree=maxdegree)
        if prev is not None and abs(val - prev) <= tol * (1 + abs(val)):
            return val
        prev = val
    raise QuadratureNonConvergence("node doubling did not stabilize")


def measure_mass(m: MeasureSpec):
    return measure_moments(m, 1)[0]


def measure_moments(m: MeasureSpec, count: int):
    """Raw moments Int t^j dm(t), j < count (before normalization)."""
    moms = [Fraction(0)] * count
    if m.density == ARCSINE:
        base = _arcsine_raw_moments(count)
        c = m.arcsine_center
        shifted = base if c == 0 else _binomial_shift(base, c, count)
        moms = [a + b for a, b in zip(moms, shifted)]
    elif m.density == LEBESGUE:
        for lo, hi in m.intervals:
            for j in range(count):
                if is_exact(lo) and is_exact(hi):
                    moms[j] += (Fraction(hi) ** (j + 1) - Fraction(lo) ** (j + 1)) / (j + 1)
                else:
                    lo_, hi_ = to_mpf(lo), to_mpf(hi)
                    moms[j] += (hi_ ** (j + 1) - lo_ ** (j + 1)) / (j + 1)
    elif m.density == TABLE:
        rho = _table_density(m.table)
        for lo, hi in m.intervals:
            for j in range(count):
                moms[j] = to_mpf(moms[j]) + _quad_interval(
                    lambda t, j=j: rho(t) * t ** j, lo, hi)
    elif m.density is not None:
        raise ValueError(f"unknown density {m.density!r}")
    for t, w in m.atoms:
        for j in range(count):
            moms[j] += w * t ** j
    if m.normalize:
        mass = moms[0]
        if not to_mpf(mass) > 0:
            raise ValueError("cannot normalize a massless measure")
        moms = [x / mass for x in moms]
    return moms


def moments(spec: FunctionSpec, count: int) -> MomentSequence:
    """First ``count`` coefficients s_j of the expansion of the spec's
    function at infinity (rational-part contributions included)."""
    return MomentSequence(assemble_series(spec, count).coeffs)


def assemble_series(spec: FunctionSpec, order: int) -> FormalSeries:
    """Expansion c - sum s_j lambda^(-j-1) through s_{order-1}."""
    shift = 1 if spec.t_weight else 0
    base_moms = measure_moments(spec.measure, order + shift)
    cauchy = FormalSeries(base_moms[shift:])
    if spec.perturbation is None or spec.perturbation.is_trivial():
        return cauchy
    p = spec.perturbation
    r1 = series_from_rational(p.q1, p.w1, order)
    r2 = series_from_rational(p.q2, p.w2, order)
    return series_add(series_mul(r1, cauchy), r2)


# -- reference evaluation -----------------------------------------------------

def _cauchy_transform(m: MeasureSpec, lam):
    """Int dm(t)/(t - lambda) at full working precision."""
    lam = mp.mpc(to_mpf(lam))
    total = mp.mpc(0)
    if m.density == ARCSINE:
        c = to_mpf(m.arcsine_center)
        mass = mp.mpf(1)
        z = lam - c
        # branch fixed by F ~ -mass/lambda at infinity
        total += -mass / (mp.sqrt(z - 1) * mp.sqrt(z + 1))
    elif m.density == LEBESGUE:
        for lo, hi in m.intervals:
            lo_, hi_ = to_mpf(lo), to_mpf(hi)
            # difference of logs: both arguments lie in one half-plane,
            # so no branch jump for lambda off the interval
            total += mp.log(hi_ - lam) - mp.log(lo_ - lam)
    elif m.density == TABLE:
        rho = _table_density(m.table)
        for lo, hi in m.intervals:
            total += _quad_interval(lambda t: rho(t) / (t - lam), lo, hi)
    for t, w in m.atoms:
        total += to_mpf(w) / (to_mpf(t) - lam)
    if m.normalize:
        total /= to_mpf(measure_mass(
            MeasureSpec(m.intervals, m.density, m.arcsine_center,
                        m.table, m.atoms, normalize=False)))
    return total


def _support_distance(m: MeasureSpec, lam):
    lam = mp.mpc(to_mpf(lam))
    d = mp.inf
    if m.density == ARCSINE:
        c = to_mpf(m.arcsine_center)
        d = min(d, _interval_distance(lam, c - 1, c + 1))
    for lo, hi in m.intervals:
        if m.density in (LEBESGUE, TABLE):
            d = min(d, _interval_distance(lam, to_mpf(lo), to_mpf(hi)))
    for t, _ in m.atoms:
        d = min(d, abs(lam - to_mpf(t)))
    return d


def _interval_distance(lam, lo, hi):
    x, y = mp.re(lam), mp.im(lam)
    if x < lo:
        return mp.sqrt((lo - x) ** 2 + y ** 2)
    if x > hi:
        return mp.sqrt((x - hi) ** 2 + y ** 2)
    return abs(y)


def eval_exact(spec: FunctionSpec, lam):
    """Reference value of the specified function at lambda."""
    if _support_distance(spec.measure, lam) < mp.mpf("1e-8"):
        raise TooCloseToSupport("evaluation point too close to the support")
    base = _cauchy_transform(spec.measure, lam)
    if spec.t_weight:
        # Int t/(t-lambda) dm = mass + lambda * Cauchy
        mass = to_mpf(measure_mass(spec.measure))
        base = mass + to_mpf(lam) * base
    if spec.perturbation is None or spec.perturbation.is_trivial():
        return base
    return spec.perturbation.r1_at(to_mpf(lam)) * base \
        + spec.perturbation.r2_at(to_mpf(lam))
