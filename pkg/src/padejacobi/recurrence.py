"""First- and second-kind polynomials of a P-fraction.

The three-term (block) recurrence is carried in *monic rescaled* form:
with bt_{j-1} = eps_{j-1} eps_j b_{j-1} the scaled solutions
uhat_j = (b_0 ... b_{j-1}) u_j satisfy

    uhat_{j+1} = p_j * uhat_j - eps_{j-1} eps_j b_{j-1}^2 * uhat_{j-1},

which involves only b^2 and is therefore exact for rational input.
First kind: Phat_0 = 1, Phat_1 = p_0.  Second kind: Qhat_0 = 0,
Qhat_1 = eps_0.  The m-function of the finite truncation is
prescale * (-Qhat_j / Phat_j), the diagonal approximant at n_j.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List

from .errors import NonDivisible, NotAdmissible, PoleHit
from .pfraction import PFraction
from .poly import Poly, poly_eval, poly_roots
from .scalars import is_exact, is_zero, to_mpf


@dataclass
class PolySequencePair:
    """Monic first/second-kind polynomials Phat_j, Qhat_j, j = 0..depth."""

    pf: PFraction
    P: List[Poly]
    Q: List[Poly]

    @property
    def depth(self) -> int:
        return len(self.P) - 1

    @property
    def prescale(self):
        return self.pf.prescale

    def normal_index(self, j: int) -> int:
        """n_j = deg Phat_j."""
        return self.P[j].degree


def poly_pair(pf: PFraction, depth: int = None) -> PolySequencePair:
    """Run the monic recurrence up to Phat_depth / Qhat_depth."""
    if depth is None:
        depth = len(pf.steps)
    if depth > len(pf.steps):
        raise NotAdmissible(
            f"P-fraction has {len(pf.steps)} steps, cannot reach j={depth}")
    P = [Poly.one()]
    Q = [Poly.zero()]
    if depth >= 1:
        P.append(pf.steps[0].p)
        Q.append(Poly([Fraction(pf.steps[0].eps)]))
    for j in range(1, depth):
        pj = pf.steps[j].p
        c = pf.steps[j - 1].eps * pf.steps[j].eps * pf.steps[j - 1].b_sq
        P.append(pj * P[j] - P[j - 1].scale(c))
        Q.append(pj * Q[j] - Q[j - 1].scale(c))
    return PolySequencePair(pf, P, Q)


def m_function(pair: PolySequencePair, j: int, lam):
    """Value of the finite-truncation m-function -Qhat_j/Phat_j at a
    point, rescaled by the expansion prefactor; the diagonal Pade
    approximant of the source series at order n_j."""
    den = poly_eval(pair.P[j], lam)
    num = poly_eval(pair.Q[j], lam)
    if is_exact(den):
        if den == 0:
            raise PoleHit(f"Phat_{j} vanishes at the evaluation point")
        return -pair.prescale * num / den
    if is_zero(den / (1 + abs(to_mpf(lam)) ** pair.P[j].degree)):
        raise PoleHit(f"Phat_{j} vanishes at the evaluation point")
    return -to_mpf(pair.prescale) * num / den


def tau(pair: PolySequencePair, j: int):
    """tau_j = b_j P_{j+1}(0) / P_j(0) = Phat_{j+1}(0) / Phat_j(0)."""
    if j + 1 > pair.depth:
        raise NotAdmissible(f"need Phat_{j + 1}; pair depth is {pair.depth}")
    den = pair.P[j](0)
    if is_exact(den):
        if den == 0:
            raise NotAdmissible(f"Phat_{j}(0) = 0: tau_{j} undefined")
        return pair.P[j + 1](0) / den
    if is_zero(den):
        raise NotAdmissible(f"Phat_{j}(0) = 0: tau_{j} undefined")
    num = poly_eval(pair.P[j + 1], 0)
    return num / to_mpf(den)


@dataclass(frozen=True)
class TauEntry:
    j: int
    admissible: bool
    value: object  # None when inadmissible


@dataclass(frozen=True)
class TauSequence:
    entries: tuple

    def admissible_values(self):
        return [(e.j, e.value) for e in self.entries if e.admissible]

    def sup_abs(self):
        vals = [abs(to_mpf(v)) for _, v in self.admissible_values()]
        return max(vals) if vals else None


def tau_sequence(pair: PolySequencePair, horizon: int = None) -> TauSequence:
    """tau_j for j = 0 .. horizon-1, flagging inadmissible indices
    (Phat_j(0) = 0) instead of raising."""
    if horizon is None:
        horizon = pair.depth
    horizon = min(horizon, pair.depth)
    entries = []
    for j in range(horizon):
        try:
            entries.append(TauEntry(j, True, tau(pair, j)))
        except NotAdmissible:
            entries.append(TauEntry(j, False, None))
    return TauSequence(tuple(entries))


def christoffel(pair: PolySequencePair, j: int) -> Poly:
    """Monic quasi-Christoffel factor of step j:

        (Phat_j - tau_{j-1} Phat_{j-1}) / lambda,

    the subdiagonal denominator with its forced zero at the origin
    divided out.  Exact divisibility is verified."""
    if j < 1:
        raise NotAdmissible("christoffel needs j >= 1")
    t = tau(pair, j - 1)
    num = pair.P[j] - pair.P[j - 1].scale(t)
    c0 = num.coeffs[0]
    if is_exact(c0):
        divisible = c0 == 0
    else:
        scale = max(abs(to_mpf(c)) for c in num.coeffs)
        divisible = scale == 0 or is_zero(c0 / scale)
    if not divisible:
        raise NonDivisible("kernel polynomial does not vanish at the origin")
    return Poly(num.coeffs[1:]) if num.degree >= 1 else Poly.zero()


def zero_distance(pair: PolySequencePair, j: int):
    """Distance from the origin to the nearest zero of Phat_j."""
    if pair.P[j].degree < 1:
        raise NotAdmissible(f"Phat_{j} is constant: no zeros")
    return min(abs(r) for r in poly_roots(pair.P[j]))
