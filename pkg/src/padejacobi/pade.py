"""Pade approximants assembled from the monic recurrence pipeline, an
independent linear-algebra oracle, and diagnostic reports (contact
verification, boundedness of the tau sequence, pole location relative
to a spectral gap).

All approximants are returned as ratios of lambda-polynomials; on the
rational path every coefficient is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from mpmath import lu_solve, matrix, mp

from .errors import (InsufficientMoments, NotAdmissible, NotClassical,
                     PoleHit, SystemSingular)
from .poly import Poly, poly_eval, poly_gcd, poly_roots
from .recurrence import PolySequencePair, christoffel, tau, TauSequence
from .scalars import is_exact, is_zero, to_mpf
from .series import FormalSeries, series_from_rational


@dataclass(frozen=True)
class RationalApproximant:
    """num/den in the outer variable; ``contact_order`` is the number of
    s-coefficients of the source series the approximant matches (the
    constant term is always matched on top of that)."""

    num: Poly
    den: Poly
    kind: str
    contact_order: int

    def evaluate(self, lam):
        d = poly_eval(self.den, lam)
        if is_exact(d):
            if d == 0:
                raise PoleHit("evaluation at a pole of the approximant")
            return poly_eval(self.num, lam) / d
        if is_zero(d / (1 + abs(to_mpf(lam)) ** max(1, self.den.degree))):
            raise PoleHit("evaluation at a pole of the approximant")
        return poly_eval(self.num, lam) / d

    def reduced(self) -> "RationalApproximant":
        """Cancel common factors and make the denominator monic."""
        g = poly_gcd(self.num, self.den)
        num, den = self.num, self.den
        if g.degree > 0:
            num = num.divmod(g)[0]
            den = den.divmod(g)[0]
        lc = den.leading()
        return RationalApproximant(num.scale(1 / lc), den.monic(),
                                   self.kind, self.contact_order)

    def expand(self, order: int) -> FormalSeries:
        return series_from_rational(self.num, self.den, order)

    def poles(self):
        return poly_roots(self.reduced().den)


# -- approximants from the recurrence pipeline --------------------------------

def diagonal(pair: PolySequencePair, j: int) -> RationalApproximant:
    """F^[n_j/n_j] = prescale * (-Qhat_j / Phat_j); contact 2 n_j."""
    if j < 1 or j > pair.depth:
        raise NotAdmissible(f"diagonal needs 1 <= j <= {pair.depth}")
    n = pair.normal_index(j)
    return RationalApproximant(pair.Q[j].scale(-pair.prescale), pair.P[j],
                               "diagonal", 2 * n)


def subdiagonal(pair: PolySequencePair, j: int) -> RationalApproximant:
    """Subdiagonal approximant at n_j: denominator
    Phat_j - tau_{j-1} Phat_{j-1} vanishes at the origin; defined only
    when Phat_{j-1}(0) != 0.  Contact 2 n_j - 1."""
    if j < 1 or j > pair.depth:
        raise NotAdmissible(f"subdiagonal needs 1 <= j <= {pair.depth}")
    t = tau(pair, j - 1)
    den = pair.P[j] - pair.P[j - 1].scale(t)
    num = (pair.Q[j] - pair.Q[j - 1].scale(t)).scale(-pair.prescale)
    n = pair.normal_index(j)
    return RationalApproximant(num, den, "subdiagonal", 2 * n - 1)


def perturbed_truncation(pair: PolySequencePair, j: int):
    """The rank-one corner perturbation behind the subdiagonal
    approximant: (tau_{j-1}, kernel denominator / lambda)."""
    return tau(pair, j - 1), christoffel(pair, j)


def definitizable_diagonal(pair: PolySequencePair, j: int) -> RationalApproximant:
    """Diagonal approximant of the once-shifted (definitizable-class)
    function G = lambda * F, obtained as lambda times the subdiagonal of
    F; the forced origin zero of the subdiagonal denominator cancels the
    lambda so numerator and denominator degrees stay <= n_j - 1 + k_0
    bookkeeping aside, contact drops by one more step."""
    sub = subdiagonal(pair, j)
    n = pair.normal_index(j)
    return RationalApproximant(sub.num.shift_up(), sub.den,
                               "definitizable", 2 * n - 2)


def modified_diagonal(pair: PolySequencePair, j: int) -> RationalApproximant:
    """Modified diagonal (Phat_j - prescale*lambda*Qhat_j)/Phat_j for a
    classical (scalar, all-positive) P-fraction: the diagonal of
    1 + lambda*F."""
    if not pair.pf.is_classical():
        raise NotClassical("modified diagonal needs a scalar positive "
                           "J-fraction")
    if j < 1 or j > pair.depth:
        raise NotAdmissible(f"modified diagonal needs 1 <= j <= {pair.depth}")
    num = pair.P[j] - pair.Q[j].scale(pair.prescale).shift_up()
    n = pair.normal_index(j)
    return RationalApproximant(num, pair.P[j], "modified", 2 * n - 1)


# -- independent oracle -------------------------------------------------------

def _exact_solve(rows, rhs):
    """Gaussian elimination over exact scalars; raises on singularity."""
    n = len(rows)
    a = [list(r) + [rhs[i]] for i, r in enumerate(rows)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise SystemSingular("singular Pade system")
        a[col], a[piv] = a[piv], a[col]
        d = a[col][col]
        a[col] = [x / d for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[i][n] for i in range(n)]


def pade_oracle(F: FormalSeries, L: int, M: int) -> RationalApproximant:
    """[L/M] Pade approximant of F by a direct linear solve on the
    coefficients, independent of the Schur/recurrence pipeline.

    Works in the power-series picture at infinity (x = 1/lambda) with
    numerator and denominator x-degrees L and M, then clears powers of
    lambda; requires L <= M and truncation order >= L + M."""
    if L > M:
        raise NotAdmissible("oracle requires L <= M")
    if F.truncation_order < L + M:
        raise InsufficientMoments(
            f"need series order {L + M}, have {F.truncation_order}")
    g = F._xcoeffs()

    def gc(i):
        return g[i] if 0 <= i < len(g) else Fraction(0)

    # denominator B(x) = 1 + b_1 x + ... + b_M x^M from the homogeneous
    # contact equations at x^{L+1} .. x^{L+M}
    if M > 0:
        rows = [[gc(L + 1 + i - k) for k in range(1, M + 1)]
                for i in range(M)]
        rhs = [-gc(L + 1 + i) for i in range(M)]
        if F.is_exact():
            b = _exact_solve(rows, rhs)
        else:
            A = matrix(M, M)
            for i in range(M):
                for k in range(M):
                    A[i, k] = to_mpf(rows[i][k])
            try:
                sol = lu_solve(A, matrix([to_mpf(x) for x in rhs]))
            except ZeroDivisionError as exc:
                raise SystemSingular("singular Pade system") from exc
            b = [sol[i] for i in range(M)]
        B = [Fraction(1)] + b
    else:
        B = [Fraction(1)]
    # numerator A(x): low-order coefficients of f*B
    Acoef = []
    for i in range(L + 1):
        acc = sum(gc(i - k) * B[k] for k in range(min(i, M) + 1))
        Acoef.append(acc)
    # clear lambda^{-M}: num = lambda^M A(1/lambda), den = lambda^M B(1/lambda)
    num = Poly(list(reversed(Acoef))).shift_up(M - L) \
        if any(a != 0 for a in Acoef) else Poly.zero()
    den = Poly(list(reversed(B)))
    return RationalApproximant(num, den, "oracle", L + M)


# -- diagnostics --------------------------------------------------------------

def verify_contact(r: RationalApproximant, F: FormalSeries,
                   through: Optional[int] = None):
    """Compare the re-expansion of the approximant against the source
    series.  Returns (matched, max_defect): the number of leading
    s-coefficients that agree (constant term must agree first) and the
    largest absolute defect over the checked window."""
    if through is None:
        through = min(F.truncation_order, r.contact_order)
    through = min(through, F.truncation_order)
    exp = r.expand(through)
    defect_c = F.constant_term - exp.constant_term
    exactp = is_exact(defect_c) and F.is_exact() and exp.is_exact()
    max_defect = abs(to_mpf(defect_c))
    if exactp and defect_c != 0:
        return 0, max_defect
    if not exactp and not is_zero(defect_c):
        return 0, max_defect
    matched = 0
    for j in range(through):
        d = F.coeffs[j] - exp.coeffs[j]
        max_defect = max(max_defect, abs(to_mpf(d)))
        ok = (d == 0) if exactp else is_zero(d)
        if ok and matched == j:
            matched = j + 1
    return matched, max_defect


@dataclass(frozen=True)
class ConditionBReport:
    """Empirical verdict on the boundedness of the admissible tau
    sequence (condition (B) for locally uniform subdiagonal
    convergence)."""

    verdict: str  # bounded | linear-growth | growing | tends-to-zero | inconclusive
    sup_abs: Optional[object]
    admissible: Tuple[Tuple[int, object], ...]
    inadmissible: Tuple[int, ...]


def condition_b_report(ts: TauSequence) -> ConditionBReport:
    """Empirical trend heuristics on |tau| over the admissible indices:
    a growing running maximum classifies as growth (with a log-log
    slope estimate distinguishing linear growth), a collapsing tail as
    decay to zero, a running maximum frozen over the second half as
    bounded."""
    vals = [(j, abs(to_mpf(v))) for j, v in ts.admissible_values()]
    inadm = tuple(e.j for e in ts.entries if not e.admissible)
    if len(vals) < 4:
        return ConditionBReport("inconclusive", ts.sup_abs(),
                                tuple(ts.admissible_values()), inadm)
    absvals = [a for _, a in vals]
    n = len(absvals)
    global_max = max(absvals)
    if global_max == 0:
        return ConditionBReport("bounded", ts.sup_abs(),
                                tuple(ts.admissible_values()), inadm)
    running = []
    m = mp.mpf(0)
    for a in absvals:
        m = max(m, a)
        running.append(m)
    mid = running[n // 2 - 1]
    ratio = running[-1] / mid if mid > 0 else mp.inf
    last_quarter = max(absvals[3 * n // 4:])
    if ratio >= mp.mpf("1.6"):
        # growth: estimate the exponent from the record points
        records = [(j, a) for (j, a), r in zip(vals, running)
                   if a == r and a > 0 and j > 0]
        verdict = "growing"
        if len(records) >= 2:
            (j0, a0), (j1, a1) = records[0], records[-1]
            if j1 > j0 and a1 > a0:
                slope = (mp.log(a1) - mp.log(a0)) / (mp.log(j1) - mp.log(j0))
                if mp.mpf("0.5") <= slope <= mp.mpf("1.5"):
                    verdict = "linear-growth"
    elif last_quarter <= mp.mpf("0.2") * global_max:
        verdict = "tends-to-zero"
    elif running[-1] == mid:
        verdict = "bounded"
    else:
        verdict = "inconclusive"
    return ConditionBReport(verdict, ts.sup_abs(),
                            tuple(ts.admissible_values()), inadm)


@dataclass(frozen=True)
class PoleReport:
    poles: tuple                  # complex pole locations (reduced form)
    in_gap: tuple                 # poles inside the open gap interval
    gap: Optional[tuple]


def pole_report(r: RationalApproximant,
                gap: Optional[tuple] = None) -> PoleReport:
    ps = tuple(r.poles())
    ig = ()
    if gap is not None:
        a, b = to_mpf(gap[0]), to_mpf(gap[1])
        tol = mp.mpf(2) ** (-mp.prec // 2)
        ig = tuple(p for p in ps
                   if abs(p.imag) <= tol * (1 + abs(p))
                   and a < p.real < b)
    return PoleReport(ps, ig, gap)
