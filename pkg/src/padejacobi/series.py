"""Formal series at infinity in the sign convention

    F(lambda) = c - sum_{j<N} s_j lambda^(-j-1).

The ``s_j`` are stored directly (not negated), ``c`` is the constant
term slot (zero for Nevanlinna-class series).  ``truncation_order`` is
the number N of stored s-coefficients; operations never claim
coefficients beyond the provable window of their operands.

Internally most routines convert to the power-series-in-x picture with
x = 1/lambda: g_0 = c, g_{j+1} = -s_j.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import AllZero, DegreeViolation, ExhaustedOrder
from .poly import Poly
from .scalars import is_exact, is_zero, to_mpf


class FormalSeries:
    __slots__ = ("constant_term", "coeffs")

    def __init__(self, coeffs, constant_term=Fraction(0)):
        self.constant_term = constant_term
        self.coeffs = list(coeffs)

    @property
    def truncation_order(self) -> int:
        return len(self.coeffs)

    def is_exact(self) -> bool:
        return is_exact(self.constant_term) and all(is_exact(c) for c in self.coeffs)

    def s(self, j: int):
        return self.coeffs[j]

    def first_nonzero_index(self):
        """Index of the first s_j that is nonzero (None when all vanish).

        Requires constant_term = 0 to be meaningful as a valuation.
        """
        for j, c in enumerate(self.coeffs):
            if not is_zero(c):
                return j
        return None

    def scale(self, factor) -> "FormalSeries":
        return FormalSeries([c * factor for c in self.coeffs],
                            self.constant_term * factor)

    def truncate(self, order: int) -> "FormalSeries":
        return FormalSeries(self.coeffs[:order], self.constant_term)

    def evaluate(self, lam):
        """Value of the truncated sum at a point (testing aid)."""
        inv = 1 / lam if is_exact(lam) and self.is_exact() else 1 / to_mpf(lam)
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc + c) * inv
        return self.constant_term - acc

    def _xcoeffs(self):
        return [self.constant_term] + [-c for c in self.coeffs]

    @staticmethod
    def _from_xcoeffs(g) -> "FormalSeries":
        return FormalSeries([-c for c in g[1:]], g[0])

    def __eq__(self, other) -> bool:
        if not isinstance(other, FormalSeries):
            return NotImplemented
        return (self.constant_term == other.constant_term
                and self.coeffs == other.coeffs)

    def __repr__(self) -> str:
        return f"FormalSeries(c={self.constant_term!r}, s={self.coeffs!r})"


def series_zero(order: int) -> FormalSeries:
    return FormalSeries([Fraction(0)] * order)


def series_add(a: FormalSeries, b: FormalSeries) -> FormalSeries:
    n = min(a.truncation_order, b.truncation_order)
    return FormalSeries([a.coeffs[j] + b.coeffs[j] for j in range(n)],
                        a.constant_term + b.constant_term)


def series_sub(a: FormalSeries, b: FormalSeries) -> FormalSeries:
    return series_add(a, b.scale(-1))


def series_scale(a: FormalSeries, factor) -> FormalSeries:
    return a.scale(factor)


def series_mul(a: FormalSeries, b: FormalSeries) -> FormalSeries:
    """Cauchy product; result order = min of the operand orders."""
    n = min(a.truncation_order, b.truncation_order)
    ga, gb = a._xcoeffs(), b._xcoeffs()
    out = [Fraction(0)] * (n + 1)
    for i, x in enumerate(ga[: n + 1]):
        if is_exact(x) and x == 0:
            continue
        for j in range(0, n + 1 - i):
            out[i + j] += x * gb[j]
    return FormalSeries._from_xcoeffs(out)


def series_recip(F: FormalSeries):
    """Expansion of -1/F at infinity.

    Returns ``(polynomial_part, tail)`` with
    -1/F = polynomial_part(lambda) + tail, where the tail carries the
    constant slot and the provable number of s-coefficients.  When the
    constant term vanishes, deg(polynomial_part) equals the index of the
    first nonzero s-coefficient plus one.
    """
    g = F._xcoeffs()
    m = None
    for j, c in enumerate(g):
        if not is_zero(c):
            m = j
            break
    if m is None:
        raise AllZero("series is identically zero to its truncation order")
    # F = x^m * G(x) with G(0) != 0; -1/F = -x^(-m) * (1/G)(x)
    G = g[m:]
    order = len(G) - 1  # 1/G provable through x^order
    if m > order:
        raise ExhaustedOrder(
            "truncation window too short to expose the polynomial part")
    h = _power_series_inverse(G, order)
    # negative x-powers and the constant land in the polynomial part:
    # coefficient of lambda^i is -h_{m-i}, i = 0..m
    poly_part = Poly([-h[m - i] for i in range(m + 1)])
    # tail: -sum_{k>m} h_k x^(k-m), i.e. s'_j = h_{m+1+j}
    tail_s = h[m + 1:]
    keep = max(0, F.truncation_order - 2 * m)
    return poly_part, FormalSeries(tail_s[:keep] if m > 0 else tail_s)


def _power_series_inverse(G, order):
    """Coefficients of 1/G(x) through x^order, G[0] != 0."""
    g0 = G[0]
    h = [1 / g0 if not isinstance(g0, int) else Fraction(1, 1) / g0]
    for n in range(1, order + 1):
        acc = 0
        for k in range(1, n + 1):
            gk = G[k] if k < len(G) else 0
            acc += gk * h[n - k]
        h.append(-acc / g0)
    return h


def series_from_rational(num: Poly, den: Poly, order: int) -> FormalSeries:
    """Laurent expansion of num/den at infinity by long division.

    Requires deg num <= deg den (function bounded at infinity).
    """
    if num.is_zero():
        return series_zero(order)
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if num.degree > den.degree:
        raise DegreeViolation("deg num must not exceed deg den")
    dn, dd = num.degree, den.degree
    # reversed-coefficient picture: f(x) = x^(dd-dn) * N(x)/D(x), x = 1/lambda
    N = list(reversed(num.coeffs))
    D = list(reversed(den.coeffs))
    shift = dd - dn
    h = _power_series_inverse(D, order + 1)
    g = [Fraction(0)] * (order + 2)
    for i in range(len(g)):
        if i < shift:
            continue
        k = i - shift
        acc = 0
        for t in range(0, k + 1):
            nt = N[t] if t < len(N) else 0
            acc += nt * h[k - t]
        g[i] = acc
    return FormalSeries._from_xcoeffs(g[: order + 1])
