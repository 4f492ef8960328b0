"""Dense univariate polynomials over the scalar kernel.

Coefficients are stored in ascending degree order and trimmed so that
the leading coefficient is nonzero (the zero polynomial has an empty
interpretation via ``[0]``).  Exactness follows the scalars: a Poly
with all-Fraction coefficients supports exact divmod and gcd.
"""

from __future__ import annotations

from fractions import Fraction

from mpmath import matrix, mp

from .errors import NonConvergence, NotMonic
from .scalars import is_exact, is_zero, sign, to_mpf


class Poly:
    """Dense polynomial c_0 + c_1*x + ... + c_d*x^d."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = list(coeffs)
        while len(coeffs) > 1 and _is_exact_zero(coeffs[-1]):
            coeffs.pop()
        if not coeffs:
            coeffs = [Fraction(0)]
        self.coeffs = coeffs

    # -- construction helpers -------------------------------------------------

    @staticmethod
    def zero() -> "Poly":
        return Poly([Fraction(0)])

    @staticmethod
    def one() -> "Poly":
        return Poly([Fraction(1)])

    @staticmethod
    def identity() -> "Poly":
        """The polynomial x."""
        return Poly([Fraction(0), Fraction(1)])

    @staticmethod
    def from_roots(roots, leading=1) -> "Poly":
        p = Poly([leading])
        for r in roots:
            p = p * Poly([-r, 1])
        return p

    # -- basic queries --------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return len(self.coeffs) == 1 and _is_exact_zero(self.coeffs[0])

    def is_monic(self) -> bool:
        return self.coeffs[-1] == 1

    def is_exact(self) -> bool:
        return all(is_exact(c) for c in self.coeffs)

    def leading(self):
        return self.coeffs[-1]

    def coeff(self, k: int):
        return self.coeffs[k] if k <= self.degree else Fraction(0)

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return Poly([self.coeff(k) + other.coeff(k) for k in range(n)])

    def __sub__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        # written add-wise: Fraction.__sub__ rejects mpf operands while
        # mixed addition and multiplication both coerce fine
        return Poly([self.coeff(k) + (-1) * other.coeff(k)
                     for k in range(n)])

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __mul__(self, other: "Poly") -> "Poly":
        if self.is_zero() or other.is_zero():
            return Poly.zero()
        out = [Fraction(0)] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            if _is_exact_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    def scale(self, c) -> "Poly":
        return Poly([a * c for a in self.coeffs])

    def shift_up(self, k: int = 1) -> "Poly":
        """Multiply by x^k."""
        if self.is_zero():
            return self
        return Poly([Fraction(0)] * k + self.coeffs)

    def monic(self) -> "Poly":
        lc = self.leading()
        if lc == 1:
            return self
        if lc == 0:
            raise ZeroDivisionError("zero polynomial has no monic form")
        inv = 1 / lc
        return Poly([c * inv for c in self.coeffs])

    def divmod(self, other: "Poly"):
        """Polynomial division; exact when both operands are exact."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        d = other.degree
        lc = other.leading()
        if len(rem) - 1 < d:
            return Poly.zero(), self
        quot = [Fraction(0)] * (len(rem) - d)
        inv = 1 / lc
        for k in range(len(rem) - 1, d - 1, -1):
            q = rem[k] * inv
            quot[k - d] = q
            if q != 0:
                for i in range(d + 1):
                    rem[k - d + i] = rem[k - d + i] + (-1) * q \
                        * other.coeffs[i]
        return Poly(quot), Poly(rem[:d] if d > 0 else [Fraction(0)])

    def __call__(self, x):
        """Horner evaluation; exact for exact inputs."""
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        if self.degree == 0:
            return Poly.zero()
        return Poly([k * c for k, c in enumerate(self.coeffs)][1:])

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and _coeffs_equal(self.coeffs, other.coeffs)

    def __repr__(self) -> str:
        return f"Poly({self.coeffs!r})"


def _is_exact_zero(c) -> bool:
    # trimming only removes coefficients that are literally zero; a tiny
    # float leading coefficient is a caller-level decision
    return is_exact(c) and c == 0


def _coeffs_equal(a, b) -> bool:
    n = max(len(a), len(b))
    for k in range(n):
        x = a[k] if k < len(a) else 0
        y = b[k] if k < len(b) else 0
        if x != y:
            return False
    return True


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm (exact path), or a
    threshold-gcd on the float path where remainders below the session
    zero threshold relative to the operand scale are treated as zero."""
    if a.is_zero():
        return b.monic() if not b.is_zero() else Poly.zero()
    if b.is_zero():
        return a.monic()
    exact = a.is_exact() and b.is_exact()
    x, y = a, b
    while not y.is_zero():
        _, r = x.divmod(y)
        if not exact and not r.is_zero():
            bound = max(abs(to_mpf(c)) for c in y.coeffs)
            if all(is_zero(to_mpf(c) / bound) for c in r.coeffs):
                r = Poly.zero()
        x, y = y, r
    return x.monic()


def companion_matrix(p: Poly):
    """Companion matrix (mpmath) of the monic polynomial p."""
    if not p.is_monic():
        raise NotMonic("companion matrix needs a monic polynomial")
    k = p.degree
    C = matrix(k, k)
    for i in range(k):
        C[i, k - 1] = -to_mpf(p.coeffs[i])
        if i > 0:
            C[i, i - 1] = 1
    return C


def poly_roots(p: Poly):
    """All complex roots at working precision (exact zero roots are
    deflated first for conditioning near the origin), with a residual
    sanity check."""
    if p.degree < 1:
        raise ValueError("need degree >= 1")
    pm = p.monic()
    if pm.coeffs[0] == 0:
        # deflate exact zero roots first: better conditioning near 0
        k = next(i for i, c in enumerate(pm.coeffs) if c != 0)
        inner = Poly(pm.coeffs[k:])
        zeros = [mp.mpc(0)] * k
        return zeros + (poly_roots(inner) if inner.degree >= 1 else [])
    if pm.degree == 1:
        return [mp.mpc(-to_mpf(pm.coeffs[0]))]
    coeffs = [to_mpf(c) for c in reversed(pm.coeffs)]
    try:
        roots = mp.polyroots(coeffs, maxsteps=200, extraprec=mp.prec)
    except mp.NoConvergence as exc:
        raise NonConvergence("root finding did not converge") from exc
    roots = [mp.mpc(r) for r in roots]
    # residual sanity at the Cauchy-bound scale
    tol = mp.mpf(2) ** (-mp.prec // 2)
    scale = max(abs(to_mpf(c)) for c in pm.coeffs)
    for r in roots:
        if abs(_eval_mp(pm, r)) > tol * scale * (1 + abs(r)) ** pm.degree:
            raise NonConvergence("root residual above tolerance")
    return roots


def _eval_mp(p: Poly, x):
    acc = to_mpf(p.coeffs[-1])
    for c in reversed(p.coeffs[:-1]):
        acc = acc * x + to_mpf(c)
    return acc


def poly_eval(p: Poly, x):
    """Evaluate p at a (possibly complex) point."""
    if is_exact(x) and p.is_exact():
        return p(x)
    return _eval_mp(p, to_mpf(x))


def resultant_nonzero(a: Poly, b: Poly) -> bool:
    """True iff a and b share no common root (gcd is constant)."""
    return poly_gcd(a, b).degree == 0
