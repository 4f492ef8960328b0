"""Hankel determinants, normal indices, and negative inertia.

The exact path works in rational arithmetic (fraction-free Bareiss for
determinants, symmetric congruence with 1x1/2x2 pivots for inertia).
The float path uses LU determinants and symmetric eigendecomposition at
the session precision, with a Hadamard-bound-scaled zero threshold that
is recorded in the verdicts it produced.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from mpmath import matrix, mp

from .errors import InsufficientMoments
from .poly import Poly
from .scalars import is_exact, to_mpf, zero_threshold


@dataclass(frozen=True)
class MomentSequence:
    """Immutable real moment sequence s_0, s_1, ..."""

    coeffs: tuple
    exact: bool = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if self.exact is None:
            object.__setattr__(
                self, "exact", all(is_exact(c) for c in self.coeffs))
        if len(self.coeffs) < 1:
            raise InsufficientMoments("need at least one moment")

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, j):
        return self.coeffs[j]

    def shifted(self) -> "MomentSequence":
        """Drop s_0: the sequence s_1, s_2, ... (index shift by one)."""
        if len(self.coeffs) < 2:
            raise InsufficientMoments("nothing left after the shift")
        return MomentSequence(self.coeffs[1:])


@dataclass(frozen=True)
class NormalIndexSet:
    """Ascending normal indices found below a horizon.

    ``threshold`` is None on the exact path, otherwise the float-path
    zero threshold that was applied to the determinants.
    """

    indices: tuple
    horizon: int
    threshold: Optional[object] = None

    def __contains__(self, n):
        return n in self.indices

    def __iter__(self):
        return iter(self.indices)

    def gaps(self):
        """Consecutive differences k_j = n_{j+1} - n_j, with n_0 = 0."""
        prev = 0
        out = []
        for n in self.indices:
            out.append(n - prev)
            prev = n
        return out


def hankel_matrix(s: MomentSequence, n: int, offset: int = 0):
    """The n x n Hankel matrix (s_{i+k+offset})_{i,k=0}^{n-1} as rows."""
    if 2 * n - 1 + offset > len(s):
        raise InsufficientMoments(
            f"need {2 * n - 1 + offset} moments for n={n}, have {len(s)}")
    return [[s[i + k + offset] for k in range(n)] for i in range(n)]


def _bareiss_det(rows):
    """Fraction-free Bareiss elimination; exact for rational entries."""
    a = [list(r) for r in rows]
    n = len(a)
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _float_det(rows):
    n = len(rows)
    M = matrix(n, n)
    for i in range(n):
        for j in range(n):
            M[i, j] = to_mpf(rows[i][j])
    return mp.det(M)


def hadamard_bound(rows):
    """Product of row 2-norms; scale for the zero threshold."""
    b = mp.mpf(1)
    for r in rows:
        b *= mp.sqrt(sum(abs(to_mpf(x)) ** 2 for x in r)) or mp.mpf(1)
    return b if b > 0 else mp.mpf(1)


def hankel_det(s: MomentSequence, n: int):
    """det (s_{i+k})_{i,k=0}^{n-1}; exact for exact input."""
    rows = hankel_matrix(s, n)
    if s.exact:
        return _bareiss_det(rows)
    return _float_det(rows)


def normal_indices(s: MomentSequence, horizon: int) -> NormalIndexSet:
    """All normal indices n <= horizon of the moment sequence."""
    if len(s) < 2 * horizon - 1:
        raise InsufficientMoments(
            f"need {2 * horizon - 1} moments for horizon {horizon}")
    threshold = None if s.exact else zero_threshold()
    indices = []
    for n in range(1, horizon + 1):
        rows = hankel_matrix(s, n)
        if s.exact:
            nonzero = _bareiss_det(rows) != 0
        else:
            nonzero = abs(_float_det(rows)) >= threshold * hadamard_bound(rows)
        if nonzero:
            indices.append(n)
    return NormalIndexSet(tuple(indices), horizon, threshold)


def negative_inertia(s: MomentSequence, n: int) -> int:
    """Number of negative eigenvalues of the n x n Hankel matrix."""
    rows = hankel_matrix(s, n)
    if s.exact:
        return _exact_inertia([[Fraction(x) for x in r] for r in rows])[1]
    M = matrix(n, n)
    for i in range(n):
        for j in range(n):
            M[i, j] = to_mpf(rows[i][j])
    eigvals = mp.eigsy(M, eigvals_only=True)
    cut = zero_threshold() * hadamard_bound(rows)
    return sum(1 for ev in eigvals if ev < -cut)


def _exact_inertia(a):
    """(positive, negative, zero) eigenvalue counts of a symmetric exact
    matrix via congruence with 1x1 and 2x2 pivots."""
    n = len(a)
    pos = neg = zero = 0
    idx = list(range(n))

    def swap(i, j):
        a[i], a[j] = a[j], a[i]
        for r in a:
            r[i], r[j] = r[j], r[i]

    k = 0
    while k < n:
        # best available 1x1 pivot on the diagonal
        piv = next((i for i in range(k, n) if a[i][i] != 0), None)
        if piv is not None:
            if piv != k:
                swap(k, piv)
            d = a[k][k]
            if d > 0:
                pos += 1
            else:
                neg += 1
            for i in range(k + 1, n):
                if a[i][k] == 0:
                    continue
                f = a[i][k] / d
                for j in range(k + 1, n):
                    a[i][j] -= f * a[k][j]
                a[i][k] = Fraction(0)
            for j in range(k + 1, n):
                a[k][j] = Fraction(0)
            k += 1
            continue
        # all remaining diagonal entries vanish: look for a 2x2 pivot
        off = None
        for i in range(k, n):
            for j in range(i + 1, n):
                if a[i][j] != 0:
                    off = (i, j)
                    break
            if off:
                break
        if off is None:
            zero += n - k
            break
        i, j = off
        if i != k:
            swap(k, i)
            j = k if j == k else j
        if j != k + 1:
            swap(k + 1, j)
        b = a[k][k + 1]
        # block [[0, b], [b, 0]] contributes one of each sign
        pos += 1
        neg += 1
        for i in range(k + 2, n):
            u, v = a[i][k], a[i][k + 1]
            if u == 0 and v == 0:
                continue
            # eliminate both columns using the antidiagonal block
            fu = v / b
            fv = u / b
            for j2 in range(k + 2, n):
                a[i][j2] -= fu * a[k][j2] + fv * a[k + 1][j2]
            a[i][k] = a[i][k + 1] = Fraction(0)
        for j2 in range(k + 2, n):
            a[k][j2] = a[k + 1][j2] = Fraction(0)
        k += 2
    return pos, neg, zero


def stabilized_inertia(s: MomentSequence, horizon: int):
    """Negative inertia as a function of n <= horizon.

    Returns (kappa, caveat, per_n) where kappa is the value at the
    horizon and caveat flags a last increment within 2 steps of it.
    Monotone nondecreasing growth is expected but only witnessed.
    """
    per_n = [negative_inertia(s, n) for n in range(1, horizon + 1)]
    kappa = per_n[-1]
    last_change = 0
    for i in range(1, len(per_n)):
        if per_n[i] != per_n[i - 1]:
            last_change = i + 1
    caveat = last_change >= horizon - 1 and horizon > 1
    return kappa, caveat, per_n


def monic_orthogonal_poly(s: MomentSequence, n: int) -> Poly:
    """Degree-n monic polynomial from the Hankel determinant formula:
    bordered Hankel matrix with last row (1, x, ..., x^n), divided by
    det S_{n-1}.  Requires det S_{n-1} != 0."""
    if n == 0:
        return Poly.one()
    d = hankel_det(s, n)
    if d == 0:
        raise InsufficientMoments(f"S_{n-1} singular: no degree-{n} monic OP")
    coeffs = []
    # cofactor expansion along the (1, x, ..., x^n) row
    rows = [[s[i + k] for k in range(n + 1)] for i in range(n)]
    for j in range(n + 1):
        minor = [[rows[i][k] for k in range(n + 1) if k != j] for i in range(n)]
        det = _bareiss_det(minor) if s.exact else _float_det(minor)
        coeffs.append((-1) ** (n + j) * det / d)
    return Poly(coeffs)
