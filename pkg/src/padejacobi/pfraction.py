"""Schur/Magnus expansion of a formal series into a P-fraction and the
generalized Jacobi matrix built from it.

Each step extracts a sign eps_j, a coupling b_j > 0 and a monic real
polynomial p_j from -1/F_j = eps_j p_j + b_j^2 F_{j+1}, where every
F_j is normalized (first nonzero coefficient of modulus one).  Only
b_j^2 is a primitive quantity here: it is rational whenever the input
series is, which is what keeps the whole recurrence pipeline exact;
b_j itself is derived on demand.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional

from .errors import ExhaustedOrder, NotMonic, NotNormalized, OrderBudgetExceeded
from .poly import Poly
from .scalars import (as_decimal_string, is_exact, is_zero, scalar_sqrt, sign,
                      to_mpf)
from .series import FormalSeries, series_recip


@dataclass(frozen=True)
class PFractionStep:
    eps: int                      # +1 or -1
    b_sq: object                  # b_j^2 > 0; exact on the rational path
    p: Poly                       # monic, degree k_j >= 1

    def __post_init__(self):
        if self.eps not in (1, -1):
            raise ValueError("eps must be +-1")
        if not self.p.is_monic():
            raise NotMonic("partial denominator must be monic")
        if not to_mpf(self.b_sq) > 0:
            raise ValueError("b^2 must be positive")

    @property
    def b(self):
        return scalar_sqrt(self.b_sq)

    @property
    def k(self) -> int:
        return self.p.degree


@dataclass
class PFraction:
    """A (possibly finite) P-fraction expansion.

    ``prescale`` is the factor taken out of the input series before the
    first step so that the expanded series is normalized; convergents
    are multiplied back by it.  For a finite expansion the last stored
    step reproduces the series exactly.
    """

    steps: List[PFractionStep] = field(default_factory=list)
    prescale: object = Fraction(1)
    finite: bool = False
    source_order: int = 0

    def __len__(self):
        return len(self.steps)

    @property
    def normal_indices(self):
        """Partial sums n_j = k_0 + ... + k_{j-1}, j = 1..depth."""
        out, acc = [], 0
        for st in self.steps:
            acc += st.k
            out.append(acc)
        return out

    def is_exact(self) -> bool:
        return is_exact(self.prescale) and all(
            is_exact(st.b_sq) and st.p.is_exact() for st in self.steps)

    def is_classical(self) -> bool:
        """All blocks scalar and all signs positive (J-fraction case)."""
        return all(st.eps == 1 and st.k == 1 for st in self.steps)


def schur_step(F: FormalSeries):
    """One Schur transform: -1/F = eps*p + b^2*F_next.

    Requires constant_term = 0 and a normalized series (first nonzero
    coefficient of modulus 1).  The returned next series is normalized
    the same way; its truncation order drops by 2*deg(p).
    """
    if not is_zero(F.constant_term):
        raise NotNormalized("Schur step requires a vanishing constant term")
    nu = F.first_nonzero_index()
    if nu is None:
        raise ExhaustedOrder("series vanishes to its truncation order")
    lead = F.coeffs[nu]
    if is_exact(lead):
        if abs(lead) != 1:
            raise NotNormalized("series must be normalized (|s_nu| = 1)")
    elif is_zero(abs(lead) - 1):
        pass
    else:
        raise NotNormalized("series must be normalized (|s_nu| = 1)")
    poly_part, tail = series_recip(F)
    lc = poly_part.leading()
    eps = sign(to_mpf(lc).real if not is_exact(lc) else lc)
    p = poly_part.scale(eps)
    if is_exact(lc):
        if abs(lc) != 1:
            raise NotNormalized("polynomial part is not unimodular")
    else:
        p = p.monic()
    mu = tail.first_nonzero_index()
    if mu is None:
        if tail.truncation_order == 0:
            raise ExhaustedOrder("no provable remainder coefficients left")
        # exactly terminating expansion: remainder is zero
        return PFractionStep(eps, Fraction(1), p), tail
    b_sq = abs(tail.coeffs[mu])
    nxt = tail.scale(1 / b_sq)
    return PFractionStep(eps, b_sq, p), nxt


def expand_pfraction(F: FormalSeries, depth: int,
                     strict: bool = False) -> PFraction:
    """Expand F into a P-fraction of at most ``depth`` steps.

    Stops early when the expansion terminates (rational F) or when the
    remaining truncation window cannot prove another step; in the
    latter case ``strict=True`` raises OrderBudgetExceeded carrying the
    deepest safe prefix.
    """
    if not is_zero(F.constant_term):
        raise NotNormalized("expansion requires a vanishing constant term")
    nu = F.first_nonzero_index()
    if nu is None:
        raise ExhaustedOrder("cannot expand the zero series")
    prescale = abs(F.coeffs[nu])
    current = F if prescale == 1 else F.scale(1 / prescale)
    pf = PFraction(prescale=prescale, source_order=F.truncation_order)
    for _ in range(depth):
        idx = current.first_nonzero_index()
        if idx is None:
            if current.truncation_order > 0:
                pf.finite = True
                return pf
            break
        try:
            step, current = schur_step(current)
        except ExhaustedOrder:
            break
        pf.steps.append(step)
    else:
        return pf
    if strict and not pf.finite and len(pf.steps) < depth:
        raise OrderBudgetExceeded(
            f"series order supports only depth {len(pf.steps)}", partial=pf)
    return pf


# -- companion pairs and the block matrix -------------------------------------

@dataclass(frozen=True)
class CompanionPair:
    """Companion matrix C_p and symmetrizator E_p of a monic polynomial,
    linked by C*E = E*C^T; rows are plain scalar lists."""

    C: tuple
    E: tuple


def companion(p: Poly) -> CompanionPair:
    if not p.is_monic():
        raise NotMonic("companion pair needs a monic polynomial")
    k = p.degree
    C = [[Fraction(0)] * k for _ in range(k)]
    for i in range(k):
        C[i][k - 1] = -p.coeffs[i]
        if i > 0:
            C[i][i - 1] = Fraction(1)
    # E[i][j] = p_{i+j+1} (with p_k = 1), zero past the antidiagonal
    E = [[Fraction(0)] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            idx = i + j + 1
            if idx <= k:
                E[i][j] = p.coeffs[idx] if idx < k else p.coeffs[k]
    return CompanionPair(tuple(map(tuple, C)), tuple(map(tuple, E)))


def _mat_inv(rows):
    """Exact inverse by Gauss-Jordan; entries support exact division."""
    n = len(rows)
    a = [list(r) + [Fraction(1) if i == j else Fraction(0) for j in range(n)]
         for i, r in enumerate(rows)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        d = a[col][col]
        a[col] = [x / d for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


@dataclass
class GJM:
    """Block-tridiagonal generalized Jacobi matrix of a P-fraction.

    Diagonal blocks are companion matrices of the p_j; B_j carries the
    single entry b_j at position (0, k_j - 1) and Btilde_j carries
    eps_j*eps_{j+1}*b_j at (0, k_{j+1} - 1).
    """

    pf: PFraction

    @property
    def block_sizes(self):
        return [st.k for st in self.pf.steps]

    def diag_block(self, j: int):
        return [list(r) for r in companion(self.pf.steps[j].p).C]

    def lower_block(self, j: int):
        """B_j of shape k_{j+1} x k_j."""
        kj, kj1 = self.pf.steps[j].k, self.pf.steps[j + 1].k
        B = [[Fraction(0)] * kj for _ in range(kj1)]
        B[0][kj - 1] = self.pf.steps[j].b
        return B

    def upper_block(self, j: int):
        """Btilde_j of shape k_j x k_{j+1}."""
        kj, kj1 = self.pf.steps[j].k, self.pf.steps[j + 1].k
        bt = self.pf.steps[j].eps * self.pf.steps[j + 1].eps \
            * self.pf.steps[j].b
        B = [[Fraction(0)] * kj1 for _ in range(kj)]
        B[0][kj1 - 1] = bt
        return B

    def dense(self, first: int = 0, last: Optional[int] = None):
        """Rows of the truncated matrix J_{[first, last]}."""
        if last is None:
            last = len(self.pf.steps) - 1
        sizes = [self.pf.steps[j].k for j in range(first, last + 1)]
        n = sum(sizes)
        M = [[Fraction(0)] * n for _ in range(n)]
        offs = [0]
        for s in sizes:
            offs.append(offs[-1] + s)
        for bi, j in enumerate(range(first, last + 1)):
            blk = self.diag_block(j)
            for r in range(sizes[bi]):
                for c in range(sizes[bi]):
                    M[offs[bi] + r][offs[bi] + c] = blk[r][c]
            if j < last:
                low = self.lower_block(j)
                up = self.upper_block(j)
                for r in range(sizes[bi + 1]):
                    for c in range(sizes[bi]):
                        M[offs[bi + 1] + r][offs[bi] + c] = low[r][c]
                for r in range(sizes[bi]):
                    for c in range(sizes[bi + 1]):
                        M[offs[bi] + r][offs[bi + 1] + c] = up[r][c]
        return M

    def is_classical(self) -> bool:
        return self.pf.is_classical()

    def classical_coefficients(self):
        """(diagonal a_j, offdiagonal b_j) in the scalar tridiagonal case."""
        if not self.is_classical():
            raise NotMonic("not a scalar Jacobi matrix")
        a = [-st.p.coeffs[0] for st in self.pf.steps]
        b = [st.b for st in self.pf.steps[:-1]]
        return a, b

    def to_json(self) -> str:
        doc = {
            "prescale": as_decimal_string(self.pf.prescale),
            "finite": self.pf.finite,
            "blocks": [
                {
                    "k": st.k,
                    "eps": st.eps,
                    "b_sq": as_decimal_string(st.b_sq),
                    "b": as_decimal_string(st.b),
                    "p": [as_decimal_string(c) for c in st.p.coeffs],
                    "A": [[as_decimal_string(x) for x in row]
                          for row in self.diag_block(j)],
                }
                for j, st in enumerate(self.pf.steps)
            ],
        }
        return json.dumps(doc, indent=2)


def build_gjm(pf: PFraction) -> GJM:
    return GJM(pf)


def gram(pf: PFraction):
    """Block-diagonal Gram matrix G_j = eps_j * E_{p_j}^{-1}."""
    blocks = []
    for st in pf.steps:
        E = [list(r) for r in companion(st.p).E]
        inv = _mat_inv(E)
        blocks.append([[st.eps * x for x in row] for row in inv])
    return blocks
