"""Scalar kernel: exact rationals and adjustable-precision reals.

Exact values are ``fractions.Fraction`` (or ``int``); inexact values are
mpmath ``mpf``/``mpc`` evaluated at a single session-wide precision
(default 256 bits).  Mixing exact and inexact operands promotes to the
inexact type, which is how the exactness flag is cleared throughout the
library: a pipeline stays exact iff every input was a Fraction.
"""

from __future__ import annotations

import math
from contextlib import contextmanager
from fractions import Fraction

from mpmath import mp, mpc, mpf, mpmathify

DEFAULT_PRECISION_BITS = 256

mp.prec = DEFAULT_PRECISION_BITS


def set_precision(bits: int) -> None:
    """Set the session-wide working precision in bits."""
    if bits < 8:
        raise ValueError("precision must be at least 8 bits")
    mp.prec = bits


def get_precision() -> int:
    return mp.prec


@contextmanager
def precision(bits: int):
    """Temporarily switch the working precision."""
    old = mp.prec
    set_precision(bits)
    try:
        yield
    finally:
        mp.prec = old


def is_exact(x) -> bool:
    return isinstance(x, (int, Fraction))


def all_exact(*xs) -> bool:
    return all(is_exact(x) for x in xs)


def to_mpf(x):
    """Convert a scalar to mpf/mpc at the session precision."""
    if isinstance(x, (mpf, mpc)):
        return x
    if isinstance(x, Fraction):
        return mpmathify(x)
    if isinstance(x, complex):
        return mpc(x)
    return mpmathify(x)


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"not an exact scalar: {x!r}")


def sign(x) -> int:
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def scalar_sqrt(x):
    """Square root keeping exactness when x is a perfect rational square."""
    if is_exact(x):
        f = to_fraction(x)
        if f < 0:
            raise ValueError("negative argument")
        rn = math.isqrt(f.numerator)
        rd = math.isqrt(f.denominator)
        if rn * rn == f.numerator and rd * rd == f.denominator:
            return Fraction(rn, rd)
        return mp.sqrt(mpmathify(f))
    return mp.sqrt(x)


def zero_threshold():
    """Session zero-declaration threshold on the float path: 2^(-prec/2)."""
    return mpf(2) ** (-mp.prec // 2)


def is_zero(x, threshold=None) -> bool:
    """Zero test: exact on the rational path, thresholded otherwise."""
    if is_exact(x):
        return x == 0
    if threshold is None:
        threshold = zero_threshold()
    return abs(x) < threshold


def as_decimal_string(x) -> str:
    """Full-precision decimal string; exact rationals rendered as 'p/q'."""
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"
    digits = int(mp.prec / 3.32) + 3
    return mp.nstr(to_mpf(x), digits)


def parse_scalar(text: str):
    """Parse 'p/q' as an exact rational, anything else as a decimal string."""
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        return Fraction(int(num), int(den))
    try:
        return Fraction(text)
    except ValueError:
        return mpmathify(text)
