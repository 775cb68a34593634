"""Scalar plumbing: exact rationals, approximate floats, parsing, formatting.

Exact values are ``int`` / ``fractions.Fraction``; anything float-valued is
approximate.  A computation is exact iff all of its inputs are, and exact
arithmetic never rounds, so certificates built from rational data are
unconditional.
"""

from __future__ import annotations

from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Iterable, TypeAlias

import mpmath

from .errors import DomainError

Scalar: TypeAlias = int | Fraction | float

#: Default tolerance of scale-aware zero tests in approximate mode.
DEFAULT_TOL = 1e-10

#: Working precision (bits) for trigonometric constants before rounding.
_TRIG_PREC = 80


def is_exact(x: Scalar) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def all_exact(values: Iterable[Scalar]) -> bool:
    return all(is_exact(v) for v in values)


def as_fraction(x: Scalar) -> Fraction:
    """Exact conversion; floats convert via their binary expansion."""
    return x if isinstance(x, Fraction) else Fraction(x)


def parse_scalar(text: str, *, exact_only: bool = False) -> Scalar:
    """Parse ``"p/q"``, integer, or decimal literals.

    ``"p/q"`` and plain integers parse to Fraction; anything else parses to
    float unless ``exact_only``, in which case it is rejected.
    """
    s = text.strip()
    try:
        if "/" in s:
            num, den = s.split("/", 1)
            return Fraction(int(num), int(den))
        return Fraction(int(s))
    except (ValueError, ZeroDivisionError):
        pass
    if exact_only:
        raise DomainError(f"exact mode rejects non-rational literal {text!r}")
    try:
        return float(s)
    except ValueError:
        raise DomainError(f"cannot parse scalar literal {text!r}") from None


def format_scalar(x: Scalar) -> str:
    """Render exact values as ``"p"`` / ``"p/q"``, floats as shortest repr."""
    if is_exact(x):
        f = Fraction(x)
        if f.denominator == 1:
            return str(f.numerator)
        return f"{f.numerator}/{f.denominator}"
    return repr(float(x))


def decimal_string(x: Scalar, digits: int = 17) -> str:
    """Fixed-precision decimal rendering (JSON output of approximate data)."""
    if isinstance(x, float):
        return repr(x)
    f = Fraction(x)
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(f.numerator) / Decimal(f.denominator))


def cos_turn(j: int, q: int, offset: float = 0.0) -> float:
    """cos(offset + 2*pi*j/q), computed at 80-bit precision, one rounding."""
    with mpmath.workprec(_TRIG_PREC):
        return float(mpmath.cos(offset + 2 * mpmath.pi * mpmath.mpf(j) / q))


def sin_turn(j: int, q: int, offset: float = 0.0) -> float:
    """sin(offset + 2*pi*j/q), computed at 80-bit precision, one rounding."""
    with mpmath.workprec(_TRIG_PREC):
        return float(mpmath.sin(offset + 2 * mpmath.pi * mpmath.mpf(j) / q))
