"""Outward-rounded interval arithmetic over IEEE-754 doubles.

Every operation on :class:`Interval` values returns an interval that is
guaranteed to contain the exact mathematical result for any choice of
points in the operand intervals (containment soundness).  Since Python
gives no portable control over the FPU rounding mode, directed rounding
is emulated: each endpoint computed in round-to-nearest is stepped one
representable float outward with ``math.nextafter``.  That trades at most
a couple of ulps of width for unconditional soundness.

The enclosure of pi is derived at import time from Machin's arctangent
formula evaluated in exact rational arithmetic, so no decimal constant
has to be trusted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "Interval",
    "IntervalDomainError",
    "ZERO",
    "ONE",
    "PI",
    "TWO_PI",
    "FOUR_PI_SQUARED",
    "PI_FRACTION_BOUNDS",
    "basic",
    "sqrt",
    "cbrt",
    "pow_3_2",
    "pi_enclosure",
]

_INF = math.inf


class IntervalDomainError(ValueError):
    """An operand lies outside the mathematical domain of an operation."""


def _down(x: float) -> float:
    return math.nextafter(x, -_INF)


def _up(x: float) -> float:
    return math.nextafter(x, _INF)


@dataclass(frozen=True, slots=True)
class Interval:
    """Closed interval ``[lo, hi]``: the carrier of every certified real here."""

    lo: float
    hi: float

    def __post_init__(self) -> None:
        # The comparison also rejects NaN endpoints.
        if not self.lo <= self.hi:
            raise ValueError(f"invalid interval endpoints [{self.lo}, {self.hi}]")

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @staticmethod
    def point(x: float) -> "Interval":
        """Degenerate interval holding the exact value of the float ``x``."""
        x = float(x)
        return Interval(x, x)

    @staticmethod
    def from_int(n: int) -> "Interval":
        """Exact enclosure of an arbitrary Python integer."""
        if -(2**53) <= n <= 2**53:
            f = float(n)
            return Interval(f, f)
        return Interval.from_fraction(Fraction(n))

    @staticmethod
    def from_fraction(value: Fraction) -> "Interval":
        """Tightest certified float enclosure of an exact rational."""
        c = float(value)  # correctly rounded to nearest
        cf = Fraction(c)
        lo = c if cf <= value else _down(c)
        hi = c if cf >= value else _up(c)
        return Interval(lo, hi)

    @staticmethod
    def from_fraction_bounds(lo: Fraction, hi: Fraction) -> "Interval":
        """Enclosure of ``[lo, hi]`` given as exact rationals."""
        if lo > hi:
            raise ValueError("fraction bounds out of order")
        return Interval(Interval.from_fraction(lo).lo, Interval.from_fraction(hi).hi)

    # ------------------------------------------------------------------
    # Queries
    # ------------------------------------------------------------------

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def mid(self) -> float:
        return 0.5 * (self.lo + self.hi)

    def contains(self, x: float | Fraction) -> bool:
        if isinstance(x, Fraction):
            return Fraction(self.lo) <= x <= Fraction(self.hi)
        return self.lo <= x <= self.hi

    def contains_zero(self) -> bool:
        return self.lo <= 0.0 <= self.hi

    def contains_interval(self, other: "Interval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def overlaps(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def strictly_positive(self) -> bool:
        return self.lo > 0.0

    def strictly_negative(self) -> bool:
        return self.hi < 0.0

    def strictly_less(self, other: "Interval") -> bool:
        """Certified ``self < other`` (strict interval separation)."""
        return self.hi < other.lo

    def strictly_greater(self, other: "Interval") -> bool:
        return self.lo > other.hi

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    @staticmethod
    def _coerce(other: "Interval | int | float") -> "Interval":
        if isinstance(other, Interval):
            return other
        if isinstance(other, int):
            return Interval.from_int(other)
        if isinstance(other, float):
            return Interval.point(other)
        return NotImplemented  # type: ignore[return-value]

    def __neg__(self) -> "Interval":
        # Negation is exact in binary floating point.
        return Interval(-self.hi, -self.lo)

    def __add__(self, other: "Interval | int | float") -> "Interval":
        b = Interval._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return Interval(_down(self.lo + b.lo), _up(self.hi + b.hi))

    __radd__ = __add__

    def __sub__(self, other: "Interval | int | float") -> "Interval":
        b = Interval._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return Interval(_down(self.lo - b.hi), _up(self.hi - b.lo))

    def __rsub__(self, other: "Interval | int | float") -> "Interval":
        b = Interval._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return b - self

    def __mul__(self, other: "Interval | int | float") -> "Interval":
        b = Interval._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        if (self.lo == self.hi == 0.0) or (b.lo == b.hi == 0.0):
            return Interval(0.0, 0.0)
        products = (self.lo * b.lo, self.lo * b.hi, self.hi * b.lo, self.hi * b.hi)
        return Interval(_down(min(products)), _up(max(products)))

    __rmul__ = __mul__

    def __truediv__(self, other: "Interval | int | float") -> "Interval":
        b = Interval._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        if b.contains_zero():
            raise IntervalDomainError(f"division by interval containing zero: {b}")
        quotients = (self.lo / b.lo, self.lo / b.hi, self.hi / b.lo, self.hi / b.hi)
        return Interval(_down(min(quotients)), _up(max(quotients)))

    def __rtruediv__(self, other: "Interval | int | float") -> "Interval":
        b = Interval._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return b / self

    def __repr__(self) -> str:
        return f"Interval({self.lo!r}, {self.hi!r})"


ZERO = Interval(0.0, 0.0)
ONE = Interval(1.0, 1.0)


def basic(a: Interval, b: Interval, op: str) -> Interval:
    """Named dispatch over the four basic operations."""
    try:
        fn = _BASIC_OPS[op]
    except KeyError:
        raise ValueError(f"unknown interval operation {op!r}") from None
    return fn(a, b)


_BASIC_OPS = {
    "add": Interval.__add__,
    "sub": Interval.__sub__,
    "mul": Interval.__mul__,
    "div": Interval.__truediv__,
}


def sqrt(a: Interval) -> Interval:
    """Enclosure of ``{sqrt(x) : x in a}``; requires ``a.lo >= 0``.

    IEEE-754 guarantees a correctly rounded ``math.sqrt``, so one outward
    step per endpoint suffices.
    """
    if a.lo < 0.0:
        raise IntervalDomainError(f"sqrt of interval with negative endpoint: {a}")
    lo = 0.0 if a.lo == 0.0 else max(0.0, _down(math.sqrt(a.lo)))
    hi = 0.0 if a.hi == 0.0 else _up(math.sqrt(a.hi))
    return Interval(lo, hi)


def _cube_cmp(c: float, x: float) -> int:
    """Exact sign of c^3 - x via rational arithmetic."""
    d = Fraction(c) ** 3 - Fraction(x)
    return (d > 0) - (d < 0)


def cbrt(a: Interval) -> Interval:
    """Enclosure of the cube root for ``a.lo >= 0``.

    ``pow(x, 1/3)`` is only approximately the cube root; each endpoint is
    nudged until its cube certifiably brackets the input (checked in exact
    rational arithmetic), so no accuracy assumption on ``pow`` is needed.
    """
    if a.lo < 0.0:
        raise IntervalDomainError(f"cbrt of interval with negative endpoint: {a}")

    def lower(x: float) -> float:
        if x == 0.0:
            return 0.0
        c = x ** (1.0 / 3.0)
        while _cube_cmp(c, x) > 0:
            c = _down(c)
        while _cube_cmp(_up(c), x) <= 0:
            c = _up(c)
        return c

    def upper(x: float) -> float:
        if x == 0.0:
            return 0.0
        c = x ** (1.0 / 3.0)
        while _cube_cmp(c, x) < 0:
            c = _up(c)
        while _cube_cmp(_down(c), x) >= 0:
            c = _down(c)
        return c

    return Interval(lower(a.lo), upper(a.hi))


def pow_3_2(a: Interval) -> Interval:
    """Enclosure of ``x^(3/2)`` for ``a.lo >= 0``.

    The map is monotone, so endpoints go to endpoints; each endpoint value
    is computed as ``x * sqrt(x)`` through certified interval steps.
    """
    if a.lo < 0.0:
        raise IntervalDomainError(f"pow_3_2 of interval with negative endpoint: {a}")

    def endpoint(x: float) -> Interval:
        p = Interval.point(x)
        return p * sqrt(p)

    return Interval(max(0.0, endpoint(a.lo).lo), endpoint(a.hi).hi)


# ----------------------------------------------------------------------
# The pi enclosure, from Machin's formula in exact rational arithmetic
# ----------------------------------------------------------------------


def _atan_fraction_bounds(x: Fraction, terms: int) -> tuple[Fraction, Fraction]:
    """Bracket atan(x), 0 < x < 1, by consecutive alternating partial sums."""
    s = Fraction(0)
    xx = x * x
    p = x
    last_two: list[Fraction] = []
    for j in range(terms):
        t = p / (2 * j + 1)
        s = s + t if j % 2 == 0 else s - t
        p *= xx
        last_two = (last_two + [s])[-2:]
    return min(last_two), max(last_two)


def _pi_fraction_bounds() -> tuple[Fraction, Fraction]:
    # pi = 16 atan(1/5) - 4 atan(1/239); term counts give ~1e-35 width.
    a5_lo, a5_hi = _atan_fraction_bounds(Fraction(1, 5), 30)
    a239_lo, a239_hi = _atan_fraction_bounds(Fraction(1, 239), 12)
    return 16 * a5_lo - 4 * a239_hi, 16 * a5_hi - 4 * a239_lo


PI_FRACTION_BOUNDS: tuple[Fraction, Fraction] = _pi_fraction_bounds()

PI = Interval.from_fraction_bounds(*PI_FRACTION_BOUNDS)

# Doubling is exact in binary floating point, so these stay certified.
TWO_PI = Interval(2.0 * PI.lo, 2.0 * PI.hi)

FOUR_PI_SQUARED = TWO_PI * TWO_PI


def pi_enclosure() -> Interval:
    """Fixed certified enclosure of pi (width two ulps)."""
    return PI
