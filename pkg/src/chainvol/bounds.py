"""Certified volume lower bounds for chain link complements.

The unfilled solid-torus chain manifolds decompose into n ideal regular
octahedra, so their volume is exactly n * v8; Dehn filling a slope of
length ell > 2 pi then bounds the filled volume below by

    vol >= n * v8 * (1 - (2 pi / ell)^2)^(3/2).

Whether that beats the comparison volume (n-1) * v8 of the cyclic
Whitehead-link cover is governed by the sign of

    f(n, m) = n/(n-1) * (1 - 4 pi^2 / ell(n, m)^2)^(3/2) - 1,

whose zeros in the twist coefficient m form, per parity case, a window
centered at a quarter-integer shift with radius

    R(n) = 1/2 * sqrt(pi^2 / (1 - ((n-1)/n)^(2/3)) - n^2/4).

Everything below is evaluated in outward-rounded interval arithmetic;
verdict-level comparisons elsewhere use strict interval separation.

The minimally twisted even chains additionally have an exact volume
formula, vol = 8k (Lambda(pi/4 + pi/2k) + Lambda(pi/4 - pi/2k)) for 2k
components, which is implemented here as well.

Positivity of f on [60, infinity) is certified pointwise only on the
finite ranges the callers sweep; the tail rests on the monotonicity of f
past its single critical point near 117.76.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .cusp import (
    BaseFamily,
    SlopeSpec,
    UnsupportedChainError,
    slope_for_half_twists,
    slope_length,
    slope_length_squared,
)
from .interval import (
    FOUR_PI_SQUARED,
    Interval,
    IntervalDomainError,
    ONE,
    PI,
    TWO_PI,
    cbrt,
    pow_3_2,
    sqrt,
)
from .lobachevsky import DEFAULT_TOLERANCE, lobachevsky_interval, octahedron_volume

__all__ = [
    "FillingBound",
    "NoZeroWindow",
    "InconclusiveEnclosure",
    "WindowCase",
    "ZeroWindow",
    "bisect_f_root",
    "chain_volume_lower_bound",
    "comparison_f",
    "comparison_f_nm",
    "f_critical_point",
    "filling_factor",
    "fkp_lower_bound",
    "masai_difference",
    "r_of_n",
    "scan_r_maximum",
    "thurston_even_volume",
    "whitehead_cover_volume",
    "zero_window",
    "zero_windows",
]


class NoZeroWindow(ValueError):
    """R(n) has a negative radicand: f(n, .) is positive for every real m."""


class InconclusiveEnclosure(RuntimeError):
    """An enclosure is too wide to certify the sign decision requested."""


@dataclass(frozen=True)
class FillingBound:
    """Certified lower bound for one Dehn filling.

    ``applicable`` records whether the slope length certifiably exceeds
    2 pi; when it does not, ``lower_bound`` is the vacuous [0, vol(M)].
    """

    slope: SlopeSpec | None
    slope_length: Interval
    unfilled_volume: Interval
    lower_bound: Interval
    applicable: bool


def filling_factor(slope_length_iv: Interval) -> Interval:
    """The volume contraction factor (1 - (2 pi / ell)^2)^(3/2), ell > 2 pi."""
    if not slope_length_iv.lo > TWO_PI.hi:
        raise IntervalDomainError(
            f"filling factor needs certified ell > 2 pi, got {slope_length_iv}"
        )
    ratio = TWO_PI / slope_length_iv
    return pow_3_2(ONE - ratio * ratio)


def fkp_lower_bound(
    unfilled_volume: Interval,
    slope_length_iv: Interval,
    slope: SlopeSpec | None = None,
) -> FillingBound:
    """Dehn-filling volume bound; inapplicability is a value, not an error."""
    if not unfilled_volume.lo > 0.0:
        raise IntervalDomainError("unfilled volume must be certified positive")
    applicable = slope_length_iv.lo > TWO_PI.hi
    if applicable:
        lower = unfilled_volume * filling_factor(slope_length_iv)
    else:
        lower = Interval(0.0, unfilled_volume.hi)
    return FillingBound(
        slope=slope,
        slope_length=slope_length_iv,
        unfilled_volume=unfilled_volume,
        lower_bound=lower,
        applicable=applicable,
    )


def whitehead_cover_volume(n: int, tol: float = DEFAULT_TOLERANCE) -> Interval:
    """Volume (n-1) v8 of the (n-1)-fold cyclic cover of the Whitehead link."""
    if not isinstance(n, int) or n < 2:
        raise UnsupportedChainError(f"cover volume defined for integers n >= 2, got {n}")
    return Interval.from_int(n - 1) * octahedron_volume(tol)


def chain_volume_lower_bound(n: int, r: int, tol: float = DEFAULT_TOLERANCE) -> FillingBound:
    """Certified lower bound for the n-chain link with r signed half-twists."""
    s = slope_for_half_twists(n, r)
    unfilled = Interval.from_int(n) * octahedron_volume(tol)
    return fkp_lower_bound(unfilled, slope_length(s), slope=s)


def _real_enclosure(n: int | float) -> Interval:
    if isinstance(n, int):
        return Interval.from_int(n)
    return Interval.point(float(n))


def comparison_f(n: int | float) -> Interval:
    """Enclosure of f(n) = n/(n-1) (1 - 4 pi^2/n^2)^(3/2) - 1 for real n > 2 pi."""
    n_iv = _real_enclosure(n)
    if not n_iv.lo > TWO_PI.hi:
        raise IntervalDomainError(f"comparison function needs n > 2 pi, got {n}")
    ratio = n_iv / (n_iv - ONE)
    base = ONE - FOUR_PI_SQUARED / (n_iv * n_iv)
    return ratio * pow_3_2(base) - ONE


def comparison_f_nm(n: int, m: int, family: BaseFamily) -> Interval:
    """Enclosure of f(n, m) on the given family, using the exact integer ell^2."""
    ell2 = Interval.from_int(slope_length_squared(SlopeSpec(n=n, m=m, family=family)))
    if not ell2.lo > FOUR_PI_SQUARED.hi:
        raise IntervalDomainError(
            f"slope length squared {ell2.lo} not certified above 4 pi^2; bound vacuous"
        )
    ratio = Interval.from_int(n) / Interval.from_int(n - 1)
    base = ONE - FOUR_PI_SQUARED / ell2
    return ratio * pow_3_2(base) - ONE


def f_critical_point() -> Interval:
    """Enclosure of the single interior maximum 6 pi^2 + 2 pi sqrt(9 pi^2 - 2)."""
    pi_sq = PI * PI
    return pi_sq * 6 + TWO_PI * sqrt(pi_sq * 9 - Interval.from_int(2))


def r_of_n(n: int | float) -> Interval:
    """Enclosure of the zero-window radius R(n), real n >= 1.

    Raises :class:`NoZeroWindow` when the radicand is certifiably negative
    (no real zeros in m: the chain is excluded for every twist), and
    :class:`InconclusiveEnclosure` when the radicand's sign cannot be
    certified.
    """
    n_iv = _real_enclosure(n)
    if not n_iv.lo >= 1.0:
        raise IntervalDomainError(f"R(n) needs n >= 1, got {n}")
    x = (n_iv - ONE) / n_iv
    # (n-1)/n >= 0 for n >= 1; outward rounding may leak a negligible
    # negative lower endpoint, which is safe to clamp.
    if x.lo < 0.0:
        x = Interval(0.0, max(0.0, x.hi))
    root = cbrt(x)
    denom = ONE - root * root
    if not denom.lo > 0.0:
        raise InconclusiveEnclosure(f"1 - ((n-1)/n)^(2/3) not certified positive at n={n}")
    radicand = PI * PI / denom - (n_iv * n_iv) / Interval.from_int(4)
    if radicand.hi < 0.0:
        raise NoZeroWindow(f"f(n, .) has no real zero in m at n={n}")
    if radicand.lo < 0.0:
        raise InconclusiveEnclosure(f"radicand sign not certified at n={n}")
    return sqrt(radicand) / Interval.from_int(2)


class WindowCase(Enum):
    """Parity case of (n, r); fixes the window's center shift and family."""

    EVEN_N_EVEN_R = "EvenN_EvenR"
    EVEN_N_ODD_R = "EvenN_OddR"
    ODD_N_EVEN_R = "OddN_EvenR"
    ODD_N_ODD_R = "OddN_OddR"

    @property
    def center_shift(self) -> float:
        return _CASE_SHIFT[self]

    @property
    def family(self) -> BaseFamily:
        return (
            BaseFamily.MIN_TWIST
            if self in (WindowCase.EVEN_N_EVEN_R, WindowCase.ODD_N_EVEN_R)
            else BaseFamily.HALF_TWIST
        )

    @property
    def n_parity(self) -> int:
        return 0 if self in (WindowCase.EVEN_N_EVEN_R, WindowCase.EVEN_N_ODD_R) else 1


# The shifts are exact quarter-integers, hence exact floats.
_CASE_SHIFT = {
    WindowCase.EVEN_N_EVEN_R: 0.0,
    WindowCase.EVEN_N_ODD_R: -0.5,
    WindowCase.ODD_N_EVEN_R: -0.25,
    WindowCase.ODD_N_ODD_R: 0.25,
}


@dataclass(frozen=True)
class ZeroWindow:
    """Real m with f(n, m) <= 0 lie inside [shift - R, shift + R]."""

    case: WindowCase
    center_shift: float
    radius: Interval

    @property
    def outer_lo(self) -> float:
        return (Interval.point(self.center_shift) - self.radius).lo

    @property
    def outer_hi(self) -> float:
        return (Interval.point(self.center_shift) + self.radius).hi

    def certainly_inside(self, m: int) -> bool:
        """Certified |m - shift| < R (so f(n, m) < 0)."""
        return abs(m - self.center_shift) < self.radius.lo

    def certainly_outside(self, m: int) -> bool:
        """Certified |m - shift| > R (so f(n, m) > 0)."""
        return abs(m - self.center_shift) > self.radius.hi


def zero_window(n: int, case: WindowCase) -> ZeroWindow:
    """Zero window of f(n, .) for the given parity case."""
    if n % 2 != case.n_parity:
        raise ValueError(f"case {case.value} does not apply to n={n}")
    return ZeroWindow(case=case, center_shift=case.center_shift, radius=r_of_n(n))


def zero_windows(n: int) -> list[ZeroWindow]:
    """The two windows matching n's parity, even-r case first."""
    if n % 2 == 0:
        cases = (WindowCase.EVEN_N_EVEN_R, WindowCase.EVEN_N_ODD_R)
    else:
        cases = (WindowCase.ODD_N_EVEN_R, WindowCase.ODD_N_ODD_R)
    return [zero_window(n, c) for c in cases]


def thurston_even_volume(n2: int, tol: float = DEFAULT_TOLERANCE) -> Interval:
    """Exact volume of the minimally twisted even chain with n2 components.

    vol = 8k (Lambda(pi/4 + pi/n2) + Lambda(pi/4 - pi/n2)) with k = n2/2.
    """
    if not isinstance(n2, int) or n2 % 2 != 0 or n2 < 6:
        raise UnsupportedChainError(f"exact volume formula needs even n >= 6, got {n2}")
    k = n2 // 2
    quarter_pi = PI / Interval.from_int(4)
    step = PI / Interval.from_int(n2)
    plus, _ = lobachevsky_interval(quarter_pi + step, tol)
    minus, _ = lobachevsky_interval(quarter_pi - step, tol)
    return (plus + minus) * Interval.from_int(8 * k)


def masai_difference(n: int, tol: float = DEFAULT_TOLERANCE) -> Interval:
    """vol of the minimally twisted 2n-chain minus (2n-1) v8, for n >= 6."""
    if not isinstance(n, int) or n < 6:
        raise UnsupportedChainError(f"difference defined for integers n >= 6, got {n}")
    return thurston_even_volume(2 * n, tol) - Interval.from_int(2 * n - 1) * octahedron_volume(tol)


def bisect_f_root(lo: float = 59.0, hi: float = 60.0, target_width: float = 1e-3) -> Interval:
    """Certified bisection bracket for the root of f between lo and hi.

    Both endpoint signs must certify (f(lo) < 0 < f(hi)); each bisection
    step keeps the invariant, so the result is a genuine sign-change
    bracket of the requested width.
    """
    if not comparison_f(lo).strictly_negative():
        raise InconclusiveEnclosure(f"f({lo}) not certified negative")
    if not comparison_f(hi).strictly_positive():
        raise InconclusiveEnclosure(f"f({hi}) not certified positive")
    while hi - lo > target_width:
        mid = 0.5 * (lo + hi)
        fm = comparison_f(mid)
        if fm.strictly_negative():
            lo = mid
        elif fm.strictly_positive():
            hi = mid
        else:
            break  # sign at mid not certifiable; keep the certified bracket
    return Interval(lo, hi)


def scan_r_maximum(
    lo: float = 29.0, hi: float = 30.5, step: float = 1e-3
) -> tuple[float, Interval]:
    """Grid scan for the maximum of R; returns (grid argmax, R enclosure there)."""
    if not (lo < hi and step > 0.0):
        raise ValueError("need lo < hi and positive step")
    count = int(round((hi - lo) / step))
    best_n = lo
    best = r_of_n(lo)
    for i in range(1, count + 1):
        x = lo + i * step
        r = r_of_n(x)
        if r.mid > best.mid:
            best_n, best = x, r
    return best_n, best
