"""Independent oracles shared across the test suite.

Everything here deliberately avoids the library's own evaluation paths:
high-precision values come from mpmath, series oracles are plain float
Fourier partial sums, and containment checks run in exact rational
arithmetic.
"""

from __future__ import annotations

import random
from fractions import Fraction

import numpy as np
from mpmath import clsin, mp, mpf
from mpmath import pi as mp_pi

from chainvol.interval import Interval, basic

mp.dps = 40

MP_PI = +mp_pi
MP_V8 = 8 * clsin(2, mp_pi / 2) / 2  # 8 * Lambda(pi/4)


def mp_lobachevsky(x) -> mpf:
    """High-precision Lambda via mpmath's Clausen function."""
    return clsin(2, 2 * mpf(x)) / 2


def fourier_lambda(theta: float, n_terms: int = 10**6) -> float:
    """Plain float partial sum of the defining Fourier series."""
    k = np.arange(1, n_terms + 1, dtype=np.float64)
    return float(0.5 * np.sum(np.sin(2.0 * theta * k) / (k * k)))


def contains_mpf(iv: Interval, value) -> bool:
    """Certified: the mpmath value lies inside the interval."""
    return mpf(iv.lo) <= value <= mpf(iv.hi)


def contains_fraction(iv: Interval, value: Fraction) -> bool:
    return Fraction(iv.lo) <= value <= Fraction(iv.hi)


def mp_fkp_bound(volume, ell) -> mpf:
    """High-precision Dehn-filling lower bound volume * (1 - (2 pi/ell)^2)^(3/2)."""
    return mpf(volume) * (1 - (2 * mp_pi / mpf(ell)) ** 2) ** mpf("1.5")


def run_containment_sweep(trials: int, seed: int = 20240611) -> list[str]:
    """Random interval operations checked against exact rational arithmetic.

    Returns a list of violation descriptions (empty means the containment
    contract held everywhere).
    """
    rng = random.Random(seed)
    violations: list[str] = []

    def random_value() -> float:
        kind = rng.randrange(4)
        if kind == 0:
            return float(rng.randint(-50, 50))
        if kind == 1:
            return rng.uniform(-10.0, 10.0)
        if kind == 2:
            return rng.uniform(-1e6, 1e6)
        return rng.uniform(-1e-6, 1e-6)

    for trial in range(trials):
        a_pts = sorted(random_value() for _ in range(2))
        b_pts = sorted(random_value() for _ in range(2))
        a = Interval(a_pts[0], a_pts[1])
        b = Interval(b_pts[0], b_pts[1])
        op = ("add", "sub", "mul", "div")[trial % 4]
        if op == "div" and b.contains_zero():
            ends = sorted((abs(b.lo) + 1.0, abs(b.hi) + 1.0))
            b = Interval(ends[0], ends[1] + 1.0)
        result = basic(a, b, op)
        for px in (a.lo, a.mid, a.hi):
            for py in (b.lo, b.mid, b.hi):
                fx, fy = Fraction(px), Fraction(py)
                if op == "add":
                    exact = fx + fy
                elif op == "sub":
                    exact = fx - fy
                elif op == "mul":
                    exact = fx * fy
                else:
                    exact = fx / fy
                if not contains_fraction(result, exact):
                    violations.append(f"{op} {a} {b} at ({px}, {py})")
    return violations
