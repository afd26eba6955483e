"""Lobachevsky evaluation: oracles, identities, and the octahedron constant."""

import math
import random
from decimal import Decimal
from fractions import Fraction

import pytest
from mpmath import mpf

from chainvol.interval import Interval, PI
from chainvol.lobachevsky import (
    LobachevskyEval,
    lobachevsky,
    lobachevsky_interval,
    octahedron_volume,
)
from helpers import MP_V8, contains_mpf, fourier_lambda, mp_lobachevsky


class TestPointValues:
    def test_zero(self):
        result = lobachevsky(0.0)
        assert result.value.contains(0.0)
        assert result.value.width == 0.0

    def test_half_pi_interval_argument(self):
        # The enclosure of pi/2 contains the true half period, where the
        # function vanishes exactly.
        value, _ = lobachevsky_interval(PI / Interval.from_int(2))
        assert value.contains(0.0)

    def test_half_pi_float_argument(self):
        result = lobachevsky(math.pi / 2)
        assert result.value.lo <= 1e-15 and result.value.hi >= -1e-15

    def test_quarter_pi_against_high_precision(self):
        theta = math.pi / 4
        result = lobachevsky(theta)
        assert contains_mpf(result.value, mp_lobachevsky(theta))
        assert result.value.contains(0.4579827970886095)

    def test_quarter_pi_against_fourier_series_oracle(self):
        theta = math.pi / 4
        result = lobachevsky(theta)
        oracle = fourier_lambda(theta, 10**6)
        assert abs(oracle - result.value.mid) <= 1e-9 + result.value.width

    @pytest.mark.parametrize("theta", [0.3, 0.9, 1.4, 2.5, -1.1, 7.3, -12.7])
    def test_generic_angles_against_high_precision(self, theta):
        result = lobachevsky(theta)
        assert contains_mpf(result.value, mp_lobachevsky(theta))

    @pytest.mark.parametrize("theta", [0.4, 1.2, -0.8])
    def test_generic_angles_against_fourier_oracle(self, theta):
        result = lobachevsky(theta)
        oracle = fourier_lambda(theta, 10**6)
        assert abs(oracle - result.value.mid) <= 1e-9 + result.value.width

    def test_tiny_angle_contains_true_value(self):
        theta = 1e-9
        result = lobachevsky(theta)
        assert contains_mpf(result.value, mp_lobachevsky(theta))

    def test_non_finite_rejected(self):
        with pytest.raises(ValueError):
            lobachevsky(math.inf)

    def test_bad_tolerance_rejected(self):
        with pytest.raises(ValueError):
            lobachevsky(1.0, tol=0.0)

    def test_eval_record_fields(self):
        result = lobachevsky(0.5, tol=1e-10)
        assert isinstance(result, LobachevskyEval)
        assert result.theta == 0.5
        assert result.terms_used >= 1


class TestIdentities:
    """Each identity is checked through interval arguments, where both
    sides provably contain a common exact value, so the enclosures must
    overlap."""

    def _sample(self, count, lo, hi, seed):
        rng = random.Random(seed)
        return [rng.uniform(lo, hi) for _ in range(count)]

    def test_oddness(self):
        for theta in self._sample(100, -10.0, 10.0, seed=101):
            a = lobachevsky(theta, tol=1e-10).value
            b = lobachevsky(-theta, tol=1e-10).value
            assert abs(a.mid + b.mid) <= a.width + b.width

    def test_periodicity(self):
        for theta in self._sample(100, -5.0, 5.0, seed=102):
            base = lobachevsky_interval(Interval.point(theta), tol=1e-10)[0]
            shifted = lobachevsky_interval(Interval.point(theta) + PI, tol=1e-10)[0]
            assert base.overlaps(shifted)

    def test_duplication(self):
        half_pi = PI / Interval.from_int(2)
        for theta in self._sample(100, 1e-3, math.pi / 2 - 1e-3, seed=103):
            t = Interval.point(theta)
            lhs = lobachevsky_interval(t * 2, tol=1e-10)[0]
            rhs_a = lobachevsky_interval(t, tol=1e-10)[0]
            rhs_b = lobachevsky_interval(t + half_pi, tol=1e-10)[0]
            rhs = rhs_a * 2 + rhs_b * 2
            assert lhs.overlaps(rhs)


class TestToleranceContract:
    def test_width_invariant(self):
        for theta in (0.2, 0.7, 1.5, -2.9, 11.0):
            for tol in (1e-6, 1e-10, 1e-12):
                result = lobachevsky(theta, tol=tol)
                assert result.value.width <= tol + 1.0 / (2.0 * result.terms_used)

    def test_tail_bound_honesty_under_halving(self):
        for theta in (0.31, 0.97, 1.41, -2.2):
            tol = 1e-8
            previous = lobachevsky(theta, tol=tol).value
            while tol > 1e-12:
                tol /= 2.0
                current = lobachevsky(theta, tol=tol).value
                assert previous.contains_interval(current)
                previous = current


class TestOctahedronVolume:
    def test_width(self):
        assert octahedron_volume().width <= 1e-10

    def test_contains_true_value(self):
        assert contains_mpf(octahedron_volume(), MP_V8)

    def test_matches_printed_constant(self):
        # The reference constant is printed to 14 decimal places, so the
        # enclosure (which contains the true value) must meet the printed
        # value's half-ulp band [printed - 5e-15, printed + 5e-15].
        printed = Decimal("3.66386237670888")
        half_ulp = Decimal("5e-15")
        v8 = octahedron_volume()
        assert Decimal(v8.lo) <= printed + half_ulp
        assert Decimal(v8.hi) >= printed - half_ulp

    def test_statement_digits(self):
        v8 = octahedron_volume()
        assert v8.lo < 3.66387 and v8.hi > 3.66386

    def test_four_copies_match_reference_row(self):
        four = octahedron_volume() * 4
        assert abs(Decimal(four.mid) - Decimal("14.65544951")) <= Decimal("5e-9")

    def test_equals_eight_lambda_quarter_pi(self):
        direct, _ = lobachevsky_interval(PI / Interval.from_int(4))
        assert octahedron_volume().overlaps(direct * 8)
