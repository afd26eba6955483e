"""Cusp geometry: closed-form slope lengths against the lattice-walk oracle."""

import math

import pytest

from chainvol.cusp import (
    BaseFamily,
    CuspComponent,
    N_LIMIT,
    SlopeSpec,
    UnsupportedChainError,
    cusp_shape,
    half_twists,
    longitude_length_squared,
    slope_for_half_twists,
    slope_length,
    slope_length_squared,
    slope_walk,
)
from helpers import contains_mpf


class TestCuspShape:
    def test_component_k(self):
        shape = cusp_shape(CuspComponent.K)
        assert shape.meridian_length == pytest.approx(math.sqrt(2), abs=0)
        assert shape.longitude_length == 4.0
        assert shape.meridian_to_longitude_angle == -math.pi / 4

    def test_component_kbar_mirror(self):
        shape = cusp_shape(CuspComponent.KBAR)
        assert shape.meridian_to_longitude_angle == math.pi / 4

    def test_components_share_lengths(self):
        a = cusp_shape(CuspComponent.K)
        b = cusp_shape(CuspComponent.KBAR)
        assert (a.meridian_length, a.longitude_length) == (b.meridian_length, b.longitude_length)


class TestLongitude:
    def test_even_case(self):
        assert longitude_length_squared(12) == 144

    def test_odd_cases_match_walk_oracle(self):
        for n in (7, 11):
            expected = slope_walk(SlopeSpec(n, 0, BaseFamily.MIN_TWIST)).norm_squared
            assert longitude_length_squared(n) == expected
        assert longitude_length_squared(7) == 50
        assert longitude_length_squared(11) == 122

    def test_below_hyperbolic_range(self):
        with pytest.raises(UnsupportedChainError):
            longitude_length_squared(4)

    def test_overflow_guard(self):
        with pytest.raises(OverflowError):
            longitude_length_squared(N_LIMIT + 1)


class TestSlopeLengthSquared:
    def test_reduces_to_longitude(self):
        assert slope_length_squared(SlopeSpec(12, 0, BaseFamily.MIN_TWIST)) == 144

    def test_examples(self):
        assert slope_length_squared(SlopeSpec(14, -3, BaseFamily.MIN_TWIST)) == 340
        assert slope_length_squared(SlopeSpec(12, 0, BaseFamily.HALF_TWIST)) == 148
        assert slope_length_squared(SlopeSpec(11, 2, BaseFamily.HALF_TWIST)) == 170

    def test_parity_consistency_with_longitude(self):
        for n in range(5, 201):
            spec = SlopeSpec(n, 0, BaseFamily.MIN_TWIST)
            assert slope_length_squared(spec) == longitude_length_squared(n)

    def test_twisting_monotonicity(self):
        for n in range(5, 201):
            for family in BaseFamily:
                values = {m: slope_length_squared(SlopeSpec(n, m, family)) for m in range(-50, 51)}
                for m in range(0, 50):
                    assert values[m + 1] > values[m], (n, family, m)
                for m in range(-50, -1):
                    assert values[m] > values[m + 1], (n, family, m)

    def test_epsilon_derived(self):
        assert SlopeSpec(11, 3, BaseFamily.MIN_TWIST).epsilon == 1
        assert SlopeSpec(12, 3, BaseFamily.MIN_TWIST).epsilon == 0

    def test_invalid_n(self):
        with pytest.raises(UnsupportedChainError):
            SlopeSpec(4, 0, BaseFamily.MIN_TWIST)

    def test_overflow_guard(self):
        with pytest.raises(OverflowError):
            SlopeSpec(10, N_LIMIT + 1, BaseFamily.MIN_TWIST)


class TestSlopeLength:
    def test_exact_case(self):
        iv = slope_length(SlopeSpec(12, 0, BaseFamily.MIN_TWIST))
        assert iv.contains(12.0)

    def test_irrational_case(self):
        from mpmath import mp

        iv = slope_length(SlopeSpec(11, 0, BaseFamily.MIN_TWIST))
        assert contains_mpf(iv, mp.sqrt(122))
        assert iv.contains(11.045361017187261)

    def test_large_even(self):
        assert slope_length(SlopeSpec(60, 0, BaseFamily.MIN_TWIST)).contains(60.0)


class TestSlopeWalk:
    def test_symmetric_even_case(self):
        vec = slope_walk(SlopeSpec(10, 0, BaseFamily.MIN_TWIST))
        assert (vec.x_units, vec.y_units) == (5, 5)
        assert vec.norm_squared == 100
        assert vec.x == pytest.approx(5 * math.sqrt(2))

    def test_odd_twisted_case(self):
        vec = slope_walk(SlopeSpec(7, 1, BaseFamily.MIN_TWIST))
        assert (vec.x_units, vec.y_units) == (6, 1)
        assert vec.norm_squared == 74
        assert vec.norm_squared == slope_length_squared(SlopeSpec(7, 1, BaseFamily.MIN_TWIST))

    def test_half_twist_base(self):
        vec = slope_walk(SlopeSpec(12, 0, BaseFamily.HALF_TWIST))
        assert (vec.x_units, vec.y_units) == (7, 5)
        assert vec.norm_squared == 148

    def test_meridian_step(self):
        # One meridian unit moves the endpoint by (2, -2) in sqrt(2) units.
        for family in BaseFamily:
            for n in (9, 12):
                a = slope_walk(SlopeSpec(n, 3, family))
                b = slope_walk(SlopeSpec(n, 4, family))
                assert (b.x_units - a.x_units, b.y_units - a.y_units) == (2, -2)

    def test_oracle_equivalence_full_grid(self):
        mismatches = 0
        for n in range(5, 201):
            for family in BaseFamily:
                for m in range(-50, 51):
                    spec = SlopeSpec(n, m, family)
                    if slope_walk(spec).norm_squared != slope_length_squared(spec):
                        mismatches += 1
        assert mismatches == 0


class TestHalfTwistConversion:
    def test_even_twists(self):
        spec = slope_for_half_twists(10, -4)
        assert spec.family is BaseFamily.MIN_TWIST and spec.m == -2

    def test_odd_twists(self):
        spec = slope_for_half_twists(10, -3)
        assert spec.family is BaseFamily.HALF_TWIST and spec.m == -2
        assert slope_for_half_twists(10, 9).m == 4

    def test_round_trip(self):
        for r in range(-21, 22):
            assert half_twists(slope_for_half_twists(9, r)) == r
