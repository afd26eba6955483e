"""Euclidean cusp cross-sections and Dehn-filling slope lengths.

The two solid-torus families modelled here are chains of unknots in a
solid torus: the minimally twisted chain (``hatW``) and the chain closed
up with one extra half-twist (``barW``).  Filling the solid-torus cusp
along the slope (1, m) produces the complement of an n-chain link with
2m, respectively 2m + 1, half-twists.

The cusp torus of either family is tiled by squares of side sqrt(2)
coming from ideal octahedra, so every slope is a lattice vector whose
squared length is an exact integer.  All geometry in this module is done
in exact integer arithmetic; square roots are only taken at the boundary
to the bounds layer.

Of the two mirror conventions for the odd minimally twisted chain (they
are isometric by an orientation-reversing isometry) this module fixes the
one whose solid-torus longitude takes floor(n/2) + (n mod 2) horizontal
steps and floor(n/2) vertical steps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .interval import Interval, sqrt

__all__ = [
    "BaseFamily",
    "CuspComponent",
    "CuspShape",
    "LatticeVector",
    "SlopeSpec",
    "UnsupportedChainError",
    "N_LIMIT",
    "cusp_shape",
    "half_twists",
    "longitude_length_squared",
    "slope_for_half_twists",
    "slope_length",
    "slope_length_squared",
    "slope_walk",
]

# Keeps squared slope lengths comfortably inside the exact-double range.
N_LIMIT = 1_000_000


class UnsupportedChainError(ValueError):
    """Chain parameters outside the hyperbolic range handled here."""


class CuspComponent(Enum):
    K = "K"
    KBAR = "Kbar"


class BaseFamily(Enum):
    """Which solid-torus chain a slope lives on."""

    MIN_TWIST = "hatW"  # minimally twisted chain in a solid torus
    HALF_TWIST = "barW"  # one extra half-twist before closing up


@dataclass(frozen=True)
class CuspShape:
    """Maximal horocusp shape of one two-component-link cusp."""

    meridian_length: float
    longitude_length: float
    meridian_to_longitude_angle: float  # radians, signed


def cusp_shape(component: CuspComponent) -> CuspShape:
    """Cusp shape of component K or its mirror Kbar.

    Both have meridian sqrt(2) and longitude 4; the meridian-to-longitude
    angle is -pi/4 for K and +pi/4 for the mirror.
    """
    angle = -math.pi / 4 if component is CuspComponent.K else math.pi / 4
    return CuspShape(
        meridian_length=math.sqrt(2.0),
        longitude_length=4.0,
        meridian_to_longitude_angle=angle,
    )


@dataclass(frozen=True, slots=True)
class SlopeSpec:
    """Slope (1, m) on the solid-torus cusp of one of the two families."""

    n: int
    m: int
    family: BaseFamily

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or not isinstance(self.m, int):
            raise TypeError("n and m must be integers")
        if self.n < 5:
            raise UnsupportedChainError(
                f"n-chain complements are hyperbolic only for n >= 5, got n={self.n}"
            )
        if self.n > N_LIMIT or abs(self.m) > N_LIMIT:
            raise OverflowError(
                f"|n|, |m| capped at {N_LIMIT} to keep squared lengths exact"
            )

    @property
    def epsilon(self) -> int:
        """Parity bit n mod 2."""
        return self.n % 2


def slope_for_half_twists(n: int, r: int) -> SlopeSpec:
    """Slope producing the n-chain link with r signed half-twists.

    Even r = 2m lives on the minimally twisted family; odd r = 2m + 1 on
    the half-twisted one, so e.g. r = -3 maps to m = -2.
    """
    if r % 2 == 0:
        return SlopeSpec(n=n, m=r // 2, family=BaseFamily.MIN_TWIST)
    return SlopeSpec(n=n, m=(r - 1) // 2, family=BaseFamily.HALF_TWIST)


def half_twists(s: SlopeSpec) -> int:
    """Signed half-twist count of the chain produced by filling ``s``."""
    return 2 * s.m if s.family is BaseFamily.MIN_TWIST else 2 * s.m + 1


def longitude_length_squared(n: int) -> int:
    """Exact squared length n^2 + (n mod 2) of the solid-torus longitude."""
    if not isinstance(n, int):
        raise TypeError("n must be an integer")
    if n < 5:
        raise UnsupportedChainError(
            f"n-chain complements are hyperbolic only for n >= 5, got n={n}"
        )
    if n > N_LIMIT:
        raise OverflowError(f"n capped at {N_LIMIT}")
    return n * n + (n % 2)


def slope_length_squared(s: SlopeSpec) -> int:
    """Exact integer squared length of the slope (1, m), in four parity cases."""
    n, m, eps = s.n, s.m, s.epsilon
    if s.family is BaseFamily.MIN_TWIST:
        return n * n + 16 * m * m + eps * (1 + 8 * m)
    if eps == 0:
        return n * n + 4 * (1 + 2 * m) ** 2
    return n * n + 16 * m * m + (1 - 8 * m)


def slope_length(s: SlopeSpec) -> Interval:
    """Certified enclosure of the slope length sqrt(slope_length_squared)."""
    return sqrt(Interval.from_int(slope_length_squared(s)))


@dataclass(frozen=True, slots=True)
class LatticeVector:
    """Endpoint of a slope on the sqrt(2)-square tiling of the cusp torus.

    Coordinates are stored in units of sqrt(2) so the squared norm stays an
    exact integer.
    """

    x_units: int
    y_units: int

    @property
    def x(self) -> float:
        return self.x_units * math.sqrt(2.0)

    @property
    def y(self) -> float:
        return self.y_units * math.sqrt(2.0)

    @property
    def norm_squared(self) -> int:
        return 2 * (self.x_units * self.x_units + self.y_units * self.y_units)


def slope_walk(s: SlopeSpec) -> LatticeVector:
    """Slope endpoint by walking the cusp tiling; independent of the closed forms.

    The longitude steps through the meridians of the K and Kbar cusps
    (which meet at right angles), and each meridian unit contributes the
    step (2 sqrt(2), -2 sqrt(2)).
    """
    n, m = s.n, s.m
    k, eps = divmod(n, 2)
    if s.family is BaseFamily.MIN_TWIST:
        base = (k + eps, k)
    elif eps == 0:
        base = (k + 1, k - 1)
    else:
        base = (k, k + 1)
    return LatticeVector(x_units=base[0] + 2 * m, y_units=base[1] - 2 * m)
