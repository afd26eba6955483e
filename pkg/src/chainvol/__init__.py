"""Certified volume bounds and classification for hyperbolic chain link complements.

The package decides, for an n-chain link with a given number of signed
half-twists, whether its complement's volume certifiably exceeds that of
the (n-1)-fold cyclic Whitehead-link cover, using only outward-rounded
interval arithmetic on top of IEEE-754 semantics.  Cases the bound cannot
settle are enumerated as finite residual check sets, and bundled
reference volume tables can be verified against the certified machinery.

All public functions are pure and all values immutable, so everything is
safe to share across threads or parallel maps; internal caches hold only
immutable results of deterministic computations.
"""

from .bounds import (
    FillingBound,
    InconclusiveEnclosure,
    NoZeroWindow,
    WindowCase,
    ZeroWindow,
    bisect_f_root,
    chain_volume_lower_bound,
    comparison_f,
    comparison_f_nm,
    f_critical_point,
    filling_factor,
    fkp_lower_bound,
    masai_difference,
    r_of_n,
    scan_r_maximum,
    thurston_even_volume,
    whitehead_cover_volume,
    zero_window,
    zero_windows,
)
from .classify import (
    BoundReport,
    ChainLinkId,
    FrontierCase,
    ReferenceVerification,
    ResidualCase,
    Verdict,
    classify_chain,
    enumerate_residual,
    exclusion_frontier,
    residual_counts,
    residual_universe,
    verify_reference,
)
from .cusp import (
    BaseFamily,
    CuspComponent,
    CuspShape,
    LatticeVector,
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
from .interval import (
    FOUR_PI_SQUARED,
    Interval,
    IntervalDomainError,
    PI,
    TWO_PI,
    basic,
    cbrt,
    pi_enclosure,
    pow_3_2,
    sqrt,
)
from .lobachevsky import (
    DEFAULT_TOLERANCE,
    LobachevskyEval,
    lobachevsky,
    lobachevsky_interval,
    octahedron_volume,
)
from .refdata import (
    ReferenceFormatError,
    ReferenceRow,
    load_bundled_reference,
    load_reference_csv,
    parse_reference_rows,
)

__version__ = "0.1.0"
