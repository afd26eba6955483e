"""Verdicts, residual enumeration, and reference-data verification.

A chain link (n, r half-twists) is *excluded* when its certified volume
lower bound strictly exceeds the comparison volume (n-1) v8 at interval
level; when the bound applies but does not separate, the case is
*residual* and must be settled by external (triangulation-level) means.
Overlapping enclosures never produce an excluded verdict.

The residual check set matches the one used for the bundled reference
tables exactly, including its isometry bookkeeping:

  * odd n: the two solid-torus families are isometric, so only the
    minimally twisted one is enumerated, m in {+-1..+-7};
  * even n, minimally twisted: fillings (1, m) and (1, -m) are isometric,
    representatives m in {-7..-1};
  * even n, half-twisted: fillings (1, m) and (1, -(m-1)) are isometric,
    representatives m in {-7..0}.

Representatives are the lexicographically least (family, m) under
hatW < barW, matching the reference tables' column sets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal
from enum import Enum
from fractions import Fraction
from functools import lru_cache

from .bounds import (
    FillingBound,
    InconclusiveEnclosure,
    NoZeroWindow,
    WindowCase,
    ZeroWindow,
    chain_volume_lower_bound,
    comparison_f_nm,
    fkp_lower_bound,
    thurston_even_volume,
    whitehead_cover_volume,
    zero_window,
)
from .cusp import (
    BaseFamily,
    SlopeSpec,
    UnsupportedChainError,
    half_twists,
    slope_for_half_twists,
    slope_length,
    slope_length_squared,
)
from .interval import Interval
from .lobachevsky import DEFAULT_TOLERANCE, octahedron_volume
from .refdata import ReferenceRow, load_bundled_reference

__all__ = [
    "BoundReport",
    "ChainLinkId",
    "CheckResult",
    "FrontierCase",
    "ReferenceVerification",
    "ResidualCase",
    "Verdict",
    "classify_chain",
    "enumerate_residual",
    "exclusion_frontier",
    "residual_counts",
    "residual_universe",
    "verify_reference",
]


class Verdict(Enum):
    EXCLUDED_BY_BOUND = "ExcludedByBound"
    RESIDUAL = "Residual"
    BOUND_INAPPLICABLE = "BoundInapplicable"
    ERROR = "Error"


@dataclass(frozen=True)
class ChainLinkId:
    """An n-chain link with r signed half-twists (r = 0: minimally twisted)."""

    n: int
    r: int


@dataclass(frozen=True)
class BoundReport:
    """Everything the bound says about one chain link."""

    id: ChainLinkId
    slope: SlopeSpec | None
    slope_length_sq: int | None
    lower_bound: Interval | None
    cover_volume: Interval | None
    verdict: Verdict
    margin: Interval | None
    applicable: bool
    reason: str = ""
    reference_volume: str | None = None
    reference_margin: float | None = None


@lru_cache(maxsize=1)
def _reference_lookup() -> dict[tuple[str, int, int | None], ReferenceRow]:
    table: dict[tuple[str, int, int | None], ReferenceRow] = {}
    for row in load_bundled_reference():
        table.setdefault((row.base, row.n, row.m), row)
    return table


def _attach_reference(base: str, n: int, m: int | None) -> tuple[str | None, float | None]:
    row = _reference_lookup().get((base, n, m))
    if row is None:
        return None, None
    return row.volume, float(row.volume_decimal - row.cover_decimal)


def classify_chain(
    id_or_n: ChainLinkId | int,
    r: int | None = None,
    tol: float = DEFAULT_TOLERANCE,
    attach_reference: bool = True,
) -> BoundReport:
    """Classify one chain link by strict interval comparison against the cover.

    ExcludedByBound requires the certified lower bound to lie strictly
    above the cover-volume enclosure; an uncertified 2 pi condition yields
    BoundInapplicable; n < 5 yields an Error verdict rather than raising.
    """
    cid = id_or_n if isinstance(id_or_n, ChainLinkId) else ChainLinkId(n=id_or_n, r=int(r or 0))
    if not isinstance(cid.n, int) or cid.n < 5:
        return BoundReport(
            id=cid,
            slope=None,
            slope_length_sq=None,
            lower_bound=None,
            cover_volume=None,
            verdict=Verdict.ERROR,
            margin=None,
            applicable=False,
            reason=f"n-chain complements are hyperbolic only for n >= 5, got n={cid.n}",
        )

    bound: FillingBound = chain_volume_lower_bound(cid.n, cid.r, tol)
    cover = whitehead_cover_volume(cid.n, tol)
    margin = bound.lower_bound - cover
    if not bound.applicable:
        verdict = Verdict.BOUND_INAPPLICABLE
    elif bound.lower_bound.strictly_greater(cover):
        verdict = Verdict.EXCLUDED_BY_BOUND
    else:
        verdict = Verdict.RESIDUAL

    ref_volume = ref_margin = None
    if attach_reference:
        slope = bound.slope
        assert slope is not None
        if cid.r == 0:
            ref_volume, ref_margin = _attach_reference("none", cid.n, None)
        else:
            ref_volume, ref_margin = _attach_reference(slope.family.value, cid.n, slope.m)

    return BoundReport(
        id=cid,
        slope=bound.slope,
        slope_length_sq=slope_length_squared(bound.slope) if bound.slope else None,
        lower_bound=bound.lower_bound,
        cover_volume=cover,
        verdict=verdict,
        margin=margin,
        applicable=bound.applicable,
        reference_volume=ref_volume,
        reference_margin=ref_margin,
    )


# ----------------------------------------------------------------------
# Exclusion frontier
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class FrontierCase:
    """Per parity case: least M with every |m| >= M certifiably excluded."""

    case: WindowCase
    window: ZeroWindow | None
    threshold: int


def exclusion_frontier(n: int) -> dict[WindowCase, FrontierCase]:
    """Certified per-case twist thresholds for one n.

    The candidate threshold comes from the zero-window edges and is then
    confirmed by certified sign checks at the boundary integers: f > 0
    just outside the window on both sides, f < 0 at the extreme integers
    inside (when any integer is inside).
    """
    if not isinstance(n, int) or n < 5:
        raise UnsupportedChainError(f"frontier defined for integers n >= 5, got {n}")
    result: dict[WindowCase, FrontierCase] = {}
    cases = (
        (WindowCase.EVEN_N_EVEN_R, WindowCase.EVEN_N_ODD_R)
        if n % 2 == 0
        else (WindowCase.ODD_N_EVEN_R, WindowCase.ODD_N_ODD_R)
    )
    for case in cases:
        try:
            window = zero_window(n, case)
        except NoZeroWindow:
            result[case] = FrontierCase(case=case, window=None, threshold=0)
            _certify_sign(n, 0, case.family, positive=True)
            continue
        hi_edge = math.floor(window.outer_hi)  # greatest integer possibly inside
        lo_edge = math.ceil(window.outer_lo)  # least integer possibly inside
        threshold = max(hi_edge + 1, -(lo_edge - 1), 0)
        _certify_sign(n, threshold, case.family, positive=True)
        _certify_sign(n, -threshold, case.family, positive=True)
        if lo_edge <= hi_edge:
            # Integers exist inside the window; pin the extreme ones negative.
            _certify_sign(n, hi_edge, case.family, positive=False)
            _certify_sign(n, lo_edge, case.family, positive=False)
        result[case] = FrontierCase(case=case, window=window, threshold=threshold)
    return result


def _certify_sign(n: int, m: int, family: BaseFamily, positive: bool) -> None:
    value = comparison_f_nm(n, m, family)
    ok = value.strictly_positive() if positive else value.strictly_negative()
    if not ok:
        want = "positive" if positive else "negative"
        raise InconclusiveEnclosure(f"f({n}, {m}, {family.value}) not certified {want}: {value}")


# ----------------------------------------------------------------------
# Residual enumeration
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class ResidualCase:
    """One filling in the residual check set.

    ``canonical`` marks the isometry-class representative; a non-canonical
    case carries the representative it is isometric to.
    """

    family: BaseFamily
    n: int
    m: int
    canonical: bool
    partner: tuple[BaseFamily, int, int] | None = None


_LARGE_RANGE = range(11, 60)
_SMALL_RANGE = range(5, 11)


def enumerate_residual(range_name: str, include_partners: bool = False) -> list[ResidualCase]:
    """Residual check sets.

    ``large`` is the 710-filling check set over n in [11, 59] (the
    minimally twisted filling m = 0 is the separately handled chain and is
    omitted).  ``small`` is the check set over n in [5, 10].  With
    ``include_partners`` the non-canonical isometric partners are listed
    too, each pointing at its representative.
    """
    if range_name == "large":
        return _enumerate_large(include_partners)
    if range_name == "small":
        return _enumerate_small(include_partners)
    raise ValueError(f"range must be 'large' or 'small', got {range_name!r}")


def _enumerate_large(include_partners: bool) -> list[ResidualCase]:
    cases: list[ResidualCase] = []
    for n in _LARGE_RANGE:
        if n % 2 == 1:
            for m in range(-7, 8):
                if m == 0:
                    continue  # the minimally twisted chain, handled separately
                cases.append(ResidualCase(BaseFamily.MIN_TWIST, n, m, canonical=True))
            if include_partners:
                for m in range(-7, 8):
                    partner = (BaseFamily.MIN_TWIST, n, -m)
                    cases.append(
                        ResidualCase(BaseFamily.HALF_TWIST, n, m, canonical=False, partner=partner)
                    )
        else:
            for m in range(-7, 0):
                cases.append(ResidualCase(BaseFamily.MIN_TWIST, n, m, canonical=True))
            if include_partners:
                for m in range(1, 8):
                    partner = (BaseFamily.MIN_TWIST, n, -m)
                    cases.append(
                        ResidualCase(BaseFamily.MIN_TWIST, n, m, canonical=False, partner=partner)
                    )
            for m in range(-7, 1):
                cases.append(ResidualCase(BaseFamily.HALF_TWIST, n, m, canonical=True))
            if include_partners:
                for m in range(1, 9):
                    partner = (BaseFamily.HALF_TWIST, n, 1 - m)
                    cases.append(
                        ResidualCase(BaseFamily.HALF_TWIST, n, m, canonical=False, partner=partner)
                    )
    return cases


def _enumerate_small(include_partners: bool) -> list[ResidualCase]:
    cases: list[ResidualCase] = []
    for n in _SMALL_RANGE:
        if n % 2 == 1:
            for m in (-5, -4, -3, -2, -1, 1, 2, 3, 4, 5):
                cases.append(ResidualCase(BaseFamily.MIN_TWIST, n, m, canonical=True))
            if include_partners:
                for m in (-5, -4, -3, -2, -1, 1, 2, 3, 4, 5):
                    partner = (BaseFamily.MIN_TWIST, n, -m)
                    cases.append(
                        ResidualCase(BaseFamily.HALF_TWIST, n, m, canonical=False, partner=partner)
                    )
        else:
            for m in (1, 2, 3, 4, 5):
                cases.append(ResidualCase(BaseFamily.MIN_TWIST, n, m, canonical=True))
            if include_partners:
                for m in (-5, -4, -3, -2, -1):
                    partner = (BaseFamily.MIN_TWIST, n, -m)
                    cases.append(
                        ResidualCase(BaseFamily.MIN_TWIST, n, m, canonical=False, partner=partner)
                    )
            for m in (0, 1, 2, 3, 4, 5):
                cases.append(ResidualCase(BaseFamily.HALF_TWIST, n, m, canonical=True))
            if include_partners:
                for m in (-5, -4, -3, -2, -1):
                    partner = (BaseFamily.HALF_TWIST, n, 1 - m)
                    cases.append(
                        ResidualCase(BaseFamily.HALF_TWIST, n, m, canonical=False, partner=partner)
                    )
    return cases


def residual_counts() -> dict[str, int]:
    """Component counts of the large canonical check set (total 710)."""
    cases = enumerate_residual("large")
    odd_hat = sum(1 for c in cases if c.n % 2 == 1)
    even_hat = sum(1 for c in cases if c.n % 2 == 0 and c.family is BaseFamily.MIN_TWIST)
    even_bar = sum(1 for c in cases if c.n % 2 == 0 and c.family is BaseFamily.HALF_TWIST)
    return {
        "odd_min_twist": odd_hat,
        "even_min_twist": even_hat,
        "even_half_twist": even_bar,
        "total": odd_hat + even_hat + even_bar,
    }


def residual_universe(n: int) -> set[tuple[BaseFamily, int]]:
    """All (family, m) at this n that are residual cases or isometric to one.

    Includes the omitted minimally twisted filling itself; everything with
    |m| <= 20 outside this set must classify as excluded by the bound.
    """
    universe = {(BaseFamily.MIN_TWIST, 0)}
    if n % 2 == 1:
        universe.add((BaseFamily.HALF_TWIST, 0))  # isometric to the minimally twisted chain
    source = "large" if n in _LARGE_RANGE else "small"
    for case in enumerate_residual(source, include_partners=True):
        if case.n == n:
            universe.add((case.family, case.m))
    return universe


# ----------------------------------------------------------------------
# Reference verification
# ----------------------------------------------------------------------

# T1 prints ~10 significant digits; T2..T5 print three decimals.
TABLE_TOLERANCES = {
    "T1": Decimal("1e-6"),
    "T2": Decimal("5e-4"),
    "T3": Decimal("5e-4"),
    "T4": Decimal("5e-4"),
    "T5": Decimal("5e-4"),
}


@dataclass(frozen=True)
class CheckResult:
    row: ReferenceRow
    check: str
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class ReferenceVerification:
    checks: tuple[CheckResult, ...]

    @property
    def failures(self) -> tuple[CheckResult, ...]:
        return tuple(c for c in self.checks if not c.ok)

    @property
    def ok(self) -> bool:
        return not self.failures


def _enclosure_within(enclosure: Interval, recorded: Decimal, tol: Decimal) -> bool:
    """Certified: enclosure lies inside [recorded - tol, recorded + tol]."""
    lo = Fraction(recorded - tol)
    hi = Fraction(recorded + tol)
    return lo <= Fraction(enclosure.lo) and Fraction(enclosure.hi) <= hi


def _base_family(base: str) -> BaseFamily:
    return BaseFamily.MIN_TWIST if base in ("hatW", "none") else BaseFamily.HALF_TWIST


def verify_reference(
    rows: list[ReferenceRow] | tuple[ReferenceRow, ...],
    tol: float = DEFAULT_TOLERANCE,
) -> ReferenceVerification:
    """Check a reference dataset against the certified machinery, row by row.

    Per row: the recorded cover volume is recomputed (T1..T4); where the
    2 pi condition certifies, the certified lower bound must fall strictly
    below the recorded volume; T1 even rows must match the exact
    even-chain formula; T1 rows must order against the cover exactly at
    n >= 11; T5 rows must exceed their minimally twisted volume, which is
    cross-checked against the dataset's own T1 rows when present.
    """
    checks: list[CheckResult] = []
    t1_by_n = {row.n: row for row in rows if row.table_id == "T1"}

    for row in rows:
        table_tol = TABLE_TOLERANCES[row.table_id]

        if row.table_id in ("T1", "T2", "T3", "T4"):
            cover = whitehead_cover_volume(row.n, tol)
            ok = _enclosure_within(cover, row.cover_decimal, table_tol)
            checks.append(
                CheckResult(
                    row,
                    "cover-recompute",
                    ok,
                    f"(n-1)v8 in [{cover.lo!r}, {cover.hi!r}] vs recorded {row.cover_volume}",
                )
            )
        else:
            ok = row.volume_decimal > row.cover_decimal
            checks.append(
                CheckResult(
                    row,
                    "exceeds-minimal-twist",
                    ok,
                    f"{row.volume} > {row.cover_volume}",
                )
            )
            t1 = t1_by_n.get(row.n)
            if t1 is not None:
                ok = abs(t1.volume_decimal - row.cover_decimal) <= table_tol
                checks.append(
                    CheckResult(
                        row,
                        "mintwist-crosscheck",
                        ok,
                        f"T5 cover {row.cover_volume} vs T1 volume {t1.volume}",
                    )
                )

        m = 0 if row.m is None else row.m
        spec = SlopeSpec(n=row.n, m=m, family=_base_family(row.base))
        bound = fkp_lower_bound(
            Interval.from_int(row.n) * octahedron_volume(tol),
            slope_length(spec),
            slope=spec,
        )
        if bound.applicable:
            ok = Fraction(bound.lower_bound.lo) < Fraction(row.volume_decimal)
            checks.append(
                CheckResult(
                    row,
                    "bound-below-volume",
                    ok,
                    f"lower bound {bound.lower_bound.lo!r} < recorded {row.volume}",
                )
            )

        if row.table_id == "T1":
            if row.n % 2 == 0:
                exact = thurston_even_volume(row.n, tol)
                ok = _enclosure_within(exact, row.volume_decimal, table_tol)
                checks.append(
                    CheckResult(
                        row,
                        "even-chain-exact-volume",
                        ok,
                        f"formula in [{exact.lo!r}, {exact.hi!r}] vs recorded {row.volume}",
                    )
                )
            ok = (row.volume_decimal > row.cover_decimal) == (row.n >= 11)
            checks.append(
                CheckResult(
                    row,
                    "cover-ordering",
                    ok,
                    f"volume {row.volume} vs cover {row.cover_volume} at n={row.n}",
                )
            )

    return ReferenceVerification(checks=tuple(checks))
