"""Acceptance gate: every release criterion at its stated tolerance.

Each test prints one ``ACCEPTANCE <id> <name>: PASS|FAIL`` line (run with
``pytest -s`` to see the lines for passing criteria too).

Criterion 6 is split: 6a is the general twisting threshold (|m| >= 8 for
every n in [5, 59]); 6b asserts the historical small-chain claim that
|m| >= 5 suffices for n in [5, 10].  The certified windows refute that
claim for n in {8, 9, 10} (the true threshold there is 6: the
window radius R(10) = 5.4887... reaches past 5), so 6b FAILS and is kept
failing on purpose; see README for the analysis.  The residual check sets
and reference tables are consistent with the certified threshold, not
with the claim.
"""

from decimal import Decimal

import pytest

from chainvol.bounds import (
    bisect_f_root,
    comparison_f,
    f_critical_point,
    filling_factor,
    masai_difference,
    scan_r_maximum,
    thurston_even_volume,
    whitehead_cover_volume,
)
from chainvol.classify import (
    Verdict,
    classify_chain,
    exclusion_frontier,
    residual_counts,
    verify_reference,
)
from chainvol.cusp import BaseFamily, SlopeSpec, slope_length_squared, slope_walk
from chainvol.interval import Interval, PI
from chainvol.lobachevsky import lobachevsky_interval, octahedron_volume
from chainvol.refdata import load_bundled_reference
from helpers import MP_V8, contains_mpf, run_containment_sweep


def _emit(ident: str, name: str, ok: bool, detail: str = "") -> None:
    line = f"ACCEPTANCE {ident:>3} {name}: {'PASS' if ok else 'FAIL'}"
    if detail and not ok:
        line += f"  [{detail}]"
    print(line)


def _t1_rows():
    return {r.n: r for r in load_bundled_reference() if r.table_id == "T1"}


def test_criterion_1_octahedron_constant():
    v8 = octahedron_volume()
    printed = Decimal("3.66386237670888")  # 14 printed decimal places
    half_ulp = Decimal("5e-15")
    ok = (
        v8.width <= 1e-10
        and contains_mpf(v8, MP_V8)
        and Decimal(v8.lo) <= printed + half_ulp
        and Decimal(v8.hi) >= printed - half_ulp
    )
    _emit("1", "octahedron-constant", ok, f"enclosure {v8}")
    assert ok


def test_criterion_2_whitehead_covers():
    tol = Decimal("1e-6")
    failures = []
    for n, row in sorted(_t1_rows().items()):
        cover = whitehead_cover_volume(n)
        recorded = row.cover_decimal
        if not (recorded - tol <= Decimal(cover.lo) and Decimal(cover.hi) <= recorded + tol):
            failures.append(n)
    ok = not failures and set(_t1_rows()) == set(range(5, 61))
    _emit("2", "whitehead-cover-volumes", ok, f"mismatches at n={failures}")
    assert ok


def test_criterion_3_thurston_even_volumes():
    rows = _t1_rows()
    tol = Decimal("1e-6")
    failures = []
    for n in range(6, 61, 2):
        exact = thurston_even_volume(n)
        recorded = rows[n].volume_decimal
        if not (recorded - tol <= Decimal(exact.lo) and Decimal(exact.hi) <= recorded + tol):
            failures.append(n)
    spot = rows[6].volume == "14.65544951" and rows[60].volume == "219.1731666"
    ok = not failures and spot
    _emit("3", "exact-even-chain-volumes", ok, f"mismatches at n={failures}")
    assert ok


def test_criterion_4_slope_length_oracle():
    mismatches = []
    for n in range(5, 201):
        for family in BaseFamily:
            for m in range(-50, 51):
                spec = SlopeSpec(n, m, family)
                if slope_walk(spec).norm_squared != slope_length_squared(spec):
                    mismatches.append((n, m, family.value))
    ok = not mismatches
    _emit("4", "slope-length-oracle", ok, f"{len(mismatches)} mismatches")
    assert ok


def test_criterion_5_main_threshold():
    signs_ok = comparison_f(59).strictly_negative() and comparison_f(60).strictly_positive()
    bracket = bisect_f_root(59.0, 60.0, 1e-3)
    bracket_ok = 59.0 < bracket.lo and bracket.hi < 59.1 and bracket.width <= 1e-3
    not_excluded = [
        n
        for n in range(60, 5001)
        if classify_chain(n, 0, attach_reference=False).verdict is not Verdict.EXCLUDED_BY_BOUND
    ]
    ok = signs_ok and bracket_ok and not not_excluded
    _emit(
        "5",
        "main-threshold",
        ok,
        f"signs={signs_ok} bracket={bracket} residual-n={not_excluded[:5]}",
    )
    assert ok


def _twist_counterexamples(n_range, m_start) -> list[tuple[int, str, int]]:
    bad = []
    for n in n_range:
        for family in BaseFamily:
            for m in list(range(m_start, 31)) + list(range(-30, -m_start + 1)):
                r = 2 * m if family is BaseFamily.MIN_TWIST else 2 * m + 1
                verdict = classify_chain(n, r, attach_reference=False).verdict
                if verdict is not Verdict.EXCLUDED_BY_BOUND:
                    bad.append((n, family.value, m))
    return bad


def test_criterion_6a_twisting_threshold_general():
    bad = _twist_counterexamples(range(5, 60), 8)
    sharp = True
    try:
        for n in range(5, 60):
            for fc in exclusion_frontier(n).values():  # certifies both boundary signs
                if fc.threshold > 8:
                    sharp = False
    except Exception as exc:  # certification failure would surface here
        sharp = False
    ok = not bad and sharp
    _emit("6a", "twisting-threshold-|m|>=8", ok, f"counterexamples={bad[:5]} sharp={sharp}")
    assert ok


def test_criterion_6b_small_chain_threshold_as_stated():
    bad = _twist_counterexamples(range(5, 11), 5)
    ok = not bad
    _emit(
        "6b",
        "small-chain-threshold-|m|>=5",
        ok,
        f"{len(bad)} counterexamples (certified threshold is 6): {bad}",
    )
    assert ok, (
        "the |m| >= 5 claim fails for these (n, family, m); "
        f"the certified small-chain threshold is 6: {bad}"
    )


def test_criterion_7_radius_extremum_and_critical_point():
    location, value = scan_r_maximum(29.0, 30.5, 1e-3)
    crit = f_critical_point()
    ok = (
        29.5 <= location <= 29.7
        and 7.3 < value.lo
        and value.hi < 7.4
        and 117.7 < crit.lo
        and crit.hi < 117.9
    )
    _emit("7", "radius-extremum-critical-point", ok, f"loc={location} R={value} crit={crit}")
    assert ok


def test_criterion_8_residual_enumeration():
    counts = residual_counts()
    ok = counts == {
        "odd_min_twist": 350,
        "even_min_twist": 168,
        "even_half_twist": 192,
        "total": 710,
    }
    _emit("8", "residual-enumeration-710", ok, str(counts))
    assert ok


def test_criterion_9_reference_soundness():
    rows = load_bundled_reference()
    verification = verify_reference(rows)
    ordering_ok = all(
        (row.volume_decimal > row.cover_decimal) == (row.n >= 11)
        for row in rows
        if row.table_id == "T1"
    )
    ok = verification.ok and ordering_ok
    _emit(
        "9",
        "reference-soundness",
        ok,
        f"failures={[f.check for f in verification.failures[:3]]} ordering={ordering_ok}",
    )
    assert ok


def test_criterion_10_masai_monotonicity():
    previous = masai_difference(6)
    monotone = []
    for n in range(7, 201):
        current = masai_difference(n)
        if not current.lo > previous.hi:
            monotone.append(n)
        previous = current
    positive = [n for n in range(13, 30) if not masai_difference(n).strictly_positive()]
    ok = not monotone and not positive
    _emit("10", "masai-monotonicity", ok, f"monotone-fail={monotone[:3]} sign-fail={positive[:3]}")
    assert ok


def test_criterion_11_property_suites():
    containment = run_containment_sweep(10_000)

    import random

    rng = random.Random(20240611)
    half_pi = PI / Interval.from_int(2)
    lam_fail = []
    for _ in range(100):
        theta = rng.uniform(-6.0, 6.0)
        a = lobachevsky_interval(Interval.point(theta), 1e-10)[0]
        b = lobachevsky_interval(Interval.point(-theta), 1e-10)[0]
        if abs(a.mid + b.mid) > a.width + b.width:
            lam_fail.append(("odd", theta))
        shifted = lobachevsky_interval(Interval.point(theta) + PI, 1e-10)[0]
        if not a.overlaps(shifted):
            lam_fail.append(("periodic", theta))
        t = Interval.point(abs(theta) % 1.5 + 0.01)
        lhs = lobachevsky_interval(t * 2, 1e-10)[0]
        rhs = (
            lobachevsky_interval(t, 1e-10)[0] * 2
            + lobachevsky_interval(t + half_pi, 1e-10)[0] * 2
        )
        if not lhs.overlaps(rhs):
            lam_fail.append(("duplication", theta))

    factors = [filling_factor(Interval.point(ell)) for ell in (6.5, 8.0, 15.0, 40.0, 300.0, 1e6)]
    fkp_monotone = all(b.strictly_greater(a) for a, b in zip(factors, factors[1:]))
    fkp_limit = abs(factors[-1].mid - 1.0) <= 1e-9

    ok = not containment and not lam_fail and fkp_monotone and fkp_limit
    _emit(
        "11",
        "property-suites",
        ok,
        f"containment={len(containment)} lambda={lam_fail[:3]} "
        f"fkp_monotone={fkp_monotone} fkp_limit={fkp_limit}",
    )
    assert ok
