"""Matplotlib renderings of the report outputs.

Each renderer writes PNG files into a directory and returns their paths;
the CLI calls these when ``--figures`` is given, alongside the delimited
output.  Matplotlib is imported lazily with the Agg backend so headless
runs and library users without a display are unaffected.
"""

from __future__ import annotations

from pathlib import Path

from .bounds import WindowCase
from .classify import FrontierCase
from .interval import Interval
from .report import TablesRow

__all__ = ["render_tables_figure", "render_roots_figures"]


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def render_tables_figure(rows: list[TablesRow], outdir: str | Path) -> list[Path]:
    """Cover volume, certified bound, and exact even volumes against n."""
    plt = _pyplot()
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)

    ns = [r.n for r in rows]
    cover = [(float(r.cover_lo) + float(r.cover_hi)) / 2 for r in rows]
    bound_pts = [(r.n, (float(r.bound_lo) + float(r.bound_hi)) / 2) for r in rows if r.bound_lo]
    exact_pts = [
        (r.n, (float(r.exact_even_lo) + float(r.exact_even_hi)) / 2) for r in rows if r.exact_even_lo
    ]

    fig, ax = plt.subplots(figsize=(7.2, 4.6))
    ax.plot(ns, cover, "-", color="0.4", lw=1.2, label="cover volume (n-1) v8")
    if bound_pts:
        ax.plot(*zip(*bound_pts), "o", ms=3, color="tab:blue", label="certified lower bound")
    if exact_pts:
        ax.plot(*zip(*exact_pts), "s", ms=3, color="tab:red", label="exact even-chain volume")
    ax.set_xlabel("chain components n")
    ax.set_ylabel("volume")
    ax.set_title("Minimally twisted chain volumes vs. Whitehead covers")
    ax.legend(fontsize=8)
    ax.grid(alpha=0.3)
    fig.tight_layout()
    path = outdir / "tables_volumes.png"
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return [path]


def render_roots_figures(
    root_bracket: Interval,
    critical: Interval,
    r_max_location: float,
    r_max_value: Interval,
    frontiers: dict[int, dict[WindowCase, FrontierCase]],
    outdir: str | Path,
) -> list[Path]:
    """Two panels: the comparison function's root/critical point, and the
    zero-window fan with the per-case exclusion thresholds."""
    from .bounds import comparison_f, r_of_n

    plt = _pyplot()
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    paths: list[Path] = []

    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9.6, 4.2))
    ns = [7 + i * 0.5 for i in range(2 * (300 - 7) + 1)]
    ax1.plot(ns, [comparison_f(x).mid for x in ns], color="tab:blue", lw=1.2)
    ax1.axhline(0.0, color="0.3", lw=0.8)
    ax1.axvspan(root_bracket.lo, root_bracket.hi, color="tab:orange", alpha=0.6, label="root bracket")
    ax1.axvline(critical.mid, color="tab:red", ls="--", lw=0.9, label="critical point")
    ax1.set_xlabel("n")
    ax1.set_ylabel("f(n)")
    ax1.set_title("Cover comparison function")
    ax1.legend(fontsize=8)
    ax1.grid(alpha=0.3)

    xs = [x / 10 for x in range(20, 591)]
    ax2.plot(xs, [r_of_n(x).mid for x in xs], color="tab:green", lw=1.2)
    ax2.plot([r_max_location], [r_max_value.mid], "k*", ms=9, label="maximum")
    ax2.axhline(8.0, color="0.3", ls=":", lw=0.9, label="window limit 8")
    ax2.set_xlabel("n")
    ax2.set_ylabel("R(n)")
    ax2.set_title("Zero-window radius")
    ax2.legend(fontsize=8)
    ax2.grid(alpha=0.3)
    fig.tight_layout()
    path = outdir / "roots_curves.png"
    fig.savefig(path, dpi=150)
    plt.close(fig)
    paths.append(path)

    fig, ax = plt.subplots(figsize=(7.2, 4.6))
    styles = {
        WindowCase.EVEN_N_EVEN_R: ("tab:blue", "even n, even r"),
        WindowCase.EVEN_N_ODD_R: ("tab:cyan", "even n, odd r"),
        WindowCase.ODD_N_EVEN_R: ("tab:red", "odd n, even r"),
        WindowCase.ODD_N_ODD_R: ("tab:orange", "odd n, odd r"),
    }
    seen: set[WindowCase] = set()
    for n, cases in sorted(frontiers.items()):
        for case, fc in cases.items():
            if fc.window is None:
                continue
            color, label = styles[case]
            ax.plot(
                [n, n],
                [fc.window.outer_lo, fc.window.outer_hi],
                color=color,
                lw=2.2,
                alpha=0.7,
                label=None if case in seen else label,
            )
            seen.add(case)
    ax.axhline(8.0, color="0.2", ls=":", lw=0.9)
    ax.axhline(-8.0, color="0.2", ls=":", lw=0.9)
    ax.set_xlabel("chain components n")
    ax.set_ylabel("twist coefficient m")
    ax.set_title("Zero windows of the twisted comparison function")
    ax.legend(fontsize=8, loc="upper right")
    ax.grid(alpha=0.3)
    fig.tight_layout()
    path = outdir / "roots_zero_windows.png"
    fig.savefig(path, dpi=150)
    plt.close(fig)
    paths.append(path)
    return paths
