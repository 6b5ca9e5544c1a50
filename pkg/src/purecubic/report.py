"""CSV summaries and figures for sweeps over field generators.

Each report runs the full pipeline per field: reduced-ideal census,
period detection, fundamental unit.  The CSV is the delimited record;
the figures plot the same data for a quick visual read.  matplotlib is
imported lazily so library users never pay for it.
"""

from __future__ import annotations

import csv
import os

from .context import build_context
from .elements import val
from .exactreal import decimal_str
from .reduced import enumerate_reduced, max_reduced_length
from .sequences import detect_period

SUMMARY_COLUMNS = [
    "m", "h", "k", "sigma", "pm", "max_length_bound", "reduced_count",
    "period", "unit_x", "unit_y", "unit_z", "unit_value",
]


def field_summary(m: int, digits: int = 6,
                  iteration_cap: int | None = None) -> dict:
    ctx = build_context(m)
    res = detect_period(ctx, iteration_cap=iteration_cap,
                        verify_shifts=False)
    x, y, z = (int(v) for v in res.fundamental_unit.coords())
    return {
        "m": m,
        "h": ctx.h,
        "k": ctx.k,
        "sigma": ctx.sigma,
        "pm": ctx.sign,
        "max_length_bound": max_reduced_length(ctx),
        "reduced_count": len(enumerate_reduced(ctx)),
        "period": res.period,
        "unit_x": x,
        "unit_y": y,
        "unit_z": z,
        "unit_value": decimal_str(val(res.fundamental_unit), digits),
        "norm_period": res.norm_period,
    }


def write_report(ms: list[int], out_dir: str, digits: int = 6,
                 iteration_cap: int | None = None) -> list[str]:
    """Summary CSV plus three PNG figures; returns the written paths."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    os.makedirs(out_dir, exist_ok=True)
    rows = [field_summary(m, digits, iteration_cap) for m in ms]
    paths = []

    csv_path = os.path.join(out_dir, "summary.csv")
    with open(csv_path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=SUMMARY_COLUMNS,
                                extrasaction="ignore")
        writer.writeheader()
        for row in rows:
            writer.writerow(row)
    paths.append(csv_path)

    fig, ax = plt.subplots(figsize=(7, 4))
    ax.bar([r["m"] for r in rows], [r["reduced_count"] for r in rows],
           color="#4878a8")
    ax.set_xlabel("m")
    ax.set_ylabel("reduced ideals")
    ax.set_title("Reduced ideal census")
    fig.tight_layout()
    p = os.path.join(out_dir, "reduced_counts.png")
    fig.savefig(p, dpi=120)
    plt.close(fig)
    paths.append(p)

    fig, ax = plt.subplots(figsize=(7, 4))
    ax.semilogy([r["m"] for r in rows],
                [float(r["unit_value"]) for r in rows],
                marker="o", color="#a85048")
    ax.set_xlabel("m")
    ax.set_ylabel("fundamental unit value")
    ax.set_title("Unit growth across fields")
    fig.tight_layout()
    p = os.path.join(out_dir, "unit_values.png")
    fig.savefig(p, dpi=120)
    plt.close(fig)
    paths.append(p)

    fig, ax = plt.subplots(figsize=(7, 4))
    for r in rows:
        seq = r["norm_period"] + [1]
        ax.step(range(len(seq)), seq, where="mid", label=f"m={r['m']}")
    ax.set_xlabel("step")
    ax.set_ylabel("norm")
    ax.set_title("Norm sequences over one period")
    if rows:
        ax.legend(fontsize=8, ncol=2)
    fig.tight_layout()
    p = os.path.join(out_dir, "norm_periods.png")
    fig.savefig(p, dpi=120)
    plt.close(fig)
    paths.append(p)

    return paths
