"""Census report rendering: delimited output plus summary figures.

``write_census_report`` drops a ``census.csv`` next to two matplotlib PNGs
(class counts by crossing number, Fox 3-coloring distribution) into a report
directory.  Matplotlib is imported lazily so the rest of the CLI stays light.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path

from .textio import code_to_obj, emit_gauss_text

CSV_FIELDS = [
    "key",
    "representative",
    "crossings",
    "components",
    "class_size",
    "fox_2",
    "fox_3",
    "fox_5",
    "fox_7",
    "alexander",
    "linking_off_diagonal",
]


def census_rows(classes):
    rows = []
    for c in classes:
        link, fox, alex = c.fingerprint
        rows.append(
            {
                "key": repr(c.key),
                "representative": emit_gauss_text(c.representative),
                "crossings": c.representative.crossing_count(),
                "components": len(c.representative.components),
                "class_size": c.size,
                "fox_2": fox[0],
                "fox_3": fox[1],
                "fox_5": fox[2],
                "fox_7": fox[3],
                "alexander": str(alex),
                "linking_off_diagonal": json.dumps([list(r) for r in link]),
            }
        )
    return rows


def census_obj(classes):
    """Structured interchange form of a census run."""
    return {
        "format": "weldlink/census",
        "version": 1,
        "classes": [
            {
                "representative": code_to_obj(c.representative),
                "class_size": c.size,
                "fox_colorings": {
                    str(p): n for p, n in zip((2, 3, 5, 7), c.fingerprint[1])
                },
                "alexander": str(c.fingerprint[2]),
                "linking_off_diagonal": [list(r) for r in c.fingerprint[0]],
            }
            for c in classes
        ],
    }


def format_census_table(classes):
    """Human-readable fixed-width table of census classes."""
    rows = census_rows(classes)
    header = ["representative", "crossings", "class_size", "fox_3", "alexander"]
    widths = {h: len(h) for h in header}
    for row in rows:
        for h in header:
            widths[h] = max(widths[h], len(str(row[h])))
    lines = ["  ".join(h.ljust(widths[h]) for h in header)]
    lines.append("  ".join("-" * widths[h] for h in header))
    for row in rows:
        lines.append("  ".join(str(row[h]).ljust(widths[h]) for h in header))
    return "\n".join(lines)


def write_census_report(classes, out_dir):
    """Write census.csv and summary figures into ``out_dir``; returns paths."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    rows = census_rows(classes)
    csv_path = out / "census.csv"
    with open(csv_path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=CSV_FIELDS)
        writer.writeheader()
        writer.writerows(rows)
    figures = _write_figures(rows, out)
    return [csv_path] + figures


def _write_figures(rows, out):
    import matplotlib

    matplotlib.use("Agg", force=False)
    import matplotlib.pyplot as plt

    paths = []
    by_crossings = {}
    for row in rows:
        by_crossings[row["crossings"]] = by_crossings.get(row["crossings"], 0) + 1
    fig, ax = plt.subplots(figsize=(5, 3.5))
    xs = sorted(by_crossings)
    ax.bar([str(x) for x in xs], [by_crossings[x] for x in xs], color="#446688")
    ax.set_xlabel("crossings of class representative")
    ax.set_ylabel("equivalence classes")
    ax.set_title("Census classes by crossing number")
    fig.tight_layout()
    path = out / "classes_by_crossings.png"
    fig.savefig(path, dpi=120)
    plt.close(fig)
    paths.append(path)

    by_fox3 = {}
    for row in rows:
        by_fox3[row["fox_3"]] = by_fox3.get(row["fox_3"], 0) + 1
    fig, ax = plt.subplots(figsize=(5, 3.5))
    xs = sorted(by_fox3)
    ax.bar([str(x) for x in xs], [by_fox3[x] for x in xs], color="#884444")
    ax.set_xlabel("Fox 3-coloring count")
    ax.set_ylabel("equivalence classes")
    ax.set_title("Fox 3-colorings across census classes")
    fig.tight_layout()
    path = out / "fox3_distribution.png"
    fig.savefig(path, dpi=120)
    plt.close(fig)
    paths.append(path)
    return paths
