"""Serialization of exploration results: JSON report, CSV exports, witness
files, run manifests, and figure rendering.

Exact-mode outputs are byte-reproducible: JSON keys are sorted, wall-clock
time is kept out of the report file (it lives in the manifest only), and CSV
rows are emitted in sorted order.
"""

from __future__ import annotations

import csv
import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from .explore import ExploreReport
from .hypergraph import DensityPoint, Hypergraph

VERSION = "0.1.0"


def _frac_str(v) -> str:
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    return ""


def _point_row(p: DensityPoint, family: str, r: int) -> dict:
    cs = comb(p.n, r - 1) if p.n >= r - 1 else 0
    cr = comb(p.n, r) if p.n >= r else 0
    shadow_size = ""
    edge_count = ""
    if isinstance(p.x, Fraction) and cs:
        s = p.x * cs
        if s.denominator == 1:
            shadow_size = s.numerator
    if isinstance(p.y, Fraction) and cr:
        m = p.y * cr
        if m.denominator == 1:
            edge_count = m.numerator
    return {
        "n": p.n,
        "r": r,
        "family": family,
        "shadow_size": shadow_size,
        "edge_count": edge_count,
        "x": repr(float(p.x)),
        "y": repr(float(p.y)),
        "x_frac": _frac_str(p.x),
        "y_frac": _frac_str(p.y),
    }


def report_json_dict(report: ExploreReport) -> dict:
    """The report as a JSON-ready dict.  Points are finite-n attainable
    pairs; no claim about the limit region is encoded.  Wall time is omitted
    deliberately so exact runs serialize identically."""
    stats = {k: v for k, v in report.stats.items() if k != "wall_secs"}
    return {
        "family": str(report.family),
        "n": report.n,
        "r": report.r,
        "label": "finite-n attainable",
        "points": [
            _point_row(p, str(report.family), report.r) for p in report.points
        ],
        "extremal": {
            str(s): {"max_edges": m, "witness_id": _witness_id(s)}
            for s, (m, _) in sorted(report.extremal.items())
        },
        "stats": stats,
    }


def _witness_id(shadow_size: int) -> str:
    return f"witness_s{shadow_size}"


def write_report(report: ExploreReport, out_dir: str | Path) -> list[Path]:
    """Write report.json, points.csv, extremal.csv, witnesses/ and a scatter
    figure under out_dir; returns the produced paths."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    produced: list[Path] = []

    report_path = out / "report.json"
    report_path.write_text(
        json.dumps(report_json_dict(report), indent=2, sort_keys=True) + "\n"
    )
    produced.append(report_path)

    points_path = out / "points.csv"
    fields = ["n", "r", "family", "shadow_size", "edge_count", "x", "y", "x_frac", "y_frac"]
    with points_path.open("w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=fields)
        w.writeheader()
        for p in report.points:
            w.writerow(_point_row(p, str(report.family), report.r))
    produced.append(points_path)

    extremal_path = out / "extremal.csv"
    with extremal_path.open("w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["shadow_size", "max_edges", "witness_id"])
        for s in sorted(report.extremal):
            m, _ = report.extremal[s]
            w.writerow([s, m, _witness_id(s)])
    produced.append(extremal_path)

    wit_dir = out / "witnesses"
    wit_dir.mkdir(exist_ok=True)
    for s in sorted(report.extremal):
        _, hg = report.extremal[s]
        path = wit_dir / f"{_witness_id(s)}.json"
        path.write_text(json.dumps(hg.to_json_dict(), sort_keys=True) + "\n")
        produced.append(path)

    fig_path = out / "points.png"
    render_points_figure(report, fig_path)
    produced.append(fig_path)
    return produced


def render_points_figure(report: ExploreReport, path: str | Path) -> None:
    """Scatter plot of the attained density pairs."""
    xs = [float(p.x) for p in report.points]
    ys = [float(p.y) for p in report.points]
    fig, ax = plt.subplots(figsize=(6, 4.5))
    ax.scatter(xs, ys, s=12, color="tab:blue", alpha=0.7)
    ax.set_xlabel("shadow density")
    ax.set_ylabel("edge density")
    ax.set_xlim(-0.02, 1.02)
    ax.set_ylim(-0.02, 1.02)
    ax.set_title(f"{report.family} on n={report.n}, r={report.r}")
    fig.tight_layout()
    fig.savefig(path, dpi=110, metadata={"Software": "feasreg"})
    plt.close(fig)


def render_curve_figure(
    curve_id: str,
    xs: list[float],
    ys: list[float],
    special_points: tuple[tuple[float, float], ...],
    path: str | Path,
) -> None:
    """Line plot of a boundary curve with its marked special points."""
    fig, ax = plt.subplots(figsize=(6, 4.5))
    ax.plot(xs, ys, color="tab:blue")
    if special_points:
        ax.plot(
            [p[0] for p in special_points],
            [p[1] for p in special_points],
            "o",
            color="tab:red",
            markersize=5,
        )
    ax.set_xlabel("x")
    ax.set_ylabel("y")
    ax.set_title(curve_id)
    fig.tight_layout()
    fig.savefig(path, dpi=110, metadata={"Software": "feasreg"})
    plt.close(fig)


# -- run manifests ---------------------------------------------------------


def sha256_file(path: str | Path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 16), b""):
            h.update(chunk)
    return h.hexdigest()


@dataclass
class RunManifest:
    """Provenance record for one CLI run."""

    command: list[str]
    seed: int
    version: str = VERSION
    outputs: list[dict] = field(default_factory=list)
    wall_secs: float = 0.0

    def add_output(self, path: str | Path) -> None:
        self.outputs.append({"path": str(path), "sha256": sha256_file(path)})

    def to_json(self) -> str:
        data = {
            "command": self.command,
            "seed": self.seed,
            "version": self.version,
            "outputs": self.outputs,
            "wall_secs": self.wall_secs,
        }
        return json.dumps(data, indent=2, sort_keys=True) + "\n"

    def write(self, path: str | Path) -> Path:
        p = Path(path)
        p.write_text(self.to_json())
        return p
