"""Result emission: exact CSV, JSON reports and static SVG plots.

Every CSV cell is an exact string; approximations live in columns whose
name ends in ``_approx``. SVG output is deterministic (fixed hash salt, no
date metadata) so repeated runs produce identical bytes.
"""

from __future__ import annotations

import csv
import io
from collections.abc import Iterable, Sequence
from pathlib import Path
from typing import Any

import click
import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
from pydantic import BaseModel  # noqa: E402

from pseudodyn._config import DEFAULT_APPROX_BITS  # noqa: E402
from pseudodyn.exactnum import Infinity, Scalar, approx  # noqa: E402

APPROX_SUFFIX = "_approx"

_RC = {
    "svg.hashsalt": "pseudodyn",
    "svg.fonttype": "none",
    "font.size": 9,
    "figure.figsize": (5.0, 3.2),
}


def cell(value: Any) -> str:
    """Exact text for one CSV cell ('' for None)."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def approx_cell(value: Any, bits: int = DEFAULT_APPROX_BITS) -> str:
    if isinstance(value, Scalar | Infinity):
        return approx(value, bits)
    if value is None:
        return ""
    return approx(Scalar.coerce(value), bits)


def csv_text(columns: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([cell(v) for v in row])
    return buffer.getvalue()


def write_text(text: str, target: Path | None) -> None:
    """Write to a file, or to stdout when no target is given."""
    if target is None:
        click.echo(text, nl=False)
        return
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(text, encoding="utf-8")


def emit_csv(
    columns: Sequence[str], rows: Iterable[Sequence[Any]], target: Path | None
) -> None:
    write_text(csv_text(columns, rows), target)


def emit_json(report: BaseModel, target: Path | None) -> None:
    write_text(report.model_dump_json(indent=2, by_alias=True) + "\n", target)


def emit_svg(
    target: Path,
    xs: Sequence[float],
    series: dict[str, Sequence[float]],
    *,
    xlabel: str,
    ylabel: str,
    title: str,
) -> None:
    """A line plot of one or more series against xs."""
    with plt.rc_context(_RC):
        fig, ax = plt.subplots()
        for label, ys in series.items():
            ax.plot(xs, ys, marker="o", markersize=3, linewidth=1, label=label)
        ax.set_xlabel(xlabel)
        ax.set_ylabel(ylabel)
        ax.set_title(title)
        if len(series) > 1:
            ax.legend(frameon=False)
        fig.tight_layout()
        target.parent.mkdir(parents=True, exist_ok=True)
        fig.savefig(target, format="svg", metadata={"Date": None})
        plt.close(fig)
