"""``render_figure`` command: one CSV in, one raster image out."""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .csvio import read_table
from .render import KINDS, FigureSpec, render

__all__ = ["entrypoint", "main"]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="render_figure",
        description="Render a solwig CSV table as a 3D surface or line figure.",
    )
    parser.add_argument("csv", help="input CSV (wigner field or density profile)")
    parser.add_argument("--kind", choices=KINDS, help="surface3d or line (default: inferred from the header)")
    parser.add_argument("--column", help="value column (default: abs_w for fields, value for profiles)")
    parser.add_argument("--out", required=True, help="output image path")
    parser.add_argument("--xlabel", default="x")
    parser.add_argument("--ylabel", default="")
    parser.add_argument("--title", default="")
    parser.add_argument("--dpi", type=int, default=150)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        table = read_table(ns.csv)
        is_field = "k" in table.columns
        kind = ns.kind or ("surface3d" if is_field else "line")
        column = ns.column or ("abs_w" if is_field else "value")
        spec = FigureSpec(
            csv_path=ns.csv, kind=kind, column=column, out_path=ns.out,
            x_label=ns.xlabel, y_label=ns.ylabel, title=ns.title, dpi=ns.dpi,
        )
        summary = render(spec)
    except (ValueError, KeyError, OSError) as exc:
        print(f"render_figure: error: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {summary.out_path} ({summary.width_px}x{summary.height_px} px)")
    return 0


def entrypoint() -> None:
    raise SystemExit(main())
