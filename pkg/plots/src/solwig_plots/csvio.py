"""Reader for the flat CSV schema the solwig CLI emits.

Files start with optional ``#`` comment lines (the first usually carrying the
``# params: {...}`` provenance object), then a header row, then numeric rows.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

__all__ = ["Table", "read_table"]


@dataclass(frozen=True)
class Table:
    params: dict | None
    columns: list[str]
    data: dict[str, np.ndarray]

    def __len__(self) -> int:
        return int(self.data[self.columns[0]].size) if self.columns else 0

    def column(self, name: str) -> np.ndarray:
        if name not in self.data:
            raise KeyError(f"column {name!r} not in CSV; available columns: {', '.join(self.columns)}")
        return self.data[name]


def read_table(path: str) -> Table:
    """Parse a solwig CSV file; raises ValueError on empty or malformed input."""
    params = None
    header: list[str] | None = None
    rows: list[list[float]] = []
    with open(path, "r", encoding="utf-8") as handle:
        for line_number, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                comment = line.lstrip("# ")
                if comment.startswith("params:"):
                    params = json.loads(comment[len("params:"):])
                continue
            if header is None:
                header = [cell.strip() for cell in line.split(",")]
                continue
            cells = line.split(",")
            if len(cells) != len(header):
                raise ValueError(f"{path}:{line_number}: expected {len(header)} cells, got {len(cells)}")
            try:
                rows.append([float(cell) for cell in cells])
            except ValueError as exc:
                raise ValueError(f"{path}:{line_number}: non-numeric cell ({exc})") from exc
    if header is None or not rows:
        raise ValueError(f"{path} holds no data rows")
    matrix = np.asarray(rows, dtype=float)
    return Table(params=params, columns=header, data={name: matrix[:, i] for i, name in enumerate(header)})
