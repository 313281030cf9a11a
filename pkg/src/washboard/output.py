"""CSV/JSON writers shared by the command line tools.

CSV files start with one ``#``-prefixed JSON header line naming columns and
units; values follow with 17 significant digits so binary64 round-trips.
"""

from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Any, Sequence

import numpy as np


def _clean(obj: Any) -> Any:
    if isinstance(obj, dict):
        return {str(k): _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [_clean(v) for v in obj.tolist()]
    if isinstance(obj, (np.floating, float)):
        f = float(obj)
        return f if math.isfinite(f) else None
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, complex):
        return {"re": obj.real, "im": obj.imag}
    return obj


def dumps(obj: Any) -> str:
    return json.dumps(_clean(obj), sort_keys=True, ensure_ascii=False, indent=2,
                      allow_nan=False) + "\n"


def write_json(path: Path, obj: Any) -> Path:
    path = Path(path)
    path.write_text(dumps(obj), encoding="utf-8")
    return path


def write_table(path: Path, columns: Sequence[str], units: Sequence[str], data,
                meta: dict | None = None, fmt: str = "csv") -> Path:
    """Write column data as CSV (or JSON when ``fmt == 'json'``); returns the path."""
    cols = [np.asarray(c, dtype=float) for c in data]
    if len({len(c) for c in cols}) > 1:
        raise ValueError("columns differ in length")
    header = {"columns": list(columns), "units": list(units)}
    if meta:
        header.update(meta)
    path = Path(path)
    if fmt == "json":
        path = path.with_suffix(".json")
        header["rows"] = np.column_stack(cols).tolist() if cols else []
        return write_json(path, header)
    if fmt != "csv":
        raise ValueError(f"unknown format {fmt!r}")
    path = path.with_suffix(".csv")
    lines = ["# " + json.dumps(_clean(header), sort_keys=True, ensure_ascii=False)]
    for row in zip(*cols):
        lines.append(",".join(f"{v:.17g}" for v in row))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


def read_table(path: Path) -> tuple[dict, np.ndarray]:
    """Inverse of :func:`write_table` for the CSV form."""
    text = Path(path).read_text(encoding="utf-8").splitlines()
    if not text or not text[0].startswith("# "):
        raise ValueError("missing JSON header line")
    header = json.loads(text[0][2:])
    rows = [[float(v) for v in line.split(",")] for line in text[1:] if line]
    return header, np.array(rows).reshape(len(rows), len(header["columns"]))
