"""File loaders and writers for point-cloud CSV and complex JSON documents."""
from __future__ import annotations

import csv
import json
import math
from pathlib import Path

import numpy as np

from .complex import LabeledComplex, from_document, to_document
from .errors import EmptyFile, NonNumericCell, ParseError, RaggedRows
from .rips import PointCloud


def parse_point_rows(lines, header: bool = False) -> PointCloud:
    rows = []
    width = None
    for lineno, row in enumerate(csv.reader(lines), start=1):
        if header and lineno == 1:
            continue
        if not row or all(not cell.strip() for cell in row):
            continue
        values = []
        for col, cell in enumerate(row, start=1):
            try:
                x = float(cell.strip())
            except ValueError:
                raise NonNumericCell(lineno, col, cell) from None
            if not math.isfinite(x):
                raise NonNumericCell(lineno, col, cell)
            values.append(x)
        if width is None:
            width = len(values)
        elif len(values) != width:
            raise RaggedRows(lineno, width, len(values))
        rows.append(values)
    if not rows:
        raise EmptyFile("no data rows")
    return PointCloud(np.array(rows, dtype=float))


def load_point_cloud(path, header: bool = False) -> PointCloud:
    """Read one point per row, comma separated; row i becomes point i."""
    with open(path, newline="", encoding="utf-8") as fh:
        return parse_point_rows(fh, header=header)


def write_point_cloud(cloud: PointCloud, path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        for p in cloud.points:
            writer.writerow([repr(float(x)) for x in p])


def load_complex(path, *, allow_coincident: bool = False) -> LabeledComplex:
    text = Path(path).read_text(encoding="utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON: {exc}") from exc
    return from_document(doc, allow_coincident=allow_coincident)


def save_complex(A: LabeledComplex, path) -> None:
    Path(path).write_text(json.dumps(to_document(A)) + "\n", encoding="utf-8")
