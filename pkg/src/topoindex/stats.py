"""Pearson correlation tables over the octane dataset."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import Sequence

from .indices import INDEX_LABELS, IndexVector, index_vector
from .octanes import (
    NEW_INDICES,
    OLD_INDICES,
    PROPERTY_LABELS,
    PROPERTY_NAMES,
    TABLE2_ROWS,
    MoleculeRecord,
)


class CorrelationError(ValueError):
    pass


def pearson(x: Sequence[float], y: Sequence[float]) -> float:
    """Sample Pearson coefficient via centred sums (two passes).

    Raises :class:`CorrelationError` on mismatched lengths, fewer than two
    points, or a constant vector.
    """
    if len(x) != len(y):
        raise CorrelationError(f"length mismatch: {len(x)} vs {len(y)}")
    if len(x) < 2:
        raise CorrelationError("need at least two observations")
    mx = math.fsum(x) / len(x)
    my = math.fsum(y) / len(y)
    dx = [a - mx for a in x]
    dy = [b - my for b in y]
    sxx = math.fsum(a * a for a in dx)
    syy = math.fsum(b * b for b in dy)
    if sxx == 0.0 or syy == 0.0:
        raise CorrelationError("constant vector has zero variance")
    r = math.fsum(a * b for a, b in zip(dx, dy)) / math.sqrt(sxx * syy)
    return max(-1.0, min(1.0, r))


@dataclass(frozen=True)
class Discrepancy:
    row: str
    col: str
    printed: float
    computed: float

    @property
    def delta(self) -> float:
        return self.computed - self.printed


@dataclass(frozen=True)
class CorrelationTable:
    rows: tuple[str, ...]
    cols: tuple[str, ...]
    values: tuple[tuple[float, ...], ...]

    def __post_init__(self):
        if len(self.values) != len(self.rows) or any(len(r) != len(self.cols) for r in self.values):
            raise ValueError("table shape does not match its labels")
        for row in self.values:
            for v in row:
                if not -1.0 <= v <= 1.0:
                    raise ValueError(f"correlation {v} outside [-1, 1]")

    def get(self, row: str, col: str) -> float:
        return self.values[self.rows.index(row)][self.cols.index(col)]

    def cells(self):
        for i, r in enumerate(self.rows):
            for j, c in enumerate(self.cols):
                yield r, c, self.values[i][j]

    def compare(self, printed: Sequence[Sequence[float]], tol: float = 0.01) -> list[Discrepancy]:
        """Cells differing from ``printed`` by more than ``tol``."""
        out = []
        for i, r in enumerate(self.rows):
            for j, c in enumerate(self.cols):
                got, ref = self.values[i][j], printed[i][j]
                if abs(got - ref) > tol:
                    out.append(Discrepancy(r, c, ref, got))
        return out

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["index", *(_label(c) for c in self.cols)])
        for r, row in zip(self.rows, self.values):
            writer.writerow([_label(r), *(f"{v:.4f}" for v in row)])
        return buf.getvalue()

    def to_markdown(self) -> str:
        header = ["Index", *(_label(c) for c in self.cols)]
        body = [[_label(r), *(f"{v:.4f}" for v in row)] for r, row in zip(self.rows, self.values)]
        widths = [max(len(line[k]) for line in [header, *body]) for k in range(len(header))]
        fmt = lambda cells: "| " + " | ".join(c.rjust(w) for c, w in zip(cells, widths)) + " |"
        sep = "|" + "|".join("-" * (w + 2) for w in widths) + "|"
        return "\n".join([fmt(header), sep, *(fmt(line) for line in body)]) + "\n"

    def to_dict(self) -> dict:
        return {
            "rows": [_label(r) for r in self.rows],
            "cols": [_label(c) for c in self.cols],
            "values": [list(row) for row in self.values],
        }


def _label(name: str) -> str:
    return INDEX_LABELS.get(name) or PROPERTY_LABELS.get(name) or name


def index_columns(records: Sequence[MoleculeRecord]) -> list[IndexVector]:
    return [index_vector(r.skeleton) for r in records]


def correlation_table(
    row_data: dict[str, Sequence[float]],
    col_data: dict[str, Sequence[float]],
) -> CorrelationTable:
    values = []
    for r, x in row_data.items():
        values.append(tuple(1.0 if x is col_data[c] else pearson(x, col_data[c]) for c in col_data))
    return CorrelationTable(tuple(row_data), tuple(col_data), tuple(values))


def _index_data(vectors: Sequence[IndexVector], names: Sequence[str]) -> dict[str, list[float]]:
    return {name: [getattr(v, name) for v in vectors] for name in names}


def index_property_table(
    records: Sequence[MoleculeRecord],
    indices: Sequence[str] = TABLE2_ROWS,
    properties: Sequence[str] = PROPERTY_NAMES,
) -> CorrelationTable:
    vectors = index_columns(records)
    props = {p: [r.property(p) for r in records] for p in properties}
    return correlation_table(_index_data(vectors, indices), props)


def squared_table(t: CorrelationTable) -> CorrelationTable:
    return CorrelationTable(t.rows, t.cols, tuple(tuple(v * v for v in row) for row in t.values))


def old_vs_new_table(records: Sequence[MoleculeRecord]) -> CorrelationTable:
    vectors = index_columns(records)
    return correlation_table(_index_data(vectors, NEW_INDICES), _index_data(vectors, OLD_INDICES))


def cross_table(records: Sequence[MoleculeRecord]) -> CorrelationTable:
    vectors = index_columns(records)
    data = _index_data(vectors, NEW_INDICES)
    # same list objects on both axes, so the diagonal is exactly 1
    return correlation_table(data, data)
