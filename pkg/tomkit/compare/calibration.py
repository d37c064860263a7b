"""Which internal axis the printed "columns" comparison tables are read from.

Internally entries[i][j] = |Fix_{U_i}(G/U_j)|. Printed tables name their
axes "columns" and "rows"; the calibration maps each printed name to an
internal axis, either by matching the bundled golden table for groups 15
and 16 of order 64, or structurally: the printed "rows" axis is the one
that carries a vector made entirely of ones.
"""

import csv
import os
from typing import Literal

import numpy as np
from pydantic import BaseModel, ConfigDict

from tomkit.compare.comparison import Axis, comparison_rows
from tomkit.exceptions import TomkitError
from tomkit.marks.table import MarksMatrix
from tomkit.tomkit_conf import BUNDLED_GOLDEN_DIR

CALIBRATION_PAIR = (15, 16)


class GoldenTable(BaseModel):
    model_config = ConfigDict(frozen=True)

    axis: Axis
    group_order: int
    id_a: int
    id_b: int
    values: tuple[int, ...]
    lines: frozenset[tuple[tuple[tuple[int, int], ...], int, int]]


class AxisCalibration(BaseModel):
    model_config = ConfigDict(frozen=True)

    printed_columns_axis: Axis
    method: Literal["golden", "structural"]

    def internal_axis(self, printed_axis: Axis) -> Axis:
        if printed_axis == "columns":
            return self.printed_columns_axis
        return "rows" if self.printed_columns_axis == "columns" else "columns"

    def describe(self) -> str:
        return (
            f"printed columns = internal {self.printed_columns_axis}, "
            f"printed rows = internal {self.internal_axis('rows')} (method: {self.method})"
        )


def golden_path(axis: Axis, id_a: int, id_b: int) -> str:
    return os.path.join(BUNDLED_GOLDEN_DIR, f"{axis}_{id_a}_{id_b}.tsv")


def load_golden(path: str) -> GoldenTable:
    """Read a golden comparison table; lines are keyed by their nonzero value counts"""
    with open(path, newline="") as handle:
        records = list(csv.reader(handle, delimiter="\t"))
    axis = records[0][1]
    _, group_order, id_a, id_b = records[1]
    values = tuple(int(v.lstrip("# ")) for v in records[2][:-2])
    lines = set()
    for record in records[3:]:
        if not record:
            continue
        numbers = [int(x) for x in record]
        counts = tuple((v, c) for v, c in zip(values, numbers[:-2]) if c)
        lines.add((counts, numbers[-2], numbers[-1]))
    return GoldenTable(
        axis=axis,  # type: ignore[arg-type]
        group_order=int(group_order),
        id_a=int(id_a),
        id_b=int(id_b),
        values=values,
        lines=frozenset(lines),
    )


def comparison_lines(
    a: MarksMatrix, b: MarksMatrix, internal_axis: Axis
) -> frozenset[tuple[tuple[tuple[int, int], ...], int, int]]:
    """Set of (nonzero value counts, count in a, count in b) over the given axis"""
    rows = comparison_rows(a, b, internal_axis)
    return frozenset(
        (
            tuple((v, c) for v, c in zip(rows.values, row.value_counts) if c),
            row.count_in_a,
            row.count_in_b,
        )
        for row in rows.rows
    )


def calibrate_with_golden(table_15: MarksMatrix, table_16: MarksMatrix) -> AxisCalibration:
    golden = load_golden(golden_path("columns", *CALIBRATION_PAIR))
    axes: tuple[Axis, ...] = ("rows", "columns")
    matches = [
        axis for axis in axes if comparison_lines(table_15, table_16, axis) == golden.lines
    ]
    if len(matches) != 1:
        raise TomkitError(
            f"Golden calibration is inconclusive: matching internal axes {matches}"
        )
    return AxisCalibration(printed_columns_axis=matches[0], method="golden")


def calibrate_structurally(table: MarksMatrix) -> AxisCalibration:
    if table.n < 2:
        raise TomkitError("Structural calibration needs a table with at least two classes")
    entries = table.entries
    ones_column = bool(np.any(np.all(entries == 1, axis=0)))
    ones_row = bool(np.any(np.all(entries == 1, axis=1)))
    if ones_column == ones_row:
        raise TomkitError("Structural calibration is inconclusive for this table")
    printed_rows_axis = "columns" if ones_column else "rows"
    return AxisCalibration(
        printed_columns_axis="rows" if printed_rows_axis == "columns" else "columns",
        method="structural",
    )


def calibrate_orientation(
    table_15: MarksMatrix | None = None,
    table_16: MarksMatrix | None = None,
    fallback: MarksMatrix | None = None,
) -> AxisCalibration:
    """Golden calibration when the order-64 tables are given, structural otherwise"""
    if table_15 is not None and table_16 is not None:
        return calibrate_with_golden(table_15, table_16)
    if fallback is None:
        raise TomkitError(
            "Calibration needs the order-64 tables 15 and 16 or a fallback table"
        )
    return calibrate_structurally(fallback)
