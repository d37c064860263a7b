from collections import Counter
from typing import Literal

from pydantic import BaseModel, ConfigDict, computed_field

from tomkit.marks.table import MarksMatrix
from tomkit.multiset import Multiset, column_multisets, entries_invariant, row_multisets

Axis = Literal["rows", "columns"]


class ComparisonRow(BaseModel):
    """One row/column type and how often it occurs in each table"""

    model_config = ConfigDict(frozen=True)

    value_counts: tuple[int, ...]
    count_in_a: int
    count_in_b: int

    @computed_field  # type: ignore[prop-decorator]
    @property
    def differs(self) -> bool:
        return self.count_in_a != self.count_in_b


class ComparisonTable(BaseModel):
    model_config = ConfigDict(frozen=True)

    internal_axis: Axis
    values: tuple[int, ...]
    label_a: tuple[int, int] | None
    label_b: tuple[int, int] | None
    rows: tuple[ComparisonRow, ...]

    @property
    def discrepancies(self) -> list[ComparisonRow]:
        return [row for row in self.rows if row.differs]


def axis_multisets(table: MarksMatrix, internal_axis: Axis) -> list[Multiset]:
    return row_multisets(table) if internal_axis == "rows" else column_multisets(table)


def comparison_rows(a: MarksMatrix, b: MarksMatrix, internal_axis: Axis) -> ComparisonTable:
    """Count every vector type of the axis by its nonzero values.

    The value columns are the nonzero values present in either table; lines
    are ordered by total count descending, then by value counts.
    """
    values = tuple(
        sorted(
            {int(v) for v in entries_invariant(a).values() if v}
            | {int(v) for v in entries_invariant(b).values() if v}
        )
    )

    def count_types(table: MarksMatrix) -> Counter:
        return Counter(
            tuple(vector.multiplicity(value) for value in values)
            for vector in axis_multisets(table, internal_axis)
        )

    in_a, in_b = count_types(a), count_types(b)
    keys = sorted(set(in_a) | set(in_b), key=lambda counts: (-sum(counts), counts))
    return ComparisonTable(
        internal_axis=internal_axis,
        values=values,
        label_a=a.label,
        label_b=b.label,
        rows=tuple(
            ComparisonRow(value_counts=key, count_in_a=in_a[key], count_in_b=in_b[key])
            for key in keys
        ),
    )
