from tomkit.marks.table import (
    MarksMatrix,
    fixed_points_count,
    fixed_points_count_by_cosets,
    table_of_marks,
)

__all__ = [
    "MarksMatrix",
    "fixed_points_count",
    "fixed_points_count_by_cosets",
    "table_of_marks",
]
