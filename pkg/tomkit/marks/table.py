"""Table of marks of a finite group.

entries[i][j] = |Fix_{U_i}(G/U_j)|: row index is the acting class
representative, column index is the coset space.
"""

import time
from dataclasses import dataclass
from typing import Literal, Sequence

import numpy as np

from tomkit.exceptions import InputError
from tomkit.group.finite_group import FiniteGroup
from tomkit.lattice.subgroups import (
    Subgroup,
    SubgroupClass,
    conjugacy_classes_of_subgroups,
    conjugate_mask,
    normalizer_order,
)
from tomkit.tomkit_logger import logger

MARKS_DTYPE = np.int64


@dataclass(frozen=True, eq=False)
class MarksMatrix:
    entries: np.ndarray
    class_orders: tuple[int, ...]
    group_order: int | None = None
    catalog_id: int | None = None

    def __post_init__(self):
        entries = np.array(self.entries, dtype=MARKS_DTYPE)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise InputError(f"A marks matrix must be square, got shape {entries.shape}")
        if len(self.class_orders) != entries.shape[0]:
            raise InputError(
                f"{len(self.class_orders)} class orders for a matrix "
                f"of size {entries.shape[0]}"
            )
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "class_orders", tuple(int(o) for o in self.class_orders))

    @classmethod
    def from_rows(
        cls,
        rows: Sequence[Sequence[int]],
        class_orders: Sequence[int] | None = None,
        group_order: int | None = None,
        catalog_id: int | None = None,
    ) -> "MarksMatrix":
        """Wrap a plain square matrix; class orders default to all ones"""
        n = len(rows)
        entries = np.array(rows, dtype=MARKS_DTYPE).reshape(n, n)
        orders = tuple(class_orders) if class_orders is not None else (1,) * n
        return cls(entries, orders, group_order, catalog_id)

    @property
    def n(self) -> int:
        return int(self.entries.shape[0])

    @property
    def label(self) -> tuple[int, int] | None:
        if self.group_order is None or self.catalog_id is None:
            return None
        return (self.group_order, self.catalog_id)

    def rows(self) -> list[list[int]]:
        return self.entries.tolist()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MarksMatrix):
            return NotImplemented
        return (
            self.class_orders == other.class_orders
            and self.group_order == other.group_order
            and self.catalog_id == other.catalog_id
            and np.array_equal(self.entries, other.entries)
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return (
            f"MarksMatrix(n={self.n}, group_order={self.group_order}, "
            f"catalog_id={self.catalog_id})"
        )

    def validate(self) -> None:
        """Raise InputError unless every table-of-marks invariant holds."""
        entries = self.entries
        orders = np.array(self.class_orders, dtype=MARKS_DTYPE)
        if np.any(np.diff(orders) < 0):
            raise InputError("Class orders are not ascending")
        if np.any(entries < 0):
            raise InputError("Marks must be nonnegative")
        if np.any(np.diagonal(entries) < 1):
            raise InputError("Every diagonal mark must be at least 1")
        if np.any(entries[orders[:, None] > orders[None, :]] != 0):
            raise InputError("A larger subgroup has a nonzero mark on a smaller coset space")
        if self.group_order is None:
            return
        for i in np.flatnonzero(orders == 1):
            if not np.array_equal(entries[i], self.group_order // orders):
                raise InputError("The trivial-subgroup row is not |G| / |U_j|")
        for j in np.flatnonzero(orders == self.group_order):
            if np.any(entries[:, j] != 1):
                raise InputError("The full-group column is not all ones")


def fixed_points_count_by_cosets(group: FiniteGroup, u: Subgroup, v: Subgroup) -> int:
    """Coset-scan oracle: count cosets gV with g⁻¹Ug ⊆ V"""
    cayley, inverse = group.cayley, group.inverse
    v_members = v.elements
    seen = 0
    fixed = 0
    for g in range(group.order):
        if seen >> g & 1:
            continue
        for x in v_members:
            seen |= 1 << cayley[g][x]
        conjugated = conjugate_mask(group, u.members, inverse[g])
        if conjugated & v.members == conjugated:
            fixed += 1
    return fixed


def fixed_points_count(
    group: FiniteGroup,
    u: Subgroup,
    v: Subgroup,
    method: Literal["fast", "oracle"] = "fast",
) -> int:
    """|Fix_U(G/V)|, either by counting conjugates of U inside V or by scanning cosets"""
    u.check_in(group)
    v.check_in(group)
    if method == "oracle":
        return fixed_points_count_by_cosets(group, u, v)
    if v.order % u.order:
        return 0
    conjugates = {conjugate_mask(group, u.members, g) for g in range(group.order)}
    contained = sum(1 for c in conjugates if c & v.members == c)
    return contained * normalizer_order(group, u) // v.order


def _marks_row(source: SubgroupClass, classes: Sequence[SubgroupClass]) -> list[int]:
    conjugates = source.conjugates
    u_order = source.subgroup_order
    row = []
    for target in classes:
        v_order = target.subgroup_order
        if v_order % u_order:
            row.append(0)
            continue
        v = target.representative.members
        contained = 0
        for c in conjugates:
            if c & v == c:
                contained += 1
        row.append(contained * source.normalizer_order // v_order)
    return row


def table_of_marks(
    group: FiniteGroup, classes: Sequence[SubgroupClass] | None = None
) -> MarksMatrix:
    started = time.perf_counter()
    if classes is None:
        classes = conjugacy_classes_of_subgroups(group)
    rows = [_marks_row(source, classes) for source in classes]
    table = MarksMatrix(
        entries=np.array(rows, dtype=MARKS_DTYPE).reshape(len(classes), len(classes)),
        class_orders=tuple(c.subgroup_order for c in classes),
        group_order=group.order,
        catalog_id=group.label[1] if group.label else None,
    )
    table.validate()
    logger.debug(
        f"Table of marks {group.label} with {table.n} classes "
        f"in {time.perf_counter() - started:.2f}s"
    )
    return table


def class_pairs_disagreeing(
    group: FiniteGroup,
    classes: Sequence[SubgroupClass],
    pairs: Sequence[tuple[int, int]],
    table: MarksMatrix | None = None,
) -> list[tuple[int, int]]:
    """Class index pairs where the coset scan disagrees with table, or with the fast
    formula when no table is given"""
    if table is not None and table.n != len(classes):
        raise InputError(f"Table of size {table.n} for {len(classes)} classes")
    rows: dict[int, list[int]] = {}
    bad = []
    for i, j in pairs:
        if i not in rows:
            if table is not None:
                rows[i] = table.entries[i].tolist()
            else:
                rows[i] = _marks_row(classes[i], classes)
        oracle = fixed_points_count_by_cosets(
            group, classes[i].representative, classes[j].representative
        )
        if rows[i][j] != oracle:
            bad.append((i, j))
    return bad


__all__ = [
    "MarksMatrix",
    "fixed_points_count",
    "fixed_points_count_by_cosets",
    "table_of_marks",
    "class_pairs_disagreeing",
]
