import numpy as np
import pytest

from tomkit.exceptions import InputError
from tomkit.group import Permutation, build_group
from tomkit.lattice import Subgroup, conjugacy_classes_of_subgroups
from tomkit.lattice.subgroups import generated_subgroup
from tomkit.marks import MarksMatrix, fixed_points_count, table_of_marks
from tomkit.marks.table import class_pairs_disagreeing
from tests.fixtures import BUNDLED_ORDERS

S3_MARKS = [[6, 3, 2, 1], [0, 1, 0, 1], [0, 0, 2, 1], [0, 0, 0, 1]]


def test_c2_table(c2_group):
    table = table_of_marks(c2_group)
    assert table.rows() == [[2, 1], [0, 1]]
    assert table.class_orders == (1, 2)
    assert table.label == (2, 1)


def test_s3_table(s3_group):
    table = table_of_marks(s3_group)
    assert table.rows() == S3_MARKS
    assert table.class_orders == (1, 2, 3, 6)


def test_trivial_table():
    table = table_of_marks(build_group([Permutation.identity(1)]))
    assert table.rows() == [[1]]
    assert table.label is None


def test_fixed_points_examples(s3_group):
    trivial = Subgroup.from_elements([0])
    full = Subgroup.from_elements(range(6))
    transposition = next(a for a in range(6) if s3_group.element_order(a) == 2)
    h = generated_subgroup(s3_group, [transposition])

    for method in ("fast", "oracle"):
        assert fixed_points_count(s3_group, trivial, h, method) == 3
        assert fixed_points_count(s3_group, h, full, method) == 1
        assert fixed_points_count(s3_group, h, h, method) == 1


def test_fixed_points_rejects_non_subgroups(s3_group):
    with pytest.raises(InputError):
        fixed_points_count(
            s3_group, Subgroup.from_elements([0, 1, 2]), Subgroup.from_elements([0])
        )


@pytest.mark.parametrize("order", BUNDLED_ORDERS)
def test_fast_formula_agrees_with_coset_scan(bundled_repository, order):
    for record in bundled_repository.records(order):
        group = record.build()
        classes = conjugacy_classes_of_subgroups(group)
        pairs = [(i, j) for i in range(len(classes)) for j in range(len(classes))]
        assert class_pairs_disagreeing(group, classes, pairs) == [], record.label
        table = table_of_marks(group, classes)
        assert class_pairs_disagreeing(group, classes, pairs, table) == [], record.label


@pytest.mark.parametrize("order", BUNDLED_ORDERS)
def test_table_invariants(bundled_repository, order):
    for record in bundled_repository.records(order):
        table = table_of_marks(record.build())
        table.validate()
        entries = table.entries
        assert np.array_equal(entries, np.triu(entries))
        assert entries[0, 0] == order
        assert table.label == record.label


def test_marks_matrix_is_read_only():
    table = MarksMatrix.from_rows([[2, 1], [0, 1]], [1, 2], 2, 1)
    with pytest.raises(ValueError):
        table.entries[0, 0] = 5


def test_marks_matrix_equality():
    a = MarksMatrix.from_rows([[2, 1], [0, 1]], [1, 2], 2, 1)
    assert a == MarksMatrix.from_rows([[2, 1], [0, 1]], [1, 2], 2, 1)
    assert a != MarksMatrix.from_rows([[2, 1], [0, 1]], [1, 2], 2, 2)
    assert a != MarksMatrix.from_rows([[2, 1], [0, 2]], [1, 2], 2, 1)


def test_marks_matrix_shape_checks():
    with pytest.raises(InputError):
        MarksMatrix(np.zeros((2, 3)), (1, 1))
    with pytest.raises(InputError):
        MarksMatrix(np.zeros((2, 2)), (1,))


@pytest.mark.parametrize(
    "rows, orders",
    [
        ([[2, 1], [0, 1]], [2, 1]),
        ([[2, 1], [1, 1]], [1, 2]),
        ([[2, 1], [0, 0]], [1, 2]),
        ([[2, 2], [0, 1]], [1, 2]),
        ([[3, 1], [0, 1]], [1, 2]),
    ],
)
def test_validate_rejects(rows, orders):
    with pytest.raises(InputError):
        MarksMatrix.from_rows(rows, orders, group_order=2).validate()
