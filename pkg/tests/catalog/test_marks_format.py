import numpy as np
import pytest

from tomkit.catalog import read_marks, write_marks
from tomkit.exceptions import MarksFormatError
from tomkit.marks import MarksMatrix, table_of_marks


def test_s3_text(s3_group):
    text = write_marks(table_of_marks(s3_group))
    assert text == (
        "tom 6 1 4\n"
        "orders 1 2 3 6\n"
        "row 0:6 1:3 2:2 3:1\n"
        "row 1:1 3:1\n"
        "row 2:2 3:1\n"
        "row 3:1\n"
    )


def test_read_restores_the_table(bundled_repository):
    for record in bundled_repository.records(12):
        table = table_of_marks(record.build())
        assert read_marks(write_marks(table)) == table


def test_unlabelled_table():
    table = MarksMatrix.from_rows([[0, 0], [0, 0]])
    text = write_marks(table)
    assert text.splitlines()[0] == "tom - - 2"
    restored = read_marks(text)
    assert restored.label is None
    assert np.array_equal(restored.entries, table.entries)


@pytest.mark.parametrize(
    "text",
    [
        "",
        "tam 2 1 2\n",
        "tom 2 1\n",
        "tom 2 1 x\n",
        "tom 2 1 -1\n",
        "tom 2 1 2\norders 1 2\nrow 0:2 1:1\n",
        "tom 2 1 2\norders 1\nrow 0:2 1:1\nrow 1:1\n",
        "tom 2 1 2\norders 2 1\nrow 0:2 1:1\nrow 1:1\n",
        "tom 2 1 2\norders 1 2\nrow 1:1 0:2\nrow 1:1\n",
        "tom 2 1 2\norders 1 2\nrow 0:2 2:1\nrow 1:1\n",
        "tom 2 1 2\norders 1 2\nrow 0:2 1:0\nrow 1:1\n",
        "tom 2 1 2\norders 1 2\nrow 0=2\nrow 1:1\n",
        "tom 2 1 2\norders 1 2\ncol 0:2\nrow 1:1\n",
    ],
)
def test_malformed_marks(text):
    with pytest.raises(MarksFormatError):
        read_marks(text)
