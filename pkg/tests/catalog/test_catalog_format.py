import pytest

from tomkit.catalog import parse_catalog, write_catalog
from tomkit.exceptions import CatalogSyntaxError, CatalogValidationError

KLEIN_AND_S3 = """
# two groups
group 4 2
gen 1 0 2 3
gen 0 1 3 2   # second generator
end

group 6 1
gen 1 0 2
gen 1 2 0
end
"""


def test_parse_keeps_file_order():
    records = parse_catalog(KLEIN_AND_S3)
    assert [r.label for r in records] == [(4, 2), (6, 1)]
    assert records[0].degree == 4
    assert records[0].generators[1].images == (0, 1, 3, 2)
    assert records[1].build().order == 6


def test_write_then_parse_keeps_records():
    records = parse_catalog(KLEIN_AND_S3)
    assert parse_catalog(write_catalog(records)) == records


@pytest.mark.parametrize(
    "text, line_number",
    [
        ("gen 1 0\n", 1),
        ("group 2\ngen 1 0\nend\n", 1),
        ("group 2 x\n", 1),
        ("group 0 1\n", 1),
        ("group 2 1\n\ngen 1 1\nend\n", 3),
        ("group 2 1\ngen 1 a\nend\n", 2),
        ("group 2 1\nend\n", 1),
        ("group 2 1\ngen 1 0\n", 1),
        ("group 2 1\ngen 1 0\nstop\n", 3),
        ("group 2 1\ngen 1 0\nend extra\n", 3),
    ],
)
def test_syntax_errors_carry_the_line(text, line_number):
    with pytest.raises(CatalogSyntaxError) as error:
        parse_catalog(text)
    assert error.value.line_number == line_number
    assert str(error.value).startswith(f"line {line_number}:")


@pytest.mark.parametrize(
    "text, line_number",
    [
        ("group 3 1\ngen 1 0\nend\n", 1),
        ("group 2 1\ngen 1 0\nend\ngroup 2 1\ngen 1 0\nend\n", 4),
        ("group 2 1\ngen 1 0\ngen 0 2 1\nend\n", 3),
    ],
)
def test_validation_errors_carry_the_line(text, line_number):
    with pytest.raises(CatalogValidationError) as error:
        parse_catalog(text)
    assert error.value.line_number == line_number
    assert str(error.value).startswith(f"line {line_number}:")


def test_closure_bound_is_a_validation_error():
    with pytest.raises(CatalogValidationError, match="bound"):
        parse_catalog("group 6 2\ngen 1 2 3 4 5 0\nend\n", bound=4)
