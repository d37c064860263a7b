"""Sparse text format of a marks matrix.

    tom <group_order|-> <catalog_id|-> <n>
    orders <o_1> ... <o_n>
    row <j>:<v> ...        (n lines, nonzero entries only, j strictly increasing)
"""

import numpy as np

from tomkit.exceptions import InputError, MarksFormatError
from tomkit.marks.table import MARKS_DTYPE, MarksMatrix


def _optional(token: str) -> int | None:
    return None if token == "-" else int(token)


def write_marks(table: MarksMatrix) -> str:
    head = [
        "tom",
        "-" if table.group_order is None else str(table.group_order),
        "-" if table.catalog_id is None else str(table.catalog_id),
        str(table.n),
    ]
    lines = [" ".join(head), " ".join(["orders", *(str(o) for o in table.class_orders)])]
    for row in table.entries:
        nonzero = np.flatnonzero(row).tolist()
        lines.append(" ".join(["row", *(f"{j}:{int(row[j])}" for j in nonzero)]))
    return "".join(line + "\n" for line in lines)


def read_marks(text: str) -> MarksMatrix:
    lines = text.splitlines()
    if not lines:
        raise MarksFormatError("Empty marks file")

    header = lines[0].split()
    if len(header) != 4 or header[0] != "tom":
        raise MarksFormatError(f"Malformed header {lines[0]!r}")
    try:
        group_order, catalog_id = _optional(header[1]), _optional(header[2])
        n = int(header[3])
    except ValueError:
        raise MarksFormatError(f"Malformed header {lines[0]!r}")
    if n < 0:
        raise MarksFormatError("Negative class count")

    if len(lines) != n + 2:
        raise MarksFormatError(f"Expected {n} rows, found {max(len(lines) - 2, 0)}")
    orders_tokens = lines[1].split()
    if not orders_tokens or orders_tokens[0] != "orders" or len(orders_tokens) != n + 1:
        raise MarksFormatError(f"Malformed orders line {lines[1]!r}")
    try:
        class_orders = tuple(int(token) for token in orders_tokens[1:])
    except ValueError:
        raise MarksFormatError(f"Malformed orders line {lines[1]!r}")
    if any(b < a for a, b in zip(class_orders, class_orders[1:])):
        raise MarksFormatError("Class orders are not ascending")

    entries = np.zeros((n, n), dtype=MARKS_DTYPE)
    for i, line in enumerate(lines[2:]):
        tokens = line.split()
        if not tokens or tokens[0] != "row":
            raise MarksFormatError(f"Malformed row line {line!r}")
        previous = -1
        for token in tokens[1:]:
            try:
                column, value = (int(part) for part in token.split(":"))
            except ValueError:
                raise MarksFormatError(f"Malformed entry {token!r} in row {i}")
            if not previous < column < n or value == 0:
                raise MarksFormatError(f"Entry {token!r} in row {i} is out of order or zero")
            entries[i, column] = value
            previous = column

    try:
        return MarksMatrix(entries, class_orders, group_order, catalog_id)
    except InputError as error:
        raise MarksFormatError(str(error))
