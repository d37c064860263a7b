"""Small-group catalog format v1.

    # comment
    group <order> <catalog_id>
    gen <img_0> <img_1> ... <img_{d-1}>
    ...
    end

Images are 0-based; the degree is the token count and every generator of a
group shares it. Catalog ids follow the positions of GAP's
AllSmallGroups(order), so numbering matches the published tables.
"""

from typing import Sequence

from pydantic import BaseModel, ConfigDict

from tomkit.exceptions import (
    CatalogSyntaxError,
    CatalogValidationError,
    InputError,
    ResourceLimitExceeded,
)
from tomkit.group.finite_group import FiniteGroup, build_group, close_generators
from tomkit.group.permutation import Permutation


class GroupRecord(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    order: int
    catalog_id: int
    degree: int
    generators: tuple[Permutation, ...]

    @property
    def label(self) -> tuple[int, int]:
        return (self.order, self.catalog_id)

    def build(self, bound: int | None = None) -> FiniteGroup:
        return build_group(self.generators, label=self.label, bound=bound)


def _ints(tokens: Sequence[str], line_number: int) -> list[int]:
    try:
        return [int(token) for token in tokens]
    except ValueError:
        raise CatalogSyntaxError(f"Expected integers, got {' '.join(tokens)!r}", line_number)


def _close_record(
    header: tuple[int, int, int],
    gens: list[Permutation],
    seen: set[tuple[int, int]],
    bound: int | None,
) -> GroupRecord:
    order, catalog_id, line_number = header
    if not gens:
        raise CatalogSyntaxError(
            f"Group ({order}, {catalog_id}) has no generators", line_number
        )
    if (order, catalog_id) in seen:
        raise CatalogValidationError(
            f"Duplicate catalog entry ({order}, {catalog_id})", line_number
        )
    try:
        size = len(close_generators(gens, bound))
    except ResourceLimitExceeded as error:
        raise CatalogValidationError(f"Group ({order}, {catalog_id}): {error}", line_number)
    if size != order:
        raise CatalogValidationError(
            f"Group ({order}, {catalog_id}) generates {size} elements, declared {order}",
            line_number,
        )
    seen.add((order, catalog_id))
    return GroupRecord(
        order=order, catalog_id=catalog_id, degree=gens[0].degree, generators=tuple(gens)
    )


def parse_catalog(text: str, bound: int | None = None) -> list[GroupRecord]:
    """Parse and eagerly validate every record, keeping file order"""
    records: list[GroupRecord] = []
    seen: set[tuple[int, int]] = set()
    header: tuple[int, int, int] | None = None
    gens: list[Permutation] = []

    for line_number, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        keyword, arguments = tokens[0], tokens[1:]

        if header is None:
            if keyword != "group" or len(arguments) != 2:
                raise CatalogSyntaxError(
                    f"Expected 'group <order> <id>', got {raw!r}", line_number
                )
            order, catalog_id = _ints(arguments, line_number)
            if order < 1 or catalog_id < 1:
                raise CatalogSyntaxError("Order and catalog id must be positive", line_number)
            header, gens = (order, catalog_id, line_number), []
        elif keyword == "gen":
            try:
                permutation = Permutation.from_images(_ints(arguments, line_number))
            except InputError as error:
                raise CatalogSyntaxError(str(error), line_number)
            if gens and permutation.degree != gens[0].degree:
                raise CatalogValidationError(
                    f"degree {permutation.degree} differs from "
                    f"degree {gens[0].degree} of the previous generators",
                    line_number,
                )
            gens.append(permutation)
        elif keyword == "end" and not arguments:
            records.append(_close_record(header, gens, seen, bound))
            header = None
        else:
            raise CatalogSyntaxError(f"Unexpected line {raw!r}", line_number)

    if header is not None:
        raise CatalogSyntaxError(
            f"Group ({header[0]}, {header[1]}) is not terminated", header[2]
        )
    return records


def write_catalog(records: Sequence[GroupRecord]) -> str:
    lines = []
    for record in records:
        lines.append(f"group {record.order} {record.catalog_id}")
        lines.extend("gen " + " ".join(str(x) for x in g.images) for g in record.generators)
        lines.append("end")
    return "".join(line + "\n" for line in lines)
