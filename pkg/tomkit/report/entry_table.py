"""Per-group counts of every mark value, one line per catalog group"""

from typing import Sequence

from pydantic import BaseModel, ConfigDict

from tomkit.marks.table import MarksMatrix
from tomkit.multiset import entries_invariant
from tomkit.report.comparison_report import ReportFormat


class EntryLine(BaseModel):
    model_config = ConfigDict(frozen=True)

    catalog_id: int | None
    counts: tuple[int, ...]


class EntryTable(BaseModel):
    model_config = ConfigDict(frozen=True)

    group_order: int | None
    values: tuple[int, ...]
    lines: tuple[EntryLine, ...]


def build_entry_table(tables: Sequence[MarksMatrix]) -> EntryTable:
    """Columns are the nonzero values occurring in any of the tables"""
    invariants = [entries_invariant(table) for table in tables]
    values = tuple(sorted({int(v) for ms in invariants for v in ms.values() if v}))
    lines = tuple(
        EntryLine(
            catalog_id=table.catalog_id,
            counts=tuple(ms.multiplicity(value) for value in values),
        )
        for table, ms in zip(tables, invariants)
    )
    return EntryTable(
        group_order=tables[0].group_order if tables else None,
        values=values,
        lines=lines,
    )


def render_entry_table(table: EntryTable, fmt: ReportFormat = "latex") -> str:
    def group_name(line: EntryLine) -> str:
        return "-" if line.catalog_id is None else str(line.catalog_id)

    if fmt == "tsv":
        lines = ["\t".join(["group", *(f"#{v}" for v in table.values)])]
        for line in table.lines:
            lines.append("\t".join([group_name(line), *(str(c) for c in line.counts)]))
        return "".join(line + "\n" for line in lines)

    layout = "c||" + "|".join("c" for _ in table.values)
    lines = [f"\\begin{{longtable}}{{{layout}}}"]
    lines.append("\t" + " & ".join(["$G$", *(f"\\#{v}" for v in table.values)]) + "\\\\")
    lines.append("\t\\hline")
    for line in table.lines:
        counts = " &".join(str(c) for c in line.counts)
        cells = f"{group_name(line)} &{counts}" if counts else group_name(line)
        lines.append(f"\t{cells}\\\\")
    lines.append("\\end{longtable}")
    return "".join(line + "\n" for line in lines)


def render_pairs(pairs: Sequence[tuple[int, int]], fmt: ReportFormat = "latex") -> str:
    """Catalog id pairs as comment lines, so the output stays a valid table file"""
    mark = "%" if fmt == "latex" else "#"
    lines = [f"{mark} entry-equal pairs: {len(pairs)}"]
    lines += [f"{mark} {a}\t{b}" for a, b in pairs]
    return "".join(line + "\n" for line in lines)
