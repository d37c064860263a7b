"""Comparison tables in the printed longtable shape, or as TSV"""

from typing import Literal

from tomkit.compare.calibration import AxisCalibration
from tomkit.compare.comparison import Axis, ComparisonTable

ReportFormat = Literal["latex", "tsv"]


def _group_name(label: tuple[int, int] | None, fallback: str) -> str:
    return f"G{label[1]}" if label else fallback


def _render_tsv(table: ComparisonTable, heading: str, names: tuple[str, str]) -> list[str]:
    lines = [
        "\t".join(
            [
                *(f"#{v}" for v in table.values),
                f"{heading} in {names[0]}",
                f"{heading} in {names[1]}",
                "differs",
            ]
        )
    ]
    for row in table.rows:
        numbers = [*row.value_counts, row.count_in_a, row.count_in_b, int(row.differs)]
        lines.append("\t".join(str(x) for x in numbers))
    return lines


def _render_latex(table: ComparisonTable, heading: str, names: tuple[str, str]) -> list[str]:
    layout = "|".join("c" for _ in table.values) + "||c|c"
    header = " & ".join(
        [
            *(f"\\#{v}" for v in table.values),
            f"{heading} in ${names[0]}$",
            f"{heading} in ${names[1]}$",
        ]
    )
    lines = [f"\\begin{{longtable}}{{{layout}}}", f"\t{header}\\\\"]
    for row in table.rows:
        counts = " &".join(str(c) for c in row.value_counts)
        if row.differs:
            tail = f"\\underline{{{row.count_in_a}}} & \\underline{{{row.count_in_b}}}"
        else:
            tail = f"{row.count_in_a} &{row.count_in_b}"
        lines.append(f"\t{counts} &{tail}\\\\")
    lines.append("\\end{longtable}")
    return lines


def render_comparison(
    table: ComparisonTable,
    printed_axis: Axis,
    calibration: AxisCalibration,
    fmt: ReportFormat = "latex",
) -> str:
    """Render one comparison table; the first line records the axis orientation.

    Both formats carry the same numbers: value columns, counts per group, and
    (TSV) an explicit flag or (LaTeX) underlined counts where the groups differ.
    """
    heading = printed_axis.capitalize()
    names = (_group_name(table.label_a, "A"), _group_name(table.label_b, "B"))
    if fmt == "tsv":
        lines = [f"# orientation: {calibration.describe()}"]
        lines += _render_tsv(table, heading, names)
    else:
        lines = [f"% orientation: {calibration.describe()}"]
        lines += _render_latex(table, heading, names)
    return "".join(line + "\n" for line in lines)
