from tomkit.report.comparison_report import ReportFormat, render_comparison
from tomkit.report.entry_table import (
    EntryTable,
    build_entry_table,
    render_entry_table,
    render_pairs,
)
from tomkit.report.invariants_report import OracleCheck, render_invariants
from tomkit.report.verify_report import PairVerdict, VerifySummary, render_verify

__all__ = [
    "EntryTable",
    "OracleCheck",
    "PairVerdict",
    "ReportFormat",
    "VerifySummary",
    "build_entry_table",
    "render_comparison",
    "render_entry_table",
    "render_invariants",
    "render_pairs",
    "render_verify",
]
