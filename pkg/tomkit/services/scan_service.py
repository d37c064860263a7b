from tomkit.compare.scan import find_equal_entry_pairs
from tomkit.ddd import GroupOrder, WorkerCount
from tomkit.features.marks_features import CmdComputeTables, ResTables
from tomkit.report.comparison_report import ReportFormat
from tomkit.report.entry_table import (
    EntryTable,
    build_entry_table,
    render_entry_table,
    render_pairs,
)
from tomkit.tomkit_abstractions import ApplicationService, DataTransferObject
from tomkit.tomkit_logger import logger


class CmdScanCatalog(DataTransferObject):
    order: GroupOrder
    threads: WorkerCount | None = None
    format: ReportFormat = "latex"


class ResScan(DataTransferObject):
    entry_table: EntryTable
    pairs: list[tuple[int, int]]
    report: str


class ScanCatalogService(ApplicationService[CmdScanCatalog, ResScan]):
    """Entry-value counts of every group of one order, and the pairs they cannot separate"""

    def execute(self, dto: CmdScanCatalog) -> ResScan:
        computed = self.feature_bus.execute(
            CmdComputeTables(order=dto.order, threads=dto.threads), ResTables
        )
        assert computed is not None
        tables = computed.tables
        positions = find_equal_entry_pairs(tables)
        pairs = [(tables[i].catalog_id, tables[j].catalog_id) for i, j in positions]
        logger.info(f"Order {dto.order}: {len(pairs)} entry-equal pair(s)")

        entry_table = build_entry_table(tables)
        report = render_entry_table(entry_table, dto.format) + render_pairs(pairs, dto.format)
        return ResScan(
            entry_table=entry_table, pairs=pairs, report=report  # type: ignore[arg-type]
        )
