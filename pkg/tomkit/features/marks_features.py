"""Catalog loading and table-of-marks computation"""

import time
from concurrent.futures import ProcessPoolExecutor

from tomkit.catalog.catalog_format import GroupRecord
from tomkit.catalog.repository import CatalogRepository, MarksCache
from tomkit.ddd import CatalogId, GroupOrder, WorkerCount
from tomkit.lattice.subgroups import conjugacy_classes_of_subgroups
from tomkit.marks.table import MarksMatrix, table_of_marks
from tomkit.tomkit_abstractions import DataTransferObject, Feature
from tomkit.tomkit_conf import TomkitSettings
from tomkit.tomkit_logger import logger


def compute_record_table(
    record: GroupRecord, closure_bound: int, subgroup_bound: int
) -> MarksMatrix:
    """Worker entry point; bounds are explicit since workers do not share settings"""
    group = record.build(closure_bound)
    return table_of_marks(group, conjugacy_classes_of_subgroups(group, subgroup_bound))


class CmdLoadCatalog(DataTransferObject):
    order: GroupOrder


class ResCatalog(DataTransferObject):
    order: int
    records: list[GroupRecord]


class LoadCatalogFeature(Feature[CmdLoadCatalog, ResCatalog]):
    catalog_repository: CatalogRepository

    def execute(self, dto: CmdLoadCatalog) -> ResCatalog:
        return ResCatalog(order=dto.order, records=self.catalog_repository.records(dto.order))


class CmdComputeMarks(DataTransferObject):
    order: GroupOrder
    catalog_id: CatalogId
    use_cache: bool = True


class ResMarks(DataTransferObject):
    table: MarksMatrix
    cache_path: str | None = None
    from_cache: bool = False


class ComputeMarksFeature(Feature[CmdComputeMarks, ResMarks]):
    catalog_repository: CatalogRepository
    marks_cache: MarksCache
    settings: TomkitSettings

    def execute(self, dto: CmdComputeMarks) -> ResMarks:
        if dto.use_cache:
            cached = self.marks_cache.load(dto.order, dto.catalog_id)
            if cached is not None:
                logger.debug(f"Table ({dto.order}, {dto.catalog_id}) read from the cache")
                return ResMarks(
                    table=cached,
                    cache_path=self.marks_cache.path(dto.order, dto.catalog_id),
                    from_cache=True,
                )

        record = self.catalog_repository.record(dto.order, dto.catalog_id)
        table = compute_record_table(
            record, self.settings.closure_bound, self.settings.subgroup_bound
        )
        path = self.marks_cache.store(table) if dto.use_cache else None
        return ResMarks(table=table, cache_path=path)


class CmdComputeTables(DataTransferObject):
    order: GroupOrder
    threads: WorkerCount | None = None
    use_cache: bool = True


class ResTables(DataTransferObject):
    order: int
    tables: list[MarksMatrix]


class ComputeTablesFeature(Feature[CmdComputeTables, ResTables]):
    """Tables of every catalog group of one order, in catalog order.

    Missing tables are computed one group per worker process; the result does
    not depend on the worker count.
    """

    catalog_repository: CatalogRepository
    marks_cache: MarksCache
    settings: TomkitSettings

    def execute(self, dto: CmdComputeTables) -> ResTables:
        started = time.perf_counter()
        records = self.catalog_repository.records(dto.order)
        tables: dict[int, MarksMatrix] = {}
        if dto.use_cache:
            for record in records:
                cached = self.marks_cache.load(record.order, record.catalog_id)
                if cached is not None:
                    tables[record.catalog_id] = cached

        missing = [record for record in records if record.catalog_id not in tables]
        workers = min(dto.threads or 1, len(missing))
        bounds = (self.settings.closure_bound, self.settings.subgroup_bound)
        logger.info(
            f"Order {dto.order}: {len(records)} groups, {len(tables)} cached, "
            f"computing {len(missing)} with {max(workers, 1)} worker(s)"
        )

        if workers > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                computed = list(
                    pool.map(
                        compute_record_table,
                        missing,
                        [bounds[0]] * len(missing),
                        [bounds[1]] * len(missing),
                    )
                )
        else:
            computed = [compute_record_table(record, *bounds) for record in missing]

        for table in computed:
            assert table.catalog_id is not None
            tables[table.catalog_id] = table
            if dto.use_cache:
                self.marks_cache.store(table)

        logger.info(
            f"Order {dto.order}: tables ready in {time.perf_counter() - started:.2f}s"
        )
        return ResTables(
            order=dto.order, tables=[tables[record.catalog_id] for record in records]
        )
