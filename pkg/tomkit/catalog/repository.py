"""Catalog lookup by order and the on-disk cache of computed tables"""

import os

from tomkit.catalog.catalog_format import GroupRecord, parse_catalog
from tomkit.catalog.marks_format import read_marks, write_marks
from tomkit.exceptions import InputError, MarksFormatError, UnknownGroup
from tomkit.group.finite_group import FiniteGroup
from tomkit.marks.table import MarksMatrix
from tomkit.tomkit_logger import logger


class CatalogRepository:
    """Catalog files live in one directory as order_<n>.txt; a single file also works"""

    def __init__(self, catalog_dir: str, closure_bound: int | None = None):
        self.catalog_dir = catalog_dir
        self.closure_bound = closure_bound
        self._records: dict[int, list[GroupRecord]] = {}

    def catalog_path(self, order: int) -> str:
        if os.path.isfile(self.catalog_dir):
            return self.catalog_dir
        return os.path.join(self.catalog_dir, f"order_{int(order)}.txt")

    def has_order(self, order: int) -> bool:
        if not os.path.isfile(self.catalog_path(order)):
            return False
        return bool(self.records(order))

    def records(self, order: int) -> list[GroupRecord]:
        if order not in self._records:
            path = self.catalog_path(order)
            if not os.path.isfile(path):
                raise UnknownGroup(f"No catalog for order {order} at {path}")
            with open(path, encoding="utf-8") as handle:
                loaded = parse_catalog(handle.read(), self.closure_bound)
            self._records[order] = [record for record in loaded if record.order == order]
            count = len(self._records[order])
            logger.info(f"Loaded {count} groups of order {order} from {path}")
        return self._records[order]

    def record(self, order: int, catalog_id: int) -> GroupRecord:
        for record in self.records(order):
            if record.catalog_id == catalog_id:
                return record
        raise UnknownGroup(f"Group ({order}, {catalog_id}) is not in the catalog")

    def group(self, order: int, catalog_id: int) -> FiniteGroup:
        return self.record(order, catalog_id).build(self.closure_bound)


class MarksCache:
    def __init__(self, cache_dir: str):
        self.cache_dir = cache_dir

    def path(self, order: int, catalog_id: int) -> str:
        return os.path.join(self.cache_dir, f"tom_{int(order)}_{int(catalog_id)}.txt")

    def load(self, order: int, catalog_id: int) -> MarksMatrix | None:
        """Cached table of (order, catalog_id); None when absent, stale or corrupt"""
        path = self.path(order, catalog_id)
        if not os.path.isfile(path):
            return None
        try:
            with open(path, encoding="utf-8") as handle:
                table = read_marks(handle.read())
            if table.label != (order, catalog_id):
                raise MarksFormatError(f"labelled {table.label}")
            table.validate()
        except (MarksFormatError, InputError) as error:
            logger.error(f"Ignoring cached table {path}: {error}")
            return None
        return table

    def store(self, table: MarksMatrix) -> str:
        if table.label is None:
            raise ValueError("Only catalog tables can be cached")
        os.makedirs(self.cache_dir, exist_ok=True)
        path = self.path(*table.label)
        with open(path, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(write_marks(table))
        return path
