from tomkit.catalog.catalog_format import GroupRecord, parse_catalog, write_catalog
from tomkit.catalog.marks_format import read_marks, write_marks
from tomkit.catalog.repository import CatalogRepository, MarksCache

__all__ = [
    "CatalogRepository",
    "GroupRecord",
    "MarksCache",
    "parse_catalog",
    "read_marks",
    "write_catalog",
    "write_marks",
]
