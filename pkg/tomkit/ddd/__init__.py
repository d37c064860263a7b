from tomkit.ddd.value_object import (
    CatalogId,
    GroupOrder,
    ValueObject,
    WorkerCount,
    require_positive,
)

__all__ = ["CatalogId", "GroupOrder", "ValueObject", "WorkerCount", "require_positive"]
