from dataclasses import dataclass

from tomkit.marks.table import MarksMatrix
from tomkit.multiset import (
    Multiset,
    columns_invariant,
    entries_invariant,
    ms_from_sequence,
    rows_invariant,
)

FINGERPRINT_COMPONENTS = ("entries", "rows", "columns", "class_order_profile")


@dataclass(frozen=True)
class Fingerprint:
    """Permutation invariants of a marks matrix; unequal fingerprints refute isomorphism"""

    entries: Multiset
    rows: Multiset
    columns: Multiset
    class_order_profile: Multiset

    def first_difference(self, other: "Fingerprint") -> str | None:
        for component in FINGERPRINT_COMPONENTS:
            if getattr(self, component) != getattr(other, component):
                return component
        return None


def fingerprint(table: MarksMatrix) -> Fingerprint:
    return Fingerprint(
        entries=entries_invariant(table),
        rows=rows_invariant(table),
        columns=columns_invariant(table),
        class_order_profile=ms_from_sequence(table.class_orders),
    )
