from tomkit.lattice.oracle import all_subgroups_bruteforce
from tomkit.lattice.subgroups import (
    Subgroup,
    SubgroupClass,
    all_subgroups,
    conjugacy_classes_of_subgroups,
    conjugate_subgroup,
    normalizer_order,
)

__all__ = [
    "Subgroup",
    "SubgroupClass",
    "all_subgroups",
    "all_subgroups_bruteforce",
    "conjugacy_classes_of_subgroups",
    "conjugate_subgroup",
    "normalizer_order",
]
