"""All-subsets subgroup oracle for small groups"""

from tomkit.exceptions import InputError
from tomkit.group.finite_group import IDENTITY, FiniteGroup
from tomkit.lattice.subgroups import Subgroup, iter_bits

BRUTEFORCE_ORDER_LIMIT = 16


def all_subgroups_bruteforce(group: FiniteGroup) -> list[Subgroup]:
    """Test every subset containing the identity for closure under multiplication.

    A nonempty finite subset closed under multiplication is a subgroup.
    """
    if group.order > BRUTEFORCE_ORDER_LIMIT:
        raise InputError(
            f"Brute-force enumeration is limited to order {BRUTEFORCE_ORDER_LIMIT}, "
            f"got {group.order}"
        )
    cayley = group.cayley
    others = [x for x in range(group.order) if x != IDENTITY]
    found = []
    for selector in range(1 << len(others)):
        mask = 1 << IDENTITY
        for position, element in enumerate(others):
            if selector >> position & 1:
                mask |= 1 << element
        members = list(iter_bits(mask))
        if all(mask >> cayley[a][b] & 1 for a in members for b in members):
            found.append(Subgroup.from_mask(mask))
    return sorted(found, key=lambda subgroup: subgroup.elements)
