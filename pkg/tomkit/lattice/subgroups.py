"""Subgroup enumeration and conjugacy classes of subgroups.

Member-sets are Python ints used as bitsets over the element indices of the
owning group: bit k is set iff element k belongs to the subgroup.
"""

import time
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from tomkit.exceptions import InputError, ResourceLimitExceeded
from tomkit.group.finite_group import IDENTITY, FiniteGroup
from tomkit.tomkit_conf import settings
from tomkit.tomkit_logger import logger


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Sequence[int]) -> int:
    mask = 0
    for index in indices:
        mask |= 1 << index
    return mask


@dataclass(frozen=True)
class Subgroup:
    members: int
    order: int

    @classmethod
    def from_mask(cls, mask: int) -> "Subgroup":
        return cls(members=mask, order=mask.bit_count())

    @classmethod
    def from_elements(cls, indices: Sequence[int]) -> "Subgroup":
        return cls.from_mask(mask_of(indices))

    @cached_property
    def elements(self) -> tuple[int, ...]:
        """Member indices ascending; also the lexicographic sort key"""
        return tuple(iter_bits(self.members))

    def __contains__(self, index: int) -> bool:
        return bool(self.members >> index & 1)

    def is_subset_of(self, other: "Subgroup") -> bool:
        return self.members & other.members == self.members

    def check_in(self, group: FiniteGroup) -> None:
        """Raise InputError unless this is a subgroup of group."""
        if self.members >> group.order:
            raise InputError(f"Subgroup has indices beyond the group order {group.order}")
        if IDENTITY not in self:
            raise InputError("Subgroup does not contain the identity")
        if group.order % self.order:
            raise InputError(f"Order {self.order} does not divide {group.order}")
        cayley, inverse = group.cayley, group.inverse
        for a in self.elements:
            if inverse[a] not in self:
                raise InputError(f"Subgroup is not closed under inverse at {a}")
            row = cayley[a]
            for b in self.elements:
                if row[b] not in self:
                    raise InputError(f"Subgroup is not closed under product ({a}, {b})")


@dataclass(frozen=True)
class SubgroupClass:
    """One conjugacy class of subgroups, represented by its lexicographically least member"""

    representative: Subgroup
    class_size: int
    subgroup_order: int
    normalizer_order: int
    conjugates: tuple[int, ...]


def _closure(group: FiniteGroup, mask: int, seeds: Sequence[int], gens: Sequence[int]) -> int:
    """Close mask under right multiplication by gens, starting from seeds"""
    cayley = group.cayley
    queue = list(seeds)
    for x in queue:
        row = cayley[x]
        for s in gens:
            y = row[s]
            if not mask >> y & 1:
                mask |= 1 << y
                queue.append(y)
    return mask


def generated_subgroup(group: FiniteGroup, gens: Sequence[int]) -> Subgroup:
    return Subgroup.from_mask(_closure(group, 1 << IDENTITY, [IDENTITY], gens))


def all_subgroups(group: FiniteGroup, bound: int | None = None) -> list[Subgroup]:
    """Every subgroup of group, sorted lexicographically by member-set.

    Seeds with the cyclic subgroups and joins each new subgroup H with every
    element g outside H until no new member-set appears. ⟨H, g⟩ = ⟨H, hg⟩, so
    only one g per right coset Hg is tried.
    """
    bound = settings.subgroup_bound if bound is None else bound
    started = time.perf_counter()
    order = group.order
    cayley = group.cayley

    generators: dict[int, tuple[int, ...]] = {}
    frontier: list[int] = []

    def _record(mask: int, gens: tuple[int, ...]) -> None:
        generators[mask] = gens
        frontier.append(mask)
        if len(generators) > bound:
            raise ResourceLimitExceeded(
                f"Subgroup count exceeds the configured bound of {bound}"
            )

    for g in range(order):
        mask = _closure(group, 1 << IDENTITY, [IDENTITY], (g,))
        if mask not in generators:
            _record(mask, (g,))

    while frontier:
        current, frontier = frontier, []
        for mask in current:
            gens = generators[mask]
            members = list(iter_bits(mask))
            covered = mask
            for g in range(order):
                if covered >> g & 1:
                    continue
                for h in members:
                    covered |= 1 << cayley[h][g]
                joined = _closure(group, mask, members, gens + (g,))
                if joined not in generators:
                    _record(joined, gens + (g,))

    subgroups = sorted((Subgroup.from_mask(mask) for mask in generators), key=_lex_key)
    logger.debug(
        f"Enumerated {len(subgroups)} subgroups of a group of order {order} "
        f"in {time.perf_counter() - started:.2f}s"
    )
    return subgroups


def _lex_key(subgroup: Subgroup) -> tuple[int, ...]:
    return subgroup.elements


def conjugate_mask(group: FiniteGroup, mask: int, g: int) -> int:
    by_g = group.conjugation[g]
    result = 0
    for h in iter_bits(mask):
        result |= 1 << by_g[h]
    return result


def conjugate_subgroup(group: FiniteGroup, subgroup: Subgroup, g: int) -> Subgroup:
    """The subgroup g·H·g⁻¹"""
    if not 0 <= g < group.order:
        raise InputError(f"Element index {g} out of range for order {group.order}")
    return Subgroup(members=conjugate_mask(group, subgroup.members, g), order=subgroup.order)


def normalizer_order(group: FiniteGroup, subgroup: Subgroup) -> int:
    if group.is_abelian:
        return group.order
    mask = subgroup.members
    return sum(1 for g in range(group.order) if conjugate_mask(group, mask, g) == mask)


def conjugacy_classes_of_subgroups(
    group: FiniteGroup, bound: int | None = None
) -> list[SubgroupClass]:
    """Classes ordered by subgroup order, ties by the representative's member-set"""
    started = time.perf_counter()
    subgroups = all_subgroups(group, bound)
    assigned: set[int] = set()
    classes: list[SubgroupClass] = []

    for subgroup in subgroups:
        if subgroup.members in assigned:
            continue
        if group.is_abelian:
            conjugates = [subgroup.members]
        else:
            orbit = {conjugate_mask(group, subgroup.members, g) for g in range(group.order)}
            conjugates = sorted(orbit, key=lambda mask: tuple(iter_bits(mask)))
        assigned.update(conjugates)
        classes.append(
            SubgroupClass(
                representative=subgroup,
                class_size=len(conjugates),
                subgroup_order=subgroup.order,
                normalizer_order=group.order // len(conjugates),
                conjugates=tuple(conjugates),
            )
        )

    classes.sort(key=lambda c: (c.subgroup_order, c.representative.elements))
    logger.debug(
        f"Partitioned {len(subgroups)} subgroups into {len(classes)} classes "
        f"in {time.perf_counter() - started:.2f}s"
    )
    return classes
