"""Finite groups materialized as Cayley tables over element indices"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from tomkit.exceptions import InputError, ResourceLimitExceeded
from tomkit.group.permutation import Permutation, compose
from tomkit.tomkit_conf import settings

IDENTITY = 0
EXHAUSTIVE_ASSOCIATIVITY_LIMIT = 64


@dataclass(frozen=True)
class FiniteGroup:
    """Immutable group on the indices 0..order-1, identity pinned at 0.

    cayley[a][b] is the index of a·b, inverse[a] the index of a⁻¹.
    """

    cayley: tuple[tuple[int, ...], ...]
    inverse: tuple[int, ...]
    label: tuple[int, int] | None = None
    elements: tuple[Permutation, ...] = field(default=(), repr=False, compare=False)

    @property
    def order(self) -> int:
        return len(self.cayley)

    @property
    def identity(self) -> int:
        return IDENTITY

    def multiply(self, a: int, b: int) -> int:
        return self.cayley[a][b]

    @cached_property
    def conjugation(self) -> tuple[tuple[int, ...], ...]:
        """conjugation[g][h] = g·h·g⁻¹"""
        cayley, inverse = self.cayley, self.inverse
        return tuple(
            tuple(cayley[cayley[g][h]][inverse[g]] for h in range(self.order))
            for g in range(self.order)
        )

    @cached_property
    def is_abelian(self) -> bool:
        cayley = self.cayley
        return all(
            cayley[a][b] == cayley[b][a]
            for a in range(self.order)
            for b in range(a + 1, self.order)
        )

    def element_order(self, a: int) -> int:
        power, exponent = a, 1
        while power != IDENTITY:
            power = self.cayley[power][a]
            exponent += 1
        return exponent

    def check_invariants(self, associativity_samples: int = 20_000, seed: int = 0) -> None:
        """Raise InputError unless identity, inverse, Latin square and associativity hold."""
        n = self.order
        cayley, inverse = self.cayley, self.inverse
        full = set(range(n))
        for a in range(n):
            if cayley[IDENTITY][a] != a or cayley[a][IDENTITY] != a:
                raise InputError(f"Index {IDENTITY} is not an identity for element {a}")
            if cayley[a][inverse[a]] != IDENTITY:
                raise InputError(f"inverse[{a}] = {inverse[a]} is not an inverse")
            if set(cayley[a]) != full or {cayley[b][a] for b in range(n)} != full:
                raise InputError(f"Row or column {a} of the Cayley table is not a bijection")

        triples: Iterable[Sequence[int]]
        if n <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT:
            triples = ((a, b, c) for a in range(n) for b in range(n) for c in range(n))
        else:
            rng = np.random.default_rng(seed)
            triples = rng.integers(0, n, size=(associativity_samples, 3)).tolist()
        for a, b, c in triples:
            if cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]]:
                raise InputError(f"Associativity fails for ({a}, {b}, {c})")


def close_generators(
    gens: Sequence[Permutation], bound: int | None = None
) -> list[Permutation]:
    """All products of gens, breadth first from the identity, gens in the given order"""
    if not gens:
        raise InputError("At least one generator is required")
    degree = gens[0].degree
    if any(g.degree != degree for g in gens):
        raise InputError("All generators must share one degree")
    bound = settings.closure_bound if bound is None else bound

    identity = Permutation.identity(degree)
    seen = {identity.images}
    elements = [identity]
    cursor = 0
    while cursor < len(elements):
        current = elements[cursor]
        cursor += 1
        for g in gens:
            product = compose(current, g)
            if product.images in seen:
                continue
            seen.add(product.images)
            elements.append(product)
            if len(elements) > bound:
                raise ResourceLimitExceeded(
                    f"Closure exceeds the configured bound of {bound} elements"
                )
    return elements


def build_group(
    gens: Sequence[Permutation],
    label: tuple[int, int] | None = None,
    bound: int | None = None,
) -> FiniteGroup:
    """Materialize the group generated by gens; a·b is the composition a∘b"""
    elements = close_generators(gens, bound)
    index = {element.images: position for position, element in enumerate(elements)}

    cayley = tuple(
        tuple(index[tuple(a.images[x] for x in b.images)] for b in elements) for a in elements
    )
    inverse = tuple(row.index(IDENTITY) for row in cayley)
    return FiniteGroup(cayley=cayley, inverse=inverse, label=label, elements=tuple(elements))
