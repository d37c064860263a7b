"""Exact decision of table-of-marks isomorphism.

A and B are isomorphic iff some permutation π has a_ij = b_π(i)π(j) for all
i, j. Candidate maps are found by individualization and refinement of a
joint coloring of the class indices of both tables; every candidate is
checked entrywise before it is returned.
"""

import itertools
from collections import Counter
from typing import Hashable, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict

from tomkit.compare.fingerprint import Fingerprint, fingerprint
from tomkit.marks.table import MarksMatrix
from tomkit.multiset import column_multisets, row_multisets
from tomkit.tomkit_logger import logger

BRUTEFORCE_SIZE_LIMIT = 8


class IsoVerdict(BaseModel):
    model_config = ConfigDict(frozen=True)

    isomorphic: bool
    witness: tuple[int, ...] | None = None
    certificate: str | None = None


def witness_holds(a: MarksMatrix, b: MarksMatrix, pi: Sequence[int]) -> bool:
    """a_ij = b_π(i)π(j) everywhere and π keeps subgroup orders"""
    if a.n != b.n or sorted(pi) != list(range(a.n)):
        return False
    if any(a.class_orders[i] != b.class_orders[pi[i]] for i in range(a.n)):
        return False
    index = np.asarray(pi, dtype=np.intp)
    return bool(np.array_equal(a.entries, b.entries[np.ix_(index, index)]))


def _renumber(
    signatures_a: Sequence[Hashable], signatures_b: Sequence[Hashable]
) -> tuple[np.ndarray, np.ndarray]:
    """Joint stable renumbering: colors are ranks of the sorted distinct signatures"""
    distinct = sorted(set(signatures_a) | set(signatures_b))
    ranks = {signature: rank for rank, signature in enumerate(distinct)}
    return (
        np.array([ranks[s] for s in signatures_a], dtype=np.int64),
        np.array([ranks[s] for s in signatures_b], dtype=np.int64),
    )


class _Refiner:
    """Joint color refinement of the class indices of two tables"""

    def __init__(self, a: MarksMatrix, b: MarksMatrix):
        values, inverse = np.unique(
            np.concatenate([a.entries.ravel(), b.entries.ravel()]), return_inverse=True
        )
        n = a.n
        self.n = n
        self.base = max(len(values), 1)
        self.a = inverse[: n * n].reshape(n, n).astype(np.int64)
        self.b = inverse[n * n :].reshape(n, n).astype(np.int64)

    def _signatures(self, entries: np.ndarray, colors: np.ndarray) -> list[tuple[int, bytes]]:
        keys = (colors[None, :] * self.base + entries) * self.base + entries.T
        keys.sort(axis=1)
        return [(int(colors[i]), keys[i].tobytes()) for i in range(self.n)]

    def refine(
        self, colors_a: np.ndarray, colors_b: np.ndarray
    ) -> tuple[np.ndarray, np.ndarray] | None:
        """Split colors until stable; None once the two color histograms disagree"""
        distinct = len(np.unique(colors_a))
        while True:
            colors_a, colors_b = _renumber(
                self._signatures(self.a, colors_a), self._signatures(self.b, colors_b)
            )
            if not np.array_equal(
                np.bincount(colors_a, minlength=2 * self.n),
                np.bincount(colors_b, minlength=2 * self.n),
            ):
                return None
            refined = len(np.unique(colors_a))
            if refined == distinct:
                return colors_a, colors_b
            distinct = refined


def _initial_colors(a: MarksMatrix, b: MarksMatrix) -> tuple[np.ndarray, np.ndarray]:
    def seeds(table: MarksMatrix) -> list[tuple]:
        diagonal = np.diagonal(table.entries).tolist()
        rows, columns = row_multisets(table), column_multisets(table)
        return [
            (table.class_orders[i], diagonal[i], rows[i], columns[i]) for i in range(table.n)
        ]

    return _renumber(seeds(a), seeds(b))


def _search(
    refiner: _Refiner,
    a: MarksMatrix,
    b: MarksMatrix,
    colors_a: np.ndarray,
    colors_b: np.ndarray,
) -> list[int] | None:
    sizes = Counter(colors_a.tolist())
    if len(sizes) == a.n:
        position = {color: j for j, color in enumerate(colors_b.tolist())}
        pi = [position[color] for color in colors_a.tolist()]
        return pi if witness_holds(a, b, pi) else None

    # smallest nontrivial color class, ties by lowest index in a
    v = min(
        (i for i, color in enumerate(colors_a.tolist()) if sizes[color] > 1),
        key=lambda i: (sizes[int(colors_a[i])], i),
    )
    fresh = 2 * a.n
    for w in np.flatnonzero(colors_b == colors_a[v]).tolist():
        individual_a, individual_b = colors_a.copy(), colors_b.copy()
        individual_a[v] = fresh
        individual_b[w] = fresh
        refined = refiner.refine(individual_a, individual_b)
        if refined is None:
            continue
        found = _search(refiner, a, b, *refined)
        if found is not None:
            return found
    return None


def is_isomorphic(
    a: MarksMatrix,
    b: MarksMatrix,
    fingerprints: tuple[Fingerprint, Fingerprint] | None = None,
) -> IsoVerdict:
    """Exact verdict; fingerprints already computed for a and b may be passed in"""
    if a.n != b.n:
        return IsoVerdict(isomorphic=False, certificate="dimension")
    fp_a, fp_b = fingerprints or (fingerprint(a), fingerprint(b))
    difference = fp_a.first_difference(fp_b)
    if difference is not None:
        return IsoVerdict(isomorphic=False, certificate=difference)

    refiner = _Refiner(a, b)
    start = refiner.refine(*_initial_colors(a, b))
    if start is None:
        logger.debug(f"Refinement separates tables {a.label} and {b.label}")
        return IsoVerdict(isomorphic=False)

    pi = _search(refiner, a, b, *start)
    if pi is None:
        return IsoVerdict(isomorphic=False)
    if not witness_holds(a, b, pi):
        raise AssertionError(f"Witness {pi} does not map {a.label} onto {b.label}")
    return IsoVerdict(isomorphic=True, witness=tuple(pi))


def is_isomorphic_bruteforce(a: MarksMatrix, b: MarksMatrix) -> IsoVerdict:
    """Try all n! permutations; reference decider for small matrices"""
    if a.n != b.n:
        return IsoVerdict(isomorphic=False, certificate="dimension")
    if a.n > BRUTEFORCE_SIZE_LIMIT:
        raise ValueError(f"Brute force is limited to size {BRUTEFORCE_SIZE_LIMIT}")
    for pi in itertools.permutations(range(a.n)):
        if witness_holds(a, b, pi):
            return IsoVerdict(isomorphic=True, witness=tuple(pi))
    return IsoVerdict(isomorphic=False)
