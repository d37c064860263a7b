"""Canonical multisets and the entry/row/column invariants of square matrices.

A multiset is stored as its (value, multiplicity) pairs with strictly
increasing values, so equality is structural equality of the pair sequence.
Values are ints or, recursively, multisets; multisets compare
lexicographically on their pair sequences.
"""

from collections import Counter
from functools import total_ordering
from typing import Any, Iterable, Iterator, Sequence, Union

import numpy as np

from tomkit.exceptions import InputError
from tomkit.marks.table import MarksMatrix

MultisetValue = Union[int, "Multiset"]
MatrixLike = Union[MarksMatrix, np.ndarray, Sequence[Sequence[int]]]


@total_ordering
class Multiset:
    __slots__ = ("pairs", "_hash")

    def __init__(self, pairs: Iterable[tuple[MultisetValue, int]] = ()):
        pairs = tuple((value, int(multiplicity)) for value, multiplicity in pairs)
        for position, (value, multiplicity) in enumerate(pairs):
            if multiplicity < 1:
                raise InputError(f"Multiplicity of {value!r} must be at least 1")
            if position and not pairs[position - 1][0] < value:
                raise InputError("Multiset values must be strictly increasing")
        self.pairs: tuple[tuple[MultisetValue, int], ...] = pairs
        self._hash = hash(pairs)

    @classmethod
    def _canonical(cls, pairs: tuple[tuple[MultisetValue, int], ...]) -> "Multiset":
        instance = cls.__new__(cls)
        instance.pairs = pairs
        instance._hash = hash(pairs)
        return instance

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multiset):
            return NotImplemented
        return self._hash == other._hash and self.pairs == other.pairs

    def __lt__(self, other: "Multiset") -> bool:
        if not isinstance(other, Multiset):
            return NotImplemented
        return self.pairs < other.pairs

    def __hash__(self) -> int:
        return self._hash

    def __iter__(self) -> Iterator[tuple[MultisetValue, int]]:
        return iter(self.pairs)

    def __len__(self) -> int:
        """Number of distinct values"""
        return len(self.pairs)

    def __repr__(self) -> str:
        body = ", ".join(f"{value!r}↦{multiplicity}" for value, multiplicity in self.pairs)
        return "{" + body + "}"

    @property
    def cardinality(self) -> int:
        return sum(multiplicity for _, multiplicity in self.pairs)

    def values(self) -> list[MultisetValue]:
        return [value for value, _ in self.pairs]

    def multiplicity(self, value: MultisetValue) -> int:
        for candidate, multiplicity in self.pairs:
            if candidate == value:
                return multiplicity
        return 0

    def as_dict(self) -> dict[Any, int]:
        return dict(self.pairs)

    def flatten(self) -> "Multiset":
        """Sum the inner multisets of a multiset of multisets, with multiplicity"""
        total: Counter = Counter()
        for inner, multiplicity in self.pairs:
            if not isinstance(inner, Multiset):
                raise InputError("flatten needs a multiset of multisets")
            for value, count in inner.pairs:
                total[value] += count * multiplicity
        return Multiset._canonical(tuple(sorted(total.items())))


def ms_from_sequence(values: Iterable[MultisetValue]) -> Multiset:
    counts = Counter(int(v) if isinstance(v, (int, np.integer)) else v for v in values)
    return Multiset._canonical(tuple(sorted(counts.items())))


def _as_array(matrix: MatrixLike) -> np.ndarray:
    array = matrix.entries if isinstance(matrix, MarksMatrix) else np.asarray(matrix)
    if array.size == 0:
        return array.reshape(0, 0)
    if array.ndim != 2 or array.shape[0] != array.shape[1]:
        raise InputError(f"Expected a square matrix, got shape {array.shape}")
    return array


def _ms_of_vector(vector: np.ndarray) -> Multiset:
    values, counts = np.unique(vector, return_counts=True)
    return Multiset._canonical(tuple(zip(values.tolist(), counts.tolist())))


def entries_invariant(matrix: MatrixLike) -> Multiset:
    return _ms_of_vector(_as_array(matrix).ravel())


def rows_invariant(matrix: MatrixLike) -> Multiset:
    return ms_from_sequence(_ms_of_vector(row) for row in _as_array(matrix))


def columns_invariant(matrix: MatrixLike) -> Multiset:
    return ms_from_sequence(_ms_of_vector(column) for column in _as_array(matrix).T)


def row_multisets(matrix: MatrixLike) -> list[Multiset]:
    """MS(R^i) for every row, in row order"""
    return [_ms_of_vector(row) for row in _as_array(matrix)]


def column_multisets(matrix: MatrixLike) -> list[Multiset]:
    return [_ms_of_vector(column) for column in _as_array(matrix).T]


def permute_matrix(matrix: np.ndarray, pi: Sequence[int], sigma: Sequence[int]) -> np.ndarray:
    """B[i][j] = A[pi[i]][sigma[j]]"""
    return np.asarray(matrix)[np.ix_(list(pi), list(sigma))]


def conjugate_matrix(matrix: np.ndarray, pi: Sequence[int]) -> np.ndarray:
    """B with A[i][j] = B[pi[i]][pi[j]]"""
    array = np.asarray(matrix)
    result = np.empty_like(array)
    index = np.asarray(pi)
    result[np.ix_(index, index)] = array
    return result
