"""Permutations on the points 0..d-1, the element encoding of catalog input"""

from dataclasses import dataclass
from typing import Iterable, Sequence

from tomkit.exceptions import InputError


@dataclass(frozen=True, slots=True)
class Permutation:
    """Bijection on {0, ..., degree-1} stored as its image list"""

    images: tuple[int, ...]

    def __post_init__(self):
        degree = len(self.images)
        if degree == 0:
            raise InputError("A permutation needs at least one point")
        if sorted(self.images) != list(range(degree)):
            raise InputError(
                f"Images {list(self.images)} are not a bijection on 0..{degree - 1}"
            )

    @classmethod
    def from_images(cls, images: Iterable[int]) -> "Permutation":
        return cls(tuple(int(x) for x in images))

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Sequence[Sequence[int]]) -> "Permutation":
        """Build from disjoint cycles, e.g. from_cycles(3, [(0, 1, 2)])"""
        images = list(range(degree))
        for cycle in cycles:
            for position, point in enumerate(cycle):
                images[point] = cycle[(position + 1) % len(cycle)]
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def is_identity(self) -> bool:
        return all(point == image for point, image in enumerate(self.images))

    def inverse(self) -> "Permutation":
        inverse_images = [0] * self.degree
        for point, image in enumerate(self.images):
            inverse_images[image] = point
        return Permutation(tuple(inverse_images))

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"


def compose(p: Permutation, q: Permutation) -> Permutation:
    """p after q: result(x) = p(q(x))"""
    if p.degree != q.degree:
        raise InputError(f"Cannot compose permutations of degree {p.degree} and {q.degree}")
    p_images = p.images
    return Permutation(tuple(p_images[x] for x in q.images))
