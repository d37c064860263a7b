from tomkit.group.finite_group import FiniteGroup, build_group, close_generators
from tomkit.group.permutation import Permutation, compose

__all__ = ["FiniteGroup", "Permutation", "build_group", "close_generators", "compose"]
