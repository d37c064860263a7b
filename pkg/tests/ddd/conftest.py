"""Shared Value Object fixtures for DDD tests."""

from tomkit.ddd import ValueObject


def _validate_even(value: int) -> None:
    if value % 2:
        raise ValueError("Value must be even")
    return None


Degree = ValueObject(int, lambda v: abs(v), name="Degree")
GeneratorText = ValueObject(str, lambda v: " ".join(v.split()), name="GeneratorText")
EvenOrder = ValueObject(int, _validate_even, name="EvenOrder")
ClassOrders = ValueObject(tuple, lambda v: tuple(sorted(v)), name="ClassOrders")
