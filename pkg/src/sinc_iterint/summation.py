"""Compensated summation used by every quadrature sum in the package."""

from __future__ import annotations

from typing import Iterable


class CompensatedSum:
    """Running Kahan-Babuska (Neumaier) sum.

    The order of :meth:`add` calls is part of the result; callers add terms
    in ascending index order so that results are reproducible.
    """

    __slots__ = ("_sum", "_comp")

    def __init__(self) -> None:
        self._sum = 0.0
        self._comp = 0.0

    def add(self, value: float) -> None:
        s = self._sum
        t = s + value
        if abs(s) >= abs(value):
            self._comp += (s - t) + value
        else:
            self._comp += (value - t) + s
        self._sum = t

    @property
    def value(self) -> float:
        return self._sum + self._comp


def compensated_sum(values: Iterable[float]) -> float:
    acc = CompensatedSum()
    for v in values:
        acc.add(v)
    return acc.value
