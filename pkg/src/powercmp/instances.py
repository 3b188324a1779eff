"""Exact-cover-by-3-sets and subset-sum instances."""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Sequence

from .errors import ValidationError


@dataclass(frozen=True)
class X3CInstance:
    """Universe ``{0, ..., 3k-1}`` plus an ordered family of 3-element subsets.

    The family is positional: duplicate sets are distinct members and
    each one may appear in its own exact cover.
    """

    universe_size: int
    sets: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        size = operator.index(self.universe_size)
        if size < 0 or size % 3:
            raise ValidationError(f"universe size must be a nonnegative multiple of 3, got {size}")
        sets = []
        for pos, s in enumerate(self.sets):
            s = tuple(operator.index(e) for e in s)
            if len(s) != 3 or len(set(s)) != 3:
                raise ValidationError(f"set #{pos} must have exactly 3 distinct elements, got {list(s)}")
            if not all(0 <= e < size for e in s):
                raise ValidationError(f"set #{pos} {list(s)} leaves the universe 0..{size - 1}")
            sets.append(s)
        object.__setattr__(self, "universe_size", size)
        object.__setattr__(self, "sets", tuple(sets))

    @classmethod
    def from_sets(cls, universe_size: int, sets: Sequence[Sequence[int]]) -> "X3CInstance":
        return cls(universe_size, tuple(tuple(s) for s in sets))

    @property
    def k(self) -> int:
        return self.universe_size // 3

    @property
    def m(self) -> int:
        return len(self.sets)

    @property
    def at_two_thirds(self) -> bool:
        """True when ``3k = 2m`` (the empty instance qualifies trivially)."""
        return 3 * self.k == 2 * self.m

    @property
    def size_parameter(self) -> int | None:
        """The ``n`` with ``k = 2n`` and ``m = 3n``, or None off the 2/3 ratio."""
        if not self.at_two_thirds:
            return None
        return self.k // 2

    @property
    def is_x3c_prime(self) -> bool:
        """At ratio 2/3 with ``n`` a power of 4."""
        n = self.size_parameter
        return n is not None and is_power_of_four(n)


def is_power_of_four(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0 and (n.bit_length() - 1) % 2 == 0


@dataclass(frozen=True)
class SubsetSumInstance:
    """Vector ``(s_1, ..., s_m; q)`` of nonnegative integers."""

    values: tuple[int, ...]
    target: int

    def __post_init__(self):
        values = tuple(operator.index(v) for v in self.values)
        target = operator.index(self.target)
        if any(v < 0 for v in values) or target < 0:
            raise ValidationError("subset-sum values and target must be nonnegative")
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "target", target)

    @property
    def m(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class CountValue:
    value: int

    def __post_init__(self):
        if self.value < 0:
            raise ValidationError("counts are nonnegative")

    def __int__(self) -> int:
        return self.value
