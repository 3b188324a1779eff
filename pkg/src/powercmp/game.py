"""Weighted voting games, coalitions and the game-rewriting helpers.

A game ``(w_1, ..., w_n; q)`` is stored with 0-based positions internally.
Every public function that takes a player index expects the 1-based index
used in the external interface (CLI, JSON, docstrings).
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .errors import (
    CapacityError,
    EmptyGameError,
    NegativeQuotaError,
    NegativeWeightError,
    PlayerIndexError,
    ValidationError,
)

#: Widest game the bitset-based enumeration paths will touch.
MAX_COALITION_WIDTH = 64


def _as_int(value, what: str) -> int:
    if isinstance(value, bool):
        raise ValidationError(f"{what} must be an integer, got bool")
    try:
        return operator.index(value)
    except TypeError:
        raise ValidationError(f"{what} must be an integer, got {value!r}") from None


@dataclass(frozen=True)
class Game:
    """Weighted voting game ``(w_1, ..., w_n; q)``; immutable and hashable."""

    weights: tuple[int, ...]
    quota: int

    def __post_init__(self):
        weights = tuple(_as_int(w, "weight") for w in self.weights)
        quota = _as_int(self.quota, "quota")
        if not weights:
            raise EmptyGameError("a game needs at least one player")
        for pos, w in enumerate(weights, start=1):
            if w < 0:
                raise NegativeWeightError(f"player {pos} has negative weight {w}")
        if quota < 0:
            raise NegativeQuotaError(f"quota must be nonnegative, got {quota}")
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "quota", quota)

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def total_weight(self) -> int:
        return sum(self.weights)

    def weight(self, i: int) -> int:
        """Weight of player ``i`` (1-based)."""
        return self.weights[check_player(self, i)]

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.weights)) + f";{self.quota})"


def make_game(weights: Sequence[int], quota: int) -> Game:
    return Game(tuple(weights), quota)


def check_player(game: Game, i: int) -> int:
    """Validate a 1-based player index and return the 0-based position."""
    i = _as_int(i, "player index")
    if not 1 <= i <= game.n:
        raise PlayerIndexError(f"player index {i} outside 1..{game.n}")
    return i - 1


def check_enumerable(game: Game, limit: int = MAX_COALITION_WIDTH) -> None:
    if game.n > limit:
        raise CapacityError(
            f"{game.n} players exceed the enumeration capacity of {limit}"
        )


@dataclass(frozen=True)
class Coalition:
    """Subset of the players of an ``n``-player game, stored as a bitmask.

    Bit ``j`` of ``mask`` stands for player ``j + 1``.
    """

    mask: int
    n: int

    def __post_init__(self):
        if self.n < 0 or self.mask < 0 or self.mask >> self.n:
            raise ValidationError(f"mask {self.mask:#x} is not a subset of {self.n} players")

    @classmethod
    def of(cls, members: Iterable[int], n: int) -> "Coalition":
        """Build from 1-based player indices."""
        mask = 0
        for i in members:
            i = _as_int(i, "player index")
            if not 1 <= i <= n:
                raise PlayerIndexError(f"player index {i} outside 1..{n}")
            mask |= 1 << (i - 1)
        return cls(mask, n)

    @classmethod
    def empty(cls, n: int) -> "Coalition":
        return cls(0, n)

    @classmethod
    def grand(cls, n: int) -> "Coalition":
        return cls((1 << n) - 1, n)

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(j + 1 for j in range(self.n) if self.mask >> j & 1)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __contains__(self, i: int) -> bool:
        return 1 <= i <= self.n and bool(self.mask >> (i - 1) & 1)


CoalitionLike = Union[Coalition, Iterable[int]]


def coalition_weight(game: Game, coalition: CoalitionLike) -> int:
    if not isinstance(coalition, Coalition):
        coalition = Coalition.of(coalition, game.n)
    elif coalition.n != game.n:
        raise ValidationError(
            f"coalition is sized for {coalition.n} players, game has {game.n}"
        )
    mask = coalition.mask
    return sum(w for j, w in enumerate(game.weights) if mask >> j & 1)


def succ(game: Game, coalition: CoalitionLike) -> int:
    """1 if the coalition's total weight reaches the quota, else 0."""
    return int(coalition_weight(game, coalition) >= game.quota)


def pad_with_dummies(game: Game, t: int) -> Game:
    """Append ``t`` weight-0 players."""
    if t < 0:
        raise ValidationError("padding count must be nonnegative")
    return Game(game.weights + (0,) * t, game.quota)


def pad_with_quota_players(game: Game, t: int) -> Game:
    """Append ``t`` players of weight ``q``.

    Any coalition containing one of them already wins, so the raw Banzhaf
    value of every original player is untouched.
    """
    if t < 0:
        raise ValidationError("padding count must be nonnegative")
    return Game(game.weights + (game.quota,) * t, game.quota)


def move_player_to_front(game: Game, i: int) -> Game:
    """List player ``i`` first, keeping the relative order of everyone else."""
    pos = check_player(game, i)
    w = game.weights
    return Game((w[pos],) + w[:pos] + w[pos + 1:], game.quota)
