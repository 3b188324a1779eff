"""Brute-force reference implementations.

These evaluate the defining sums literally and serve as ground truth for
the fast paths in :mod:`powercmp.indices` and :mod:`powercmp.reductions`.
Each oracle has a hard capacity bound; exceeding it raises
:class:`CapacityError` instead of silently degrading.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import factorial
from typing import Iterator

import numpy as np

from .errors import CapacityError
from .game import Coalition, Game, check_player, succ
from .instances import CountValue, SubsetSumInstance, X3CInstance

MAX_X3C_UNIVERSE = 96
MAX_X3C_SETS = 64
MAX_SUBSETSUM_ITEMS = 24
MAX_ENUM_PLAYERS = 24
MAX_PERM_PLAYERS = 10

_INT64_SAFE = 1 << 62


def count_x3c(x: X3CInstance) -> CountValue:
    """Number of subfamilies of exactly ``k`` sets whose union is the universe.

    Backtracks on the lowest uncovered element, so every exact cover is
    reached along exactly one branch.
    """
    if x.universe_size > MAX_X3C_UNIVERSE or x.m > MAX_X3C_SETS:
        raise CapacityError(
            f"X3C oracle handles |B| <= {MAX_X3C_UNIVERSE}, |S| <= {MAX_X3C_SETS}; "
            f"got |B| = {x.universe_size}, |S| = {x.m}"
        )
    full = (1 << x.universe_size) - 1
    masks = [sum(1 << e for e in s) for s in x.sets]
    containing: list[list[int]] = [[] for _ in range(x.universe_size)]
    for mask in masks:
        for e in range(x.universe_size):
            if mask >> e & 1:
                containing[e].append(mask)

    @lru_cache(maxsize=None)
    def covers(covered: int) -> int:
        if covered == full:
            return 1
        free = ~covered & full
        lowest = (free & -free).bit_length() - 1
        return sum(covers(covered | m) for m in containing[lowest] if not m & covered)

    total = covers(0)
    covers.cache_clear()
    return CountValue(total)


def _subset_sums(values) -> np.ndarray:
    """Sum of every subset, indexed by bitmask (bit ``j`` selects ``values[j]``)."""
    fits = sum(values) < _INT64_SAFE
    sums = np.zeros(1, dtype=np.int64 if fits else object)
    for v in values:
        sums = np.concatenate([sums, sums + v])
    return sums


def subsetsum_solutions(inst: SubsetSumInstance) -> Iterator[tuple[int, ...]]:
    """Yield every subset (as 0-based positions) whose values sum to the target."""
    if inst.m > MAX_SUBSETSUM_ITEMS:
        raise CapacityError(f"subset-sum oracle handles at most {MAX_SUBSETSUM_ITEMS} items")
    sums = _subset_sums(inst.values)
    for mask in np.flatnonzero(sums == inst.target):
        mask = int(mask)
        yield tuple(j for j in range(inst.m) if mask >> j & 1)


def count_subsetsum(inst: SubsetSumInstance) -> CountValue:
    """Subsets of positions summing to the target; the empty subset sums to 0."""
    if inst.m > MAX_SUBSETSUM_ITEMS:
        raise CapacityError(f"subset-sum oracle handles at most {MAX_SUBSETSUM_ITEMS} items")
    return CountValue(int(np.count_nonzero(_subset_sums(inst.values) == inst.target)))


def _swing_counts_by_size(game: Game, i: int) -> list[int]:
    """Entry ``s`` counts the ``S ⊆ N - {i}`` of size ``s`` where ``i`` swings."""
    pos = check_player(game, i)
    n = game.n
    if n > MAX_ENUM_PLAYERS:
        raise CapacityError(f"enumeration oracle handles at most {MAX_ENUM_PLAYERS} players")
    counts = [0] * n
    if game.total_weight < _INT64_SAFE:
        masks = np.arange(1 << n, dtype=np.int64)
        without_i = masks[(masks >> pos) & 1 == 0]
        sums = _subset_sums(game.weights)
        lose = sums[without_i] < game.quota
        win_with_i = sums[without_i | (1 << pos)] >= game.quota
        swing_masks = without_i[lose & win_with_i]
        sizes = np.zeros(len(swing_masks), dtype=np.int64)
        for j in range(n):
            sizes += (swing_masks >> j) & 1
        for s, c in enumerate(np.bincount(sizes, minlength=n)):
            counts[s] += int(c)
        return counts
    bit = 1 << pos
    for mask in range(1 << n):
        if mask & bit:
            continue
        s = Coalition(mask, n)
        if succ(game, Coalition(mask | bit, n)) - succ(game, s):
            counts[len(s)] += 1
    return counts


def banzhaf_raw_enum(game: Game, i: int) -> int:
    """``sum over S ⊆ N-{i} of succ(S ∪ {i}) - succ(S)``."""
    return sum(_swing_counts_by_size(game, i))


def shapley_raw_enum(game: Game, i: int) -> int:
    """``sum over S ⊆ N-{i} of |S|!(n-|S|-1)! (succ(S ∪ {i}) - succ(S))``."""
    n = game.n
    return sum(c * factorial(s) * factorial(n - s - 1)
               for s, c in enumerate(_swing_counts_by_size(game, i)))


@lru_cache(maxsize=256)
def pivot_counts(game: Game) -> tuple[int, ...]:
    """For each player, the number of arrival orders in which it is pivotal."""
    if game.n > MAX_PERM_PLAYERS:
        raise CapacityError(f"permutation oracle handles at most {MAX_PERM_PLAYERS} players")
    counts = [0] * game.n
    w, q = game.weights, game.quota
    for order in itertools.permutations(range(game.n)):
        running = 0
        for p in order:
            # q = 0: the empty prefix already wins, so nobody is pivotal.
            if running >= q:
                break
            running += w[p]
            if running >= q:
                counts[p] += 1
                break
    return tuple(counts)


def shapley_raw_perm(game: Game, i: int) -> int:
    """Count of permutations in which player ``i`` is pivotal."""
    return pivot_counts(game)[check_player(game, i)]
