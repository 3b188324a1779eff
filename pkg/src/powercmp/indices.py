"""Raw and normalized Banzhaf and Shapley-Shubik indices.

Every exact backend reduces to the same question: among subsets ``S`` of
the other players, how many (per size ``|S|``) have total weight in the
swing window ``[q - w_i, q - 1]``?  They differ only in how they count.

* ``weight-dp``: pseudo-polynomial table over sums ``0 .. q-1``.
* ``definition-enumeration``: every subset sum of the other players.
* ``meet-in-the-middle``: two half enumerations joined by binary search;
  exact for arbitrarily large weights, which is what the reduction games need.
* ``permutation-enumeration`` (Shapley-Shubik only): arrival orders,
  pruned once the pivot is known.
"""

from __future__ import annotations

import enum
import math
from bisect import bisect_left
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import CapacityError, ValidationError
from .game import Game, check_enumerable, check_player

DP_MAX_QUOTA = 10**6
ENUM_MAX_PLAYERS = 25
MITM_MAX_PLAYERS = 40
PERM_MAX_PLAYERS = 10
DEFAULT_DELTA = 0.01

_INT64_SAFE = 1 << 62
_CHUNK = 1 << 14


class Strategy(enum.Enum):
    AUTO = "auto"
    WEIGHT_DP = "weight-dp"
    DEFINITION = "definition-enumeration"
    MEET_IN_MIDDLE = "meet-in-the-middle"
    PERMUTATION = "permutation-enumeration"


class Kind(enum.Enum):
    BANZHAF = "banzhaf"
    SHAPLEY = "shapley"


_factorials = [1]


def factorial(k: int) -> int:
    while len(_factorials) <= k:
        _factorials.append(_factorials[-1] * len(_factorials))
    return _factorials[k]


@dataclass(frozen=True)
class IndexValue:
    """Raw index value over its scale (``2^(n-1)`` or ``n!``)."""

    raw: int
    scale: int

    def __post_init__(self):
        if self.raw < 0 or self.scale <= 0:
            raise ValidationError("index values need raw >= 0 and scale > 0")

    @property
    def normalized(self) -> Fraction:
        return Fraction(self.raw, self.scale)


@dataclass(frozen=True)
class Estimate:
    point: Fraction
    half_width: Fraction
    samples: int
    seed: int
    delta: float = DEFAULT_DELTA

    def covers(self, value) -> bool:
        return abs(self.point - Fraction(value)) <= self.half_width


def index_scale(kind: Kind, n: int) -> int:
    return 2 ** (n - 1) if Kind(kind) is Kind.BANZHAF else factorial(n)


# -- exact backends: each returns swing counts per coalition size -----------


def _window(game: Game, pos: int) -> tuple[int, int]:
    return max(0, game.quota - game.weights[pos]), game.quota - 1


def _others(game: Game, pos: int) -> list[int]:
    return [w for j, w in enumerate(game.weights) if j != pos]


def _dp_counts(game: Game, pos: int, by_size: bool) -> list[int]:
    q = game.quota
    n = game.n
    rows = n if by_size else 1
    if q == 0:
        return [0] * rows
    lo, hi = _window(game, pos)
    dtype = np.int64 if n < 62 else object
    table = np.zeros((rows, q), dtype=dtype)
    table[0, 0] = 1
    for w in _others(game, pos):
        # Sums reaching q can never sit in the window; drop them.
        if w >= q:
            continue
        if by_size:
            table[1:, w:] = table[1:, w:] + table[:-1, :q - w]
        else:
            table[:, w:] = table[:, w:] + table[:, :q - w]
    return [int(x) for x in table[:, lo:hi + 1].sum(axis=1)]


def _enum_counts(game: Game, pos: int) -> list[int]:
    if game.n > ENUM_MAX_PLAYERS:
        raise CapacityError(
            f"definition-enumeration handles at most {ENUM_MAX_PLAYERS} players, got {game.n}"
        )
    others = _others(game, pos)
    fits = sum(others) < _INT64_SAFE
    sums = np.zeros(1, dtype=np.int64 if fits else object)
    sizes = np.zeros(1, dtype=np.int8)
    for w in others:
        sums = np.concatenate([sums, sums + w])
        sizes = np.concatenate([sizes, sizes + 1])
    lo, hi = _window(game, pos)
    hit = (sums >= lo) & (sums <= hi)
    return [int(c) for c in np.bincount(sizes[hit].astype(np.int64), minlength=game.n)]


def _half_sums(values: Sequence[int]) -> list[list[int]]:
    """Subset sums of ``values`` grouped by subset size."""
    by_size: list[list[int]] = [[0]] + [[] for _ in values]
    for w in values:
        for s in range(len(values), 0, -1):
            by_size[s].extend(x + w for x in by_size[s - 1])
    return by_size


def _mitm_counts(game: Game, pos: int) -> list[int]:
    if game.n > MITM_MAX_PLAYERS:
        raise CapacityError(
            f"meet-in-the-middle handles at most {MITM_MAX_PLAYERS} players, got {game.n}"
        )
    others = _others(game, pos)
    half = len(others) // 2
    left = _half_sums(others[:half])
    right = [sorted(r) for r in _half_sums(others[half:])]
    lo, hi = _window(game, pos)
    counts = [0] * game.n
    if lo > hi:
        return counts
    for s_left, sums in enumerate(left):
        for a in sums:
            if a > hi:
                continue
            for s_right, bs in enumerate(right):
                if bs:
                    c = bisect_left(bs, hi - a + 1) - bisect_left(bs, lo - a)
                    if c:
                        counts[s_left + s_right] += c
    return counts


def _perm_shapley(game: Game, pos: int) -> int:
    """Pivot count for ``pos`` over all arrival orders.

    The search walks prefixes; once a prefix wins (or ``pos`` has arrived
    without being pivotal), all completions of that prefix are settled at
    once, contributing ``(n - len(prefix))!`` orders.
    """
    n, q, w = game.n, game.quota, game.weights
    if n > PERM_MAX_PLAYERS:
        raise CapacityError(
            f"permutation-enumeration handles at most {PERM_MAX_PLAYERS} players, got {n}"
        )
    if q == 0:
        return 0

    def walk(remaining: int, total: int, depth: int) -> int:
        pivots = 0
        for j in range(n):
            if not remaining >> j & 1:
                continue
            reached = total + w[j]
            if reached >= q:
                if j == pos:
                    pivots += factorial(n - depth - 1)
            elif j != pos:
                pivots += walk(remaining & ~(1 << j), reached, depth + 1)
        return pivots

    return walk((1 << n) - 1, 0, 0)


def _resolve(strategy, game: Game, kind: Kind) -> Strategy:
    strategy = Strategy(strategy)
    if strategy is Strategy.PERMUTATION and kind is not Kind.SHAPLEY:
        raise ValidationError("permutation-enumeration only computes Shapley-Shubik")
    if strategy is not Strategy.AUTO:
        return strategy
    if game.quota <= DP_MAX_QUOTA:
        return Strategy.WEIGHT_DP
    if game.n <= MITM_MAX_PLAYERS:
        return Strategy.MEET_IN_MIDDLE
    raise CapacityError(
        f"no exact strategy for {game.n} players with quota {game.quota}; "
        "use the sampling estimators"
    )


def _swing_counts(game: Game, pos: int, strategy: Strategy, by_size: bool) -> list[int]:
    if strategy is Strategy.WEIGHT_DP:
        return _dp_counts(game, pos, by_size)
    check_enumerable(game)
    if strategy is Strategy.DEFINITION:
        return _enum_counts(game, pos)
    if strategy is Strategy.MEET_IN_MIDDLE:
        return _mitm_counts(game, pos)
    raise ValidationError(f"strategy {strategy.value} does not produce swing counts")


def banzhaf_raw(game: Game, i: int, strategy=Strategy.AUTO) -> int:
    """Number of coalitions of the other players for which player ``i`` swings."""
    pos = check_player(game, i)
    strategy = _resolve(strategy, game, Kind.BANZHAF)
    return sum(_swing_counts(game, pos, strategy, by_size=False))


def shapley_raw(game: Game, i: int, strategy=Strategy.AUTO) -> int:
    """Raw Shapley-Shubik value: swings weighted by ``|S|!(n-|S|-1)!``."""
    pos = check_player(game, i)
    strategy = _resolve(strategy, game, Kind.SHAPLEY)
    if strategy is Strategy.PERMUTATION:
        return _perm_shapley(game, pos)
    n = game.n
    counts = _swing_counts(game, pos, strategy, by_size=True)
    return sum(c * factorial(s) * factorial(n - s - 1) for s, c in enumerate(counts) if c)


def raw_index(game: Game, i: int, kind, strategy=Strategy.AUTO) -> int:
    kind = Kind(kind)
    if kind is Kind.BANZHAF:
        return banzhaf_raw(game, i, strategy)
    return shapley_raw(game, i, strategy)


def banzhaf(game: Game, i: int, strategy=Strategy.AUTO) -> IndexValue:
    return IndexValue(banzhaf_raw(game, i, strategy), index_scale(Kind.BANZHAF, game.n))


def shapley(game: Game, i: int, strategy=Strategy.AUTO) -> IndexValue:
    return IndexValue(shapley_raw(game, i, strategy), index_scale(Kind.SHAPLEY, game.n))


def power_index(game: Game, i: int, kind, strategy=Strategy.AUTO) -> IndexValue:
    kind = Kind(kind)
    return IndexValue(raw_index(game, i, kind, strategy), index_scale(kind, game.n))


# -- sampling -----------------------------------------------------------------


def hoeffding_half_width(samples: int, delta: float = DEFAULT_DELTA) -> Fraction:
    """``sqrt(ln(2/delta) / (2 samples))``, rounded up to 12 decimal places."""
    hw = math.sqrt(math.log(2 / delta) / (2 * samples))
    return Fraction(math.ceil(hw * 10**12), 10**12)


def _estimate(game: Game, i: int, samples: int, seed: int, delta: float,
              workers: int, kind: Kind) -> Estimate:
    pos = check_player(game, i)
    if samples < 1:
        raise ValidationError("samples must be at least 1")
    if not 0 <= seed < 2**64:
        raise ValidationError("seed must be an unsigned 64-bit value")
    if not 0 < delta < 1:
        raise ValidationError("delta must lie in (0, 1)")
    n, q = game.n, game.quota
    fits = game.total_weight < _INT64_SAFE
    weights = np.array(game.weights, dtype=np.int64 if fits else object)
    w_i = game.weights[pos]
    sizes = [_CHUNK] * (samples // _CHUNK)
    if samples % _CHUNK:
        sizes.append(samples % _CHUNK)
    # One child stream per fixed-size chunk, so the worker count never
    # changes which random numbers a sample sees.
    streams = np.random.SeedSequence(seed).spawn(len(sizes))

    def run(args) -> int:
        size, stream = args
        rng = np.random.default_rng(stream)
        if kind is Kind.BANZHAF:
            present = rng.integers(0, 2, size=(size, n), dtype=np.int8).astype(bool)
            present[:, pos] = False
        else:
            keys = rng.random((size, n))
            present = keys < keys[:, pos:pos + 1]
        before = present.astype(weights.dtype) @ weights
        return int(np.count_nonzero((before < q) & (before + w_i >= q)))

    jobs = list(zip(sizes, streams))
    if workers > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            hits = sum(pool.map(run, jobs))
    else:
        hits = sum(map(run, jobs))
    return Estimate(Fraction(hits, samples), hoeffding_half_width(samples, delta),
                    samples, seed, delta)


def estimate_banzhaf(game: Game, i: int, samples: int, seed: int,
                     delta: float = DEFAULT_DELTA, workers: int = 1) -> Estimate:
    """Fraction of uniformly random coalitions of the others in which ``i`` swings."""
    return _estimate(game, i, samples, seed, delta, workers, Kind.BANZHAF)


def estimate_shapley(game: Game, i: int, samples: int, seed: int,
                     delta: float = DEFAULT_DELTA, workers: int = 1) -> Estimate:
    """Fraction of uniformly random arrival orders in which ``i`` is pivotal."""
    return _estimate(game, i, samples, seed, delta, workers, Kind.SHAPLEY)
