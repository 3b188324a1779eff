"""Seeded random games and X3C instances.

Uses :class:`random.Random` (Mersenne Twister) so a seed reproduces the same
instance on every platform and Python version that keeps that generator.
"""

from __future__ import annotations

import random

from .game import Game
from .instances import X3CInstance


def random_game(rng: random.Random, min_players: int = 1, max_players: int = 16,
                max_weight: int = 100) -> Game:
    """Weights uniform in ``0..max_weight``, quota uniform in ``0..sum(w)``."""
    n = rng.randint(min_players, max_players)
    weights = [rng.randint(0, max_weight) for _ in range(n)]
    return Game(tuple(weights), rng.randint(0, sum(weights)))


def random_x3c(rng: random.Random, max_k: int = 4, max_m: int = 8,
               min_k: int = 1, min_m: int = 1, plant: float = 0.5) -> X3CInstance:
    """Random family of 3-sets over ``3k`` elements.

    With probability ``plant`` a random exact cover is planted first (when
    it fits in ``m``), so that instances with solutions are common.
    """
    k = rng.randint(min_k, max_k)
    m = rng.randint(max(min_m, 0), max_m) if k else 0
    universe = list(range(3 * k))
    sets: list[tuple[int, int, int]] = []
    if k and k <= m and rng.random() < plant:
        rng.shuffle(universe)
        sets.extend(tuple(sorted(universe[3 * j:3 * j + 3])) for j in range(k))
    while len(sets) < m:
        sets.append(tuple(sorted(rng.sample(range(3 * k), 3))))
    rng.shuffle(sets)
    return X3CInstance(3 * k, tuple(sets))
