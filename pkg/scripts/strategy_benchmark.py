"""Time the exact index backends on seeded random games.

    python scripts/strategy_benchmark.py --games 50 --max-players 20
"""

import argparse
import random
import time

from powercmp import oracles
from powercmp.generate import random_game
from powercmp.indices import Strategy, shapley_raw

BACKENDS = [Strategy.WEIGHT_DP, Strategy.DEFINITION, Strategy.MEET_IN_MIDDLE]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--games", type=int, default=50)
    ap.add_argument("--min-players", type=int, default=4)
    ap.add_argument("--max-players", type=int, default=20)
    ap.add_argument("--max-weight", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    games = [random_game(rng, args.min_players, args.max_players, args.max_weight)
             for _ in range(args.games)]
    timings = {s: 0.0 for s in BACKENDS}
    for g in games:
        values = set()
        for s in BACKENDS:
            t0 = time.perf_counter()
            values.add(tuple(shapley_raw(g, i, s) for i in range(1, g.n + 1)))
            timings[s] += time.perf_counter() - t0
        if len(values) != 1:
            raise SystemExit(f"backends disagree on {g}")
        if g.n <= oracles.MAX_ENUM_PLAYERS:
            assert values.pop() == tuple(oracles.shapley_raw_enum(g, i) for i in range(1, g.n + 1))

    print(f"{len(games)} games, {args.min_players}..{args.max_players} players, weights <= {args.max_weight}")
    for s, t in timings.items():
        print(f"  {s.value:24s} {t:8.3f} s total  {1e3 * t / len(games):8.2f} ms/game")


if __name__ == "__main__":
    main()
