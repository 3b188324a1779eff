"""How often is it profitable for players 1 and 2 to merge?  Surveys seeded
random games, grouped by player count.

    python scripts/merge_survey.py --games 2000
"""

import argparse
import random
from collections import Counter

from powercmp.compare import merge_profitability
from powercmp.generate import random_game


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--games", type=int, default=2000)
    ap.add_argument("--max-players", type=int, default=10)
    ap.add_argument("--max-weight", type=int, default=20)
    ap.add_argument("--seed", type=int, default=3)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    seen, profitable = Counter(), Counter()
    for _ in range(args.games):
        g = random_game(rng, 2, args.max_players, args.max_weight)
        seen[g.n] += 1
        profitable[g.n] += merge_profitability(g).strictly_greater
    print(" n   games  profitable")
    for n in sorted(seen):
        print(f"{n:2d} {seen[n]:7d}  {profitable[n] / seen[n]:9.1%}")


if __name__ == "__main__":
    main()
