"""Push random X3C instances through X3C' normalization, the game encoding and
the count recovery, and tabulate the sizes involved.

    python scripts/reduction_roundtrip.py --instances 20
"""

import argparse
import random

from powercmp import oracles
from powercmp.generate import random_x3c
from powercmp.indices import shapley_raw
from powercmp.reductions import normalize_x3c_prime, phi, psi


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--instances", type=int, default=20)
    ap.add_argument("--max-k", type=int, default=2)
    ap.add_argument("--max-m", type=int, default=4)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    print(f"{'3k':>4} {'m':>3} | {'n':>3} {'players':>7} {'quota bits':>10} | {'#X3C':>5} {'SS*':>12} {'psi':>5}")
    bad = 0
    for _ in range(args.instances):
        x = random_x3c(rng, max_k=args.max_k, max_m=args.max_m)
        xp = normalize_x3c_prime(x)
        game = phi(xp)
        count = oracles.count_x3c(x).value
        ss = shapley_raw(game, 1)
        recovered = psi(ss)
        bad += recovered != count
        print(f"{x.universe_size:>4} {x.m:>3} | {xp.size_parameter:>3} {game.n:>7} "
              f"{game.quota.bit_length():>10} | {count:>5} {ss:>12} {recovered:>5}")
    print("all recovered" if not bad else f"{bad} mismatches")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
