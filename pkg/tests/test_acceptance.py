"""Exit criteria for the toolkit.

Every check is exact (zero tolerance).  Each test records one PASS/FAIL
line, printed in the "acceptance criteria" section of the pytest summary.
Sub-millisecond budgets are measured as the best of several warm runs.
"""

import itertools
import random
import time
from fractions import Fraction
from math import factorial

import pytest

from powercmp import oracles
from powercmp.compare import merge_profitability
from powercmp.game import Coalition, Game, make_game, pad_with_dummies, pad_with_quota_players, succ
from powercmp.generate import random_game, random_x3c
from powercmp.indices import (
    Strategy,
    banzhaf,
    banzhaf_raw,
    estimate_banzhaf,
    shapley,
    shapley_raw,
)
from powercmp.instances import X3CInstance
from powercmp.reductions import (
    cmp_ss,
    equalize_pair,
    normalize_two_thirds,
    normalize_x3c_prime,
    phi,
    psi,
    r1,
    r2,
    transform_g,
    transform_h_dprime,
    transform_h_prime,
    x3c_to_subsetsum,
)

GAME_SEED = 20080129
PARITY_SEED = 6
X3C_SEED = 5
PAIR_SEED = 10
PADDING_SEED = 4


def best_of(fn, repeats=5):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


@pytest.fixture(scope="module")
def game_corpus():
    rng = random.Random(GAME_SEED)
    return [random_game(rng, 1, 16, 100) for _ in range(500)]


@pytest.fixture(scope="module")
def parity_corpus():
    rng = random.Random(PARITY_SEED)
    return [random_game(rng, 4, 16, 100) for _ in range(500)]


@pytest.fixture(scope="module")
def x3c_corpus():
    rng = random.Random(X3C_SEED)
    return [random_x3c(rng, max_k=4, max_m=8) for _ in range(200)]


def test_01_equal_power_example(report):
    g = make_game([8, 7, 2], 9)
    values = [(banzhaf(g, i).normalized, shapley(g, i).normalized) for i in (1, 2, 3)]
    elapsed = best_of(lambda: [(banzhaf(g, i), shapley(g, i)) for i in (1, 2, 3)])
    ok = values == [(Fraction(1, 2), Fraction(1, 3))] * 3 and elapsed < 1e-3
    report("1 equal-power example (8,7,2;9)", ok, f"{elapsed * 1e3:.3f} ms")
    assert values == [(Fraction(1, 2), Fraction(1, 3))] * 3
    assert elapsed < 1e-3


def test_02_strategy_equivalence(report, game_corpus):
    t0 = time.perf_counter()
    mismatches = 0
    perm_checked = 0
    for g in game_corpus:
        for i in range(1, g.n + 1):
            bz = banzhaf_raw(g, i, Strategy.WEIGHT_DP)
            ss = shapley_raw(g, i, Strategy.WEIGHT_DP)
            mismatches += bz != oracles.banzhaf_raw_enum(g, i)
            mismatches += ss != oracles.shapley_raw_enum(g, i)
            if g.n <= 8:
                perm_checked += 1
                mismatches += ss != oracles.shapley_raw_perm(g, i)
    elapsed = time.perf_counter() - t0
    assert max(g.n for g in game_corpus) == 16 and perm_checked > 0
    report("2 weight-DP = enumeration = permutation oracles (500 games)",
           mismatches == 0 and elapsed < 60, f"{mismatches} mismatches, {elapsed:.1f} s")
    assert mismatches == 0
    assert elapsed < 60


def test_03_parity(report, parity_corpus):
    odd = sum(shapley_raw(g, i) % 2 for g in parity_corpus for i in range(1, g.n + 1))
    over_six = 0
    small_games = 0
    for n in (1, 2, 3):
        for weights in itertools.product(range(5), repeat=n):
            for q in range(5):
                g = Game(weights, q)
                small_games += 1
                over_six += sum(shapley_raw(g, i) > 6 for i in range(1, n + 1))
    assert small_games == 5**2 + 5**3 + 5**4
    report("3 SS* even for n >= 4; SS* <= 6 for n <= 3", odd == 0 and over_six == 0,
           f"{odd} odd, {over_six} above 6 over {small_games} small games")
    assert odd == 0 and over_six == 0


def test_04_efficiency(report, game_corpus, parity_corpus):
    failures = 0
    for g in game_corpus + parity_corpus:
        total = sum(shapley_raw(g, i) for i in range(1, g.n + 1))
        grand, empty = succ(g, Coalition.grand(g.n)), succ(g, Coalition.empty(g.n))
        failures += total != factorial(g.n) * (grand - empty)
    report("4 efficiency identity", failures == 0, f"{failures} failures")
    assert failures == 0


def test_05_count_preservation(report, x3c_corpus):
    t0 = time.perf_counter()
    failures = []
    for idx, x in enumerate(x3c_corpus):
        c = oracles.count_x3c(x).value
        partner = x3c_corpus[(idx + 1) % len(x3c_corpus)]
        two_thirds = normalize_two_thirds(x)
        if 3 * two_thirds.k != 2 * two_thirds.m:
            failures.append((idx, "ratio"))
        a, b = equalize_pair(x, partner)
        outputs = {
            "g": transform_g(x),
            "h'": transform_h_prime(x),
            "h''": transform_h_dprime(x),
            "two-thirds": two_thirds,
            "x3c-prime": normalize_x3c_prime(x),
            "equalize": a,
        }
        for name, out in outputs.items():
            if oracles.count_x3c(out).value != c:
                failures.append((idx, name))
        if oracles.count_x3c(b).value != oracles.count_x3c(partner).value:
            failures.append((idx, "equalize partner"))
    elapsed = time.perf_counter() - t0
    solvable = sum(oracles.count_x3c(x).value > 0 for x in x3c_corpus)
    report("5 #X3C preserved by g, h', h'', 2/3, X3C', equalize; 3k = 2m",
           not failures and elapsed < 60,
           f"{len(failures)} failures, {solvable}/200 solvable, {elapsed:.1f} s")
    assert not failures
    assert elapsed < 60


def test_06_parsimony_and_cardinality(report, x3c_corpus):
    failures = 0
    for x in x3c_corpus:
        inst = x3c_to_subsetsum(x)
        failures += oracles.count_subsetsum(inst) != oracles.count_x3c(x)
        failures += sum(len(s) != x.k for s in oracles.subsetsum_solutions(inst))
    report("6 parsimony and k-element solutions", failures == 0, f"{failures} failures")
    assert failures == 0


def test_07_round_trip(report):
    t0 = time.perf_counter()
    canonical = X3CInstance.from_sets(6, [[0, 1, 2], [3, 4, 5], [0, 3, 4]])
    g = phi(canonical)
    canonical_ok = (g == Game((1, 21, 1344, 321), 1366) and shapley_raw(g, 1) == 2 and psi(2) == 1)

    rng = random.Random(7)
    instances = [canonical] + [random_x3c(rng, min_k=2, max_k=2, min_m=3, max_m=3) for _ in range(40)]
    instances += [normalize_x3c_prime(X3CInstance(0, ())),
                  normalize_x3c_prime(X3CInstance.from_sets(3, [[0, 1, 2]]))]
    instances = [x for x in instances if x.size_parameter == 1]
    failures = 0
    for x in instances:
        assert x.is_x3c_prime
        c = oracles.count_x3c(x).value
        ss = shapley_raw(phi(x), 1)
        failures += ss != r1(1) * c or psi(ss) != c
    elapsed = time.perf_counter() - t0
    counts = {oracles.count_x3c(x).value for x in instances}
    report("7 psi(SS*(phi(X),1)) = #X3C' for n = 1", canonical_ok and not failures and elapsed < 1,
           f"{len(instances)} instances, counts {sorted(counts)}, {elapsed * 1e3:.0f} ms")
    assert canonical_ok
    assert failures == 0 and len(counts) > 1
    assert elapsed < 1


def test_08_interval_disjointness(report):
    ok = all(r2(4**t) < r1(4 ** (t + 1)) for t in range(5))
    report("8 r2(4^t) < r1(4^(t+1)) for t = 0..4", ok)
    assert ok


def test_09_cmp_ss_order(report):
    t0 = time.perf_counter()
    rng = random.Random(PAIR_SEED)
    failures = 0
    strict = 0
    largest = 0
    for _ in range(50):
        x, y = random_x3c(rng), random_x3c(rng)
        gx, gy, p = cmp_ss(x, y)
        largest = max(largest, gx.n)
        cx, cy = oracles.count_x3c(x).value, oracles.count_x3c(y).value
        sx = shapley(gx, p, Strategy.MEET_IN_MIDDLE)
        sy = shapley(gy, p, Strategy.MEET_IN_MIDDLE)
        strict += cx > cy
        failures += (cx > cy) != (sx.normalized > sy.normalized)
    elapsed = time.perf_counter() - t0
    report("9 #X3C order = SS order on cmp_ss games (50 pairs)", failures == 0 and elapsed < 120,
           f"{failures} failures, {strict} strict, up to {largest} players, {elapsed:.1f} s")
    assert strict > 0
    assert failures == 0
    assert elapsed < 120


def test_10_padding_invariance(report):
    rng = random.Random(PADDING_SEED)
    failures = 0
    for _ in range(200):
        g = random_game(rng, 1, 12, 100)
        quota_padded = pad_with_quota_players(g, 1)
        dummy_padded = pad_with_dummies(g, 1)
        for i in range(1, g.n + 1):
            failures += banzhaf_raw(quota_padded, i) != banzhaf_raw(g, i)
            failures += banzhaf(dummy_padded, i).normalized != banzhaf(g, i).normalized
            failures += shapley(dummy_padded, i).normalized != shapley(g, i).normalized
    report("10 quota-player and dummy padding invariance", failures == 0, f"{failures} failures")
    assert failures == 0


def test_11_merge_profitability(report):
    yes = merge_profitability(make_game([1, 1, 1], 2))
    no = merge_profitability(make_game([2, 2, 1], 4))
    values_ok = (yes.strictly_greater and yes.left.normalized == 1
                 and yes.right.normalized == Fraction(2, 3)
                 and not no.strictly_greater and no.left.normalized == no.right.normalized == 1)
    elapsed = best_of(lambda: (merge_profitability(make_game([1, 1, 1], 2)),
                               merge_profitability(make_game([2, 2, 1], 4))))
    report("11 merge profitability (1,1,1;2) yes, (2,2,1;4) no", values_ok and elapsed < 1e-3,
           f"{elapsed * 1e3:.3f} ms")
    assert values_ok
    assert elapsed < 1e-3


def test_12_estimator_soundness(report):
    g = make_game([8, 7, 2], 9)
    t0 = time.perf_counter()
    estimates = [estimate_banzhaf(g, 1, 10**5, seed, delta=0.01) for seed in range(20)]
    elapsed = time.perf_counter() - t0
    inside = sum(e.covers(Fraction(1, 2)) for e in estimates)
    report("12 Hoeffding interval covers 1/2 for >= 19 of 20 seeds", inside >= 19 and elapsed < 30,
           f"{inside}/20 inside, {elapsed:.1f} s")
    assert inside >= 19
    assert elapsed < 30
