"""Command-line front end.

Every subcommand writes exactly one JSON document to stdout.  Errors go to
stderr as ``{"error": ..., "message": ...}`` with exit code 1 (usage),
2 (validation) or 3 (capacity).  ``verify`` exits 4 when a fast path
disagrees with its oracle.  Player indices are 1-based throughout.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import random
import sys
from pathlib import Path
from typing import Any, Callable, Sequence

from . import compare, generate, indices, oracles, reductions, schema
from .errors import CapacityError, PowerCmpError, ValidationError
from .game import Game
from .indices import Kind, Strategy

log = logging.getLogger("powercmp")

EXIT_OK, EXIT_USAGE, EXIT_VALIDATION, EXIT_CAPACITY, EXIT_MISMATCH = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def load_document(arg: str) -> Any:
    """Inline JSON, or ``@path`` to read it from a file."""
    try:
        text = Path(arg[1:]).read_text(encoding="utf-8") if arg.startswith("@") else arg
    except OSError as exc:
        raise UsageError(f"cannot read {arg[1:]}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"invalid JSON: {exc}") from None


def _game(arg: str) -> Game:
    return schema.game_from_json(load_document(arg))


def _x3c(arg: str):
    return schema.x3c_from_json(load_document(arg))


def _subsetsum(arg: str):
    return schema.subsetsum_from_json(load_document(arg))


def cmd_index(args) -> Any:
    v = indices.power_index(_game(args.game), args.player, args.kind, args.strategy)
    return schema.index_value_to_json(v)


def cmd_compare(args) -> Any:
    v = compare.power_compare(_game(args.game_a), _game(args.game_b), args.player,
                              args.kind, args.strategy)
    return schema.verdict_to_json(v)


def cmd_compare_raw(args) -> Any:
    v = compare.compare_raw(_game(args.game_a), args.player_a, _game(args.game_b),
                            args.player_b, args.kind, args.strategy)
    return schema.verdict_to_json(v)


def cmd_merge(args) -> Any:
    return schema.verdict_to_json(compare.merge_profitability(_game(args.game), args.strategy))


def cmd_reduce(args) -> Any:
    if args.which == "subsetsum-to-game":
        return schema.game_to_json(reductions.subsetsum_to_game(_subsetsum(args.instance)))
    x = _x3c(args.instance)
    if args.which == "x3c-to-subsetsum":
        if args.normalize:
            x = reductions.normalize_x3c_prime(x)
        elif args.substitute and not x.is_x3c_prime:
            x = reductions.ZERO_SOLUTION_INSTANCE
        return schema.subsetsum_to_json(reductions.x3c_to_subsetsum(x))
    return schema.game_to_json(reductions.phi(x, normalize=args.normalize,
                                              substitute=args.substitute))


_TRANSFORMS: dict[str, Callable] = {
    "g": reductions.transform_g,
    "hprime": reductions.transform_h_prime,
    "hdprime": reductions.transform_h_dprime,
    "two-thirds": reductions.normalize_two_thirds,
    "x3c-prime": reductions.normalize_x3c_prime,
}


def cmd_transform(args) -> Any:
    x = _x3c(args.instance)
    if args.which == "equalize":
        if args.other is None:
            raise UsageError("transform equalize needs two instances")
        a, b = reductions.equalize_pair(x, _x3c(args.other))
        return [schema.x3c_to_json(a), schema.x3c_to_json(b)]
    if args.other is not None:
        raise UsageError(f"transform {args.which} takes one instance")
    return schema.x3c_to_json(_TRANSFORMS[args.which](x))


def cmd_count(args) -> Any:
    if args.which == "x3c":
        return schema.count_to_json(oracles.count_x3c(_x3c(args.instance)))
    return schema.count_to_json(oracles.count_subsetsum(_subsetsum(args.instance)))


def cmd_psi(args) -> Any:
    try:
        x = int(args.value)
    except ValueError:
        raise ValidationError(f"psi takes a nonnegative integer, got {args.value!r}") from None
    return {"value": str(reductions.psi(x))}


def cmd_estimate(args) -> Any:
    fn = indices.estimate_banzhaf if args.kind is Kind.BANZHAF else indices.estimate_shapley
    est = fn(_game(args.game), args.player, args.samples, args.seed,
             delta=args.delta, workers=args.parallel)
    return schema.estimate_to_json(est)


def _check(name: str, values: dict[str, Any]) -> dict:
    distinct = {json.dumps(v, default=str) for v in values.values()}
    return {"check": name, "ok": len(distinct) == 1,
            "values": {k: str(v) for k, v in values.items()}}


def _verify_game(g: Game) -> list[dict]:
    checks = []
    exact = [Strategy.DEFINITION, Strategy.MEET_IN_MIDDLE]
    if g.quota <= indices.DP_MAX_QUOTA:
        exact.insert(0, Strategy.WEIGHT_DP)
    for i in range(1, g.n + 1):
        bz = {"oracle": oracles.banzhaf_raw_enum(g, i)}
        ss = {"oracle": oracles.shapley_raw_enum(g, i)}
        for s in exact:
            bz[s.value] = indices.banzhaf_raw(g, i, s)
            ss[s.value] = indices.shapley_raw(g, i, s)
        if g.n <= oracles.MAX_PERM_PLAYERS:
            ss["permutation-oracle"] = oracles.shapley_raw_perm(g, i)
            ss[Strategy.PERMUTATION.value] = indices.shapley_raw(g, i, Strategy.PERMUTATION)
        checks.append(_check(f"banzhaf_raw player {i}", bz))
        checks.append(_check(f"shapley_raw player {i}", ss))
    return checks


def _verify_x3c(x) -> list[dict]:
    count = oracles.count_x3c(x).value
    checks = []
    steps = dict(_TRANSFORMS)
    steps["equalize"] = lambda inst: reductions.equalize_pair(inst, inst)[0]
    for name, fn in steps.items():
        checks.append(_check(f"count preserved by {name}",
                             {"input": count, "output": oracles.count_x3c(fn(x)).value}))
    if x.m:
        inst = reductions.x3c_to_subsetsum(x)
        if inst.m <= oracles.MAX_SUBSETSUM_ITEMS:
            checks.append(_check("parsimony x3c-to-subsetsum",
                                 {"x3c": count, "subsetsum": oracles.count_subsetsum(inst).value}))
            sizes = {len(s) for s in oracles.subsetsum_solutions(inst)} or {x.k}
            checks.append(_check("every solution has k elements",
                                 {"k": x.k, **{f"size{j}": s for j, s in enumerate(sorted(sizes))}}))
    if x.is_x3c_prime:
        ss = indices.shapley_raw(reductions.phi(x), 1)
        checks.append(_check("psi(SS*(phi(X),1)) = #X3C", {"x3c": count, "psi": reductions.psi(ss)}))
    return checks


def _verify_subsetsum(inst) -> list[dict]:
    game = reductions.subsetsum_to_game(inst)
    return [_check("#SubsetSum = Banzhaf* of player 1 in (1, s; q+1)",
                   {"oracle": oracles.count_subsetsum(inst).value,
                    "banzhaf_raw": indices.banzhaf_raw(game, 1)})]


def cmd_verify(args) -> Any:
    doc = load_document(args.instance)
    kind = schema.detect(doc)
    if kind == "game":
        checks = _verify_game(schema.game_from_json(doc))
    elif kind == "x3c":
        checks = _verify_x3c(schema.x3c_from_json(doc))
    else:
        checks = _verify_subsetsum(schema.subsetsum_from_json(doc))
    ok = all(c["ok"] for c in checks)
    args.exit_code = EXIT_OK if ok else EXIT_MISMATCH
    return {"input": kind, "ok": ok, "checks": checks}


def cmd_gen(args) -> Any:
    rng = random.Random(args.seed)
    if args.which == "game":
        return schema.game_to_json(generate.random_game(
            rng, args.min_players, args.max_players, args.max_weight))
    return schema.x3c_to_json(generate.random_x3c(rng, args.max_k, args.max_m, args.min_k, args.min_m))


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {v}")
    return v


def _positive(text: str) -> int:
    v = _nonneg(text)
    if v == 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    env_parallel = os.environ.get("POWERCMP_PARALLEL", "1")
    parallel = int(env_parallel) if env_parallel.isdigit() and int(env_parallel) > 0 else 1

    def global_args(parser, top: bool):
        # Accepted before or after the subcommand; only the top level sets defaults.
        opt = {} if top else {"default": argparse.SUPPRESS}
        parser.add_argument("--parallel", type=_positive, **({"default": parallel} if top else opt),
                            help="worker-count hint for the sampling backends "
                                 "(default: $POWERCMP_PARALLEL or 1)")
        parser.add_argument("--format", choices=("json", "pretty"),
                            **({"default": "json"} if top else opt))
        parser.add_argument("-v", "--verbose", action="store_true",
                            **({"default": False} if top else opt), help="log to stderr")

    p = _Parser(prog="powercmp", description="Exact power indices for weighted voting games.")
    global_args(p, top=True)
    common = _Parser(add_help=False)
    global_args(common, top=False)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def command(name: str, help: str):
        return sub.add_parser(name, help=help, parents=[common])

    def kind_arg(sp):
        sp.add_argument("--kind", required=True, type=Kind, choices=list(Kind),
                        metavar="{banzhaf,shapley}")

    def strategy_arg(sp):
        sp.add_argument("--strategy", type=Strategy, choices=list(Strategy), default=Strategy.AUTO,
                        metavar="{" + ",".join(s.value for s in Strategy) + "}")

    sp = command("index", "raw and normalized index of one player")
    sp.add_argument("game")
    sp.add_argument("--player", required=True, type=_positive)
    kind_arg(sp)
    strategy_arg(sp)
    sp.set_defaults(func=cmd_index)

    sp = command("compare", "PowerCompare: is the player's index larger in game A?")
    sp.add_argument("game_a")
    sp.add_argument("game_b")
    sp.add_argument("--player", required=True, type=_positive)
    kind_arg(sp)
    strategy_arg(sp)
    sp.set_defaults(func=cmd_compare)

    sp = command("compare-raw", "compare raw indices of two designated players")
    sp.add_argument("game_a")
    sp.add_argument("--playerA", dest="player_a", required=True, type=_positive)
    sp.add_argument("game_b")
    sp.add_argument("--playerB", dest="player_b", required=True, type=_positive)
    kind_arg(sp)
    strategy_arg(sp)
    sp.set_defaults(func=cmd_compare_raw)

    sp = command("merge", "is merging players 1 and 2 profitable (Shapley-Shubik)?")
    sp.add_argument("game")
    strategy_arg(sp)
    sp.set_defaults(func=cmd_merge)

    sp = command("reduce", "X3C -> SubsetSum -> game reductions")
    sp.add_argument("which", choices=("x3c-to-subsetsum", "x3c-to-game", "subsetsum-to-game"))
    sp.add_argument("instance")
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--normalize", action="store_true", help="bring X3C input to X3C' form first")
    mode.add_argument("--substitute", action="store_true",
                      help="replace non-X3C' input by a fixed zero-solution instance")
    sp.set_defaults(func=cmd_reduce)

    sp = command("transform", "count-preserving X3C rewrites")
    sp.add_argument("which", choices=tuple(_TRANSFORMS) + ("equalize",))
    sp.add_argument("instance")
    sp.add_argument("other", nargs="?")
    sp.set_defaults(func=cmd_transform)

    sp = command("count", "brute-force solution count")
    sp.add_argument("which", choices=("x3c", "subsetsum"))
    sp.add_argument("instance")
    sp.set_defaults(func=cmd_count)

    sp = command("psi", "invert the X3C' scaling factor")
    sp.add_argument("value")
    sp.set_defaults(func=cmd_psi)

    sp = command("estimate", "Monte Carlo estimate with a Hoeffding half-width")
    sp.add_argument("game")
    sp.add_argument("--player", required=True, type=_positive)
    kind_arg(sp)
    sp.add_argument("--samples", required=True, type=_positive)
    sp.add_argument("--seed", required=True, type=_nonneg)
    sp.add_argument("--delta", type=float, default=indices.DEFAULT_DELTA)
    sp.set_defaults(func=cmd_estimate)

    sp = command("verify", "cross-check fast paths against the oracles")
    sp.add_argument("instance")
    sp.set_defaults(func=cmd_verify)

    sp = command("gen", "seeded random game or X3C instance")
    sp.add_argument("which", choices=("game", "x3c"))
    sp.add_argument("--seed", required=True, type=_nonneg)
    sp.add_argument("--min-players", type=_positive, default=1)
    sp.add_argument("--max-players", type=_positive, default=16)
    sp.add_argument("--max-weight", type=_nonneg, default=100)
    sp.add_argument("--min-k", type=_nonneg, default=1)
    sp.add_argument("--max-k", type=_nonneg, default=4)
    sp.add_argument("--min-m", type=_nonneg, default=1)
    sp.add_argument("--max-m", type=_nonneg, default=8)
    sp.set_defaults(func=cmd_gen)
    return p


def _fail(kind: str, message: str, code: int) -> int:
    sys.stderr.write(json.dumps({"error": kind, "message": message}) + "\n")
    return code


def run(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.verbose:
            logging.basicConfig(level=logging.INFO, stream=sys.stderr)
        if args.command == "gen":
            for lo, hi in (("min_players", "max_players"), ("min_k", "max_k"), ("min_m", "max_m")):
                if getattr(args, lo) > getattr(args, hi):
                    raise UsageError(f"--{lo.replace('_', '-')} exceeds --{hi.replace('_', '-')}")
        args.exit_code = EXIT_OK
        log.info("running %s", args.command)
        out = args.func(args)
    except UsageError as exc:
        return _fail("usage", str(exc), EXIT_USAGE)
    except CapacityError as exc:
        return _fail("capacity", str(exc), EXIT_CAPACITY)
    except (ValidationError, PowerCmpError) as exc:
        return _fail("validation", str(exc), EXIT_VALIDATION)
    indent = 2 if args.format == "pretty" else None
    sys.stdout.write(json.dumps(out, indent=indent) + "\n")
    return args.exit_code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
