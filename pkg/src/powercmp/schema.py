"""JSON encodings for games, instances, index values and verdicts.

Integers that a 53-bit consumer could corrupt travel as decimal strings.
Game weights use plain numbers when they are safe; counts, index values and
subset-sum data are always strings.  Decoders accept either form.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Any

from .compare import ComparisonVerdict
from .errors import ValidationError
from .game import Game
from .indices import Estimate, IndexValue
from .instances import CountValue, SubsetSumInstance, X3CInstance

MAX_SAFE_INT = 2**53 - 1
_DECIMAL = re.compile(r"-?[0-9]+")


def encode_int(x: int) -> int | str:
    return x if -MAX_SAFE_INT <= x <= MAX_SAFE_INT else str(x)


def decode_int(v: Any, what: str = "value") -> int:
    if isinstance(v, bool):
        raise ValidationError(f"{what}: expected an integer, got {v!r}")
    if isinstance(v, int):
        return v
    if isinstance(v, str) and _DECIMAL.fullmatch(v.strip()):
        return int(v)
    raise ValidationError(f"{what}: expected an integer or decimal string, got {v!r}")


def _require(obj: Any, keys: tuple[str, ...], what: str) -> dict:
    if not isinstance(obj, dict):
        raise ValidationError(f"{what}: expected a JSON object")
    missing = [k for k in keys if k not in obj]
    if missing:
        raise ValidationError(f"{what}: missing key(s) {', '.join(missing)}")
    return obj


def game_to_json(g: Game) -> dict:
    return {"weights": [encode_int(w) for w in g.weights], "quota": encode_int(g.quota)}


def game_from_json(obj: Any) -> Game:
    obj = _require(obj, ("weights", "quota"), "game")
    if not isinstance(obj["weights"], list):
        raise ValidationError("game: weights must be a list")
    return Game(tuple(decode_int(w, "weight") for w in obj["weights"]),
                decode_int(obj["quota"], "quota"))


def x3c_to_json(x: X3CInstance) -> dict:
    return {"universe": x.universe_size, "sets": [list(s) for s in x.sets]}


def x3c_from_json(obj: Any) -> X3CInstance:
    obj = _require(obj, ("universe", "sets"), "X3C instance")
    sets = obj["sets"]
    if not isinstance(sets, list) or not all(isinstance(s, list) for s in sets):
        raise ValidationError("X3C instance: sets must be a list of lists")
    return X3CInstance(decode_int(obj["universe"], "universe"),
                       tuple(tuple(decode_int(e, "element") for e in s) for s in sets))


def subsetsum_to_json(inst: SubsetSumInstance) -> dict:
    return {"values": [str(v) for v in inst.values], "target": str(inst.target)}


def subsetsum_from_json(obj: Any) -> SubsetSumInstance:
    obj = _require(obj, ("values", "target"), "subset-sum instance")
    if not isinstance(obj["values"], list):
        raise ValidationError("subset-sum instance: values must be a list")
    return SubsetSumInstance(tuple(decode_int(v, "value") for v in obj["values"]),
                             decode_int(obj["target"], "target"))


def fraction_to_json(f: Fraction) -> dict:
    return {"num": str(f.numerator), "den": str(f.denominator)}


def fraction_from_json(obj: Any) -> Fraction:
    obj = _require(obj, ("num", "den"), "fraction")
    return Fraction(decode_int(obj["num"]), decode_int(obj["den"]))


def index_value_to_json(v: IndexValue) -> dict:
    return {"raw": str(v.raw), "scale": str(v.scale), "normalized": fraction_to_json(v.normalized)}


def index_value_from_json(obj: Any) -> IndexValue:
    obj = _require(obj, ("raw", "scale"), "index value")
    v = IndexValue(decode_int(obj["raw"], "raw"), decode_int(obj["scale"], "scale"))
    if "normalized" in obj and fraction_from_json(obj["normalized"]) != v.normalized:
        raise ValidationError("index value: normalized does not equal raw/scale")
    return v


def verdict_to_json(v: ComparisonVerdict) -> dict:
    return {"left": index_value_to_json(v.left), "right": index_value_to_json(v.right),
            "strictly_greater": v.strictly_greater}


def verdict_from_json(obj: Any) -> ComparisonVerdict:
    obj = _require(obj, ("left", "right", "strictly_greater"), "verdict")
    return ComparisonVerdict(index_value_from_json(obj["left"]),
                             index_value_from_json(obj["right"]),
                             bool(obj["strictly_greater"]))


def count_to_json(c: CountValue) -> dict:
    return {"value": str(c.value)}


def count_from_json(obj: Any) -> CountValue:
    return CountValue(decode_int(_require(obj, ("value",), "count")["value"]))


def estimate_to_json(e: Estimate) -> dict:
    return {
        "point": fraction_to_json(e.point),
        "half_width": fraction_to_json(e.half_width),
        "samples": e.samples,
        "seed": str(e.seed),
        "delta": e.delta,
    }


def estimate_from_json(obj: Any) -> Estimate:
    obj = _require(obj, ("point", "half_width", "samples", "seed"), "estimate")
    return Estimate(fraction_from_json(obj["point"]), fraction_from_json(obj["half_width"]),
                    decode_int(obj["samples"]), decode_int(obj["seed"]),
                    float(obj.get("delta", 0.01)))


def detect(obj: Any) -> str:
    """Which document a decoded JSON object is: ``game``, ``x3c`` or ``subsetsum``."""
    if isinstance(obj, dict):
        if "weights" in obj:
            return "game"
        if "universe" in obj:
            return "x3c"
        if "values" in obj:
            return "subsetsum"
    raise ValidationError("input is neither a game, an X3C instance nor a subset-sum instance")
