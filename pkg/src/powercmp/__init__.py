"""Exact power indices, PowerCompare and the X3C -> voting game reductions."""

from .compare import ComparisonVerdict, compare_raw, merge_profitability, power_compare
from .errors import CapacityError, DegenerateInstanceError, PowerCmpError, ValidationError
from .game import (
    Coalition,
    Game,
    make_game,
    move_player_to_front,
    pad_with_dummies,
    pad_with_quota_players,
    succ,
)
from .indices import (
    Estimate,
    IndexValue,
    Kind,
    Strategy,
    banzhaf,
    banzhaf_raw,
    estimate_banzhaf,
    estimate_shapley,
    power_index,
    shapley,
    shapley_raw,
)
from .instances import CountValue, SubsetSumInstance, X3CInstance
from .reductions import (
    cmp_ss,
    equalize_pair,
    normalize_two_thirds,
    normalize_x3c_prime,
    phi,
    psi,
    r1,
    recover_cover_count,
    r2,
    subsetsum_to_game,
    transform_g,
    transform_h_dprime,
    transform_h_prime,
    x3c_to_game,
    x3c_to_subsetsum,
)

__version__ = "0.1.0"
