"""PowerCompare, raw-index comparison, and the coalition-merge test."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ValidationError
from .game import Game, check_player, move_player_to_front, pad_with_dummies, pad_with_quota_players
from .indices import IndexValue, Kind, Strategy, factorial, power_index, shapley_raw


@dataclass(frozen=True)
class ComparisonVerdict:
    left: IndexValue
    right: IndexValue
    strictly_greater: bool


def _equal_size(a: Game, b: Game, pad) -> tuple[Game, Game]:
    if a.n < b.n:
        a = pad(a, b.n - a.n)
    elif b.n < a.n:
        b = pad(b, a.n - b.n)
    return a, b


def power_compare(g1: Game, g2: Game, i: int, kind, strategy=Strategy.AUTO) -> ComparisonVerdict:
    """Is player ``i``'s index strictly larger in ``g1`` than in ``g2``?

    A smaller game is padded with weight-0 players first; that leaves the
    normalized values of its own players alone, and with equal ``n`` the
    raw values decide.  Ties are not "greater".
    """
    kind = Kind(kind)
    g1, g2 = _equal_size(g1, g2, pad_with_dummies)
    left = power_index(g1, i, kind, strategy)
    right = power_index(g2, i, kind, strategy)
    return ComparisonVerdict(left, right, left.normalized > right.normalized)


def compare_raw(g1: Game, p1: int, g2: Game, p2: int, kind,
                strategy=Strategy.AUTO) -> ComparisonVerdict:
    """Is the raw index of ``p1`` in ``g1`` strictly larger than that of ``p2`` in ``g2``?

    Banzhaf: the smaller game is padded with quota-weight players (raw
    values unchanged), each designated player is moved to the front, and
    the resulting games are compared at player 1, so both sides share one
    scale.  Shapley-Shubik: there is no raw-preserving padding, so raw
    values are compared as they are and each side keeps its own scale.
    """
    kind = Kind(kind)
    check_player(g1, p1)
    check_player(g2, p2)
    k1 = move_player_to_front(g1, p1)
    k2 = move_player_to_front(g2, p2)
    if kind is Kind.BANZHAF:
        k1, k2 = _equal_size(k1, k2, pad_with_quota_players)
    left = power_index(k1, 1, kind, strategy)
    right = power_index(k2, 1, kind, strategy)
    return ComparisonVerdict(left, right, left.raw > right.raw)


def merged_game(game: Game) -> Game:
    """Players 1 and 2 fused into one bloc, listed first."""
    if game.n < 2:
        raise ValidationError("merging needs at least two players")
    w = game.weights
    return Game((w[0] + w[1],) + w[2:], game.quota)


def merge_profitability(game: Game, strategy=Strategy.AUTO) -> ComparisonVerdict:
    """Does ``SS(G', 1) > SS(G, 1) + SS(G, 2)`` for the merged game ``G'``?

    ``right`` carries the summed value of players 1 and 2 over ``n!``.
    """
    merged = merged_game(game)
    left = power_index(merged, 1, Kind.SHAPLEY, strategy)
    right = IndexValue(shapley_raw(game, 1, strategy) + shapley_raw(game, 2, strategy),
                       factorial(game.n))
    return ComparisonVerdict(left, right, left.normalized > right.normalized)
