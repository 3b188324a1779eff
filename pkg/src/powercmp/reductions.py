"""Count-preserving rewrites of X3C instances and the reduction to voting games.

The chain is X3C -> SubsetSum -> weighted voting game.  Around it sit the
solution-count preserving gadgets ``g``, ``h'`` and ``h''``, the normalizers
that bring instances to the ``k/m = 2/3`` shape (and to ``n`` a power of 4),
and the pair ``phi``/``psi`` that recovers the cover count from the raw
Shapley-Shubik value of the first player.

Fresh universe elements are always appended at the tail and new sets after
the existing family, so every output is reproducible.
"""

from __future__ import annotations

from .errors import DegenerateInstanceError, ValidationError
from .game import Game
from .indices import factorial
from .instances import SubsetSumInstance, X3CInstance, is_power_of_four

#: Fixed X3C' instance (n = 1) without exact covers: element 5 is never covered.
ZERO_SOLUTION_INSTANCE = X3CInstance(6, ((0, 1, 2), (0, 1, 3), (0, 1, 4)))


def _extend(x: X3CInstance, fresh: int, gadget) -> X3CInstance:
    base = x.universe_size
    new_sets = tuple(tuple(base + b for b in s) for s in gadget)
    return X3CInstance(base + fresh, x.sets + new_sets)


# Gadget sets over fresh elements b1..b6 (0-based offsets 0..5).
_B1 = (0, 1, 2)
_B2 = (3, 4, 5)
_B3 = (0, 3, 4)
_B4 = (0, 3, 5)


def transform_g(x: X3CInstance) -> X3CInstance:
    """Add ``B1`` as new elements and as a set: ``k -> k+1``, ``m -> m+1``."""
    return _extend(x, 3, (_B1,))


def transform_h_prime(x: X3CInstance) -> X3CInstance:
    """Add ``B1 ∪ B2`` and sets ``B1, B2, B3``: ``k -> k+2``, ``m -> m+3``.

    ``B3`` overlaps both ``B1`` and ``B2`` yet cannot cover ``b3`` or ``b6``
    together with anything else, so only ``{B1, B2}`` is usable.
    """
    return _extend(x, 6, (_B1, _B2, _B3))


def transform_h_dprime(x: X3CInstance) -> X3CInstance:
    """As :func:`transform_h_prime` plus ``B4``: ``k -> k+2``, ``m -> m+4``."""
    return _extend(x, 6, (_B1, _B2, _B3, _B4))


def normalize_two_thirds(x: X3CInstance) -> X3CInstance:
    """Same cover count, with ``3k = 2m``.

    While ``2m - 3k < 0``, ``h''`` raises that gap by 2, so
    ``ceil((3k - 2m) / 2)`` applications suffice; each ``g`` then lowers it
    by 1.
    """
    gap = 2 * x.m - 3 * x.k
    if gap < 0:
        for _ in range(-(gap // 2)):
            x = transform_h_dprime(x)
    for _ in range(2 * x.m - 3 * x.k):
        x = transform_g(x)
    assert x.at_two_thirds
    return x


def normalize_x3c_prime(x: X3CInstance) -> X3CInstance:
    """Ratio 2/3 first, then ``h'`` (``n -> n+1``) until ``n`` is a power of 4."""
    x = normalize_two_thirds(x)
    while not is_power_of_four(x.size_parameter):
        x = transform_h_prime(x)
    return x


def equalize_pair(x: X3CInstance, y: X3CInstance) -> tuple[X3CInstance, X3CInstance]:
    """Bring both instances to ratio 2/3 and grow the smaller one with ``h'``
    until universes and families have equal sizes.  Order is preserved."""
    x = normalize_two_thirds(x)
    y = normalize_two_thirds(y)
    while x.universe_size < y.universe_size:
        x = transform_h_prime(x)
    while y.universe_size < x.universe_size:
        y = transform_h_prime(y)
    assert x.m == y.m
    return x, y


def x3c_to_subsetsum(x: X3CInstance) -> SubsetSumInstance:
    """Digit encoding in base ``m + 1``.

    Set ``S_i`` becomes ``sum of base**j for j in S_i``; the target has a 1 in
    every digit.  At most ``m`` sets share a digit, so no carries occur and a
    subset hits the target exactly when it is an exact cover (hence has
    exactly ``k`` members).
    """
    if x.m == 0:
        raise DegenerateInstanceError("cannot encode an X3C instance with an empty family")
    base = x.m + 1
    values = tuple(sum(base**e for e in s) for s in x.sets)
    target = sum(base**j for j in range(x.universe_size))
    return SubsetSumInstance(values, target)


def subsetsum_to_game(inst: SubsetSumInstance) -> Game:
    """The game ``(1, s_1, ..., s_m; q + 1)``.

    Player 1 swings on exactly the subsets of the others that sum to ``q``.
    When all of those have ``k`` members, its raw Shapley-Shubik value is
    ``(m - k)! k! * #SubsetSum``.
    """
    return Game((1,) + inst.values, inst.target + 1)


def phi(x: X3CInstance, *, normalize: bool = False, substitute: bool = False) -> Game:
    """X3C instance to voting game.

    ``normalize`` first rewrites ``x`` into X3C' form.  ``substitute``
    replaces an instance that is not already X3C' by
    :data:`ZERO_SOLUTION_INSTANCE`.  Without either flag any instance with a
    nonempty family is accepted.
    """
    if normalize and substitute:
        raise ValidationError("normalize and substitute are mutually exclusive")
    if normalize:
        x = normalize_x3c_prime(x)
    elif substitute and not x.is_x3c_prime:
        x = ZERO_SOLUTION_INSTANCE
    return subsetsum_to_game(x3c_to_subsetsum(x))


def r1(n: int) -> int:
    """``n! (2n)!``"""
    if n < 1:
        raise ValidationError("r1 is defined for n >= 1")
    return factorial(n) * factorial(2 * n)


def r2(n: int) -> int:
    """``n! (2n)! 2^(3n)``"""
    return r1(n) << (3 * n)


def psi(x: int) -> int:
    """Recover the cover count from ``x = SS*(phi(X), 1)``.

    Finds the first ``t`` with ``r1(4^t) <= x <= r2(4^t)`` and returns
    ``x // r1(4^t)``; 0 when ``x`` is 0 or falls between the windows.
    Only ``O(log x)`` values of ``t`` are tried.
    """
    if x < 0:
        raise ValidationError("psi takes a nonnegative integer")
    if x == 0:
        return 0
    t = 0
    while True:
        n = 4**t
        low = r1(n)
        if low > x:
            return 0
        if x <= r2(n):
            return x // low
        t += 1


def cmp_ss(x: X3CInstance, y: X3CInstance) -> tuple[Game, Game, int]:
    """Games ``(G_x, G_y, 1)`` with ``#X3C(x) > #X3C(y)`` iff ``SS(G_x,1) > SS(G_y,1)``.

    After equalization both games have ``r + 1`` players and player 1's raw
    value is ``(r - k)! k!`` times the respective cover count.
    """
    x2, y2 = equalize_pair(x, y)
    if x2.m == 0:
        # Both empty: the encoding needs a nonempty family.
        x2, y2 = transform_h_prime(x2), transform_h_prime(y2)
    return phi(x2), phi(y2), 1


x3c_to_game = phi
recover_cover_count = psi
