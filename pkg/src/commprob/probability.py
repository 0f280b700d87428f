"""Exact commuting probability, class counts, and counting inequalities.

All probabilities are :class:`fractions.Fraction` values: exact, in lowest
terms, with arbitrary-precision integers, so threshold comparisons such as
35/243 versus 11/75 are never blurred by rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .perm import FiniteGroup, GroupError
from .structure import (
    Subgroup,
    _cached,
    as_group,
    conjugacy_classes,
    derived_subgroup,
    is_normal,
    quotient_with_map,
)

DEFAULT_ORACLE_CAP = 500


def class_count(G: FiniteGroup) -> int:
    """k(G), the number of conjugacy classes."""
    return len(conjugacy_classes(G))


def commuting_probability(G: FiniteGroup) -> Fraction:
    """d(G) = k(G) / |G|, the probability that a random ordered pair commutes."""
    return Fraction(class_count(G), G.order)


def commuting_pairs_oracle(G: FiniteGroup, max_order: int = DEFAULT_ORACLE_CAP) -> Fraction:
    """The defining count, evaluated literally: |{(x, y) : xy = yx}| / |G|^2.

    Kept independent of the class-based computation so the two can be
    cross-checked.  Refuses groups larger than ``max_order``.
    """
    n = G.order
    if n > max_order:
        raise GroupError(
            f"oracle cap exceeded: group order {n} > {max_order}"
        )
    table = G.multiplication_table()
    count = 0
    for x in range(n):
        row = table[x]
        count += sum(1 for y in range(n) if row[y] == table[y][x])
    return Fraction(count, n * n)


def average_class_size(G: FiniteGroup) -> Fraction:
    """acs(G) = |G| / k(G), the reciprocal of the commuting probability."""
    return Fraction(G.order, class_count(G))


def check_character_bound(G: FiniteGroup, c: int) -> bool:
    """True iff |G| >= [G:G'] + c * (k(G) - [G:G']).

    The factor c = 4 encodes that nonlinear irreducible characters have
    degree at least 2; c = 9 encodes degree at least 3, which is only a
    valid assumption for groups of odd order.
    """
    if c not in (4, 9):
        raise GroupError("the character degree factor must be 4 or 9")
    index = G.order // derived_subgroup(G).order
    k = class_count(G)
    return G.order >= index + c * (k - index)


@dataclass(frozen=True)
class GallagherResult:
    holds: bool
    equality: bool
    class_count_group: int
    class_count_quotient: int
    class_count_normal: int


def _centralizer_sets(G: FiniteGroup) -> tuple[tuple[int, ...], ...]:
    def compute():
        n = G.order
        table = G.multiplication_table()
        out = []
        for g in range(n):
            row = table[g]
            out.append(tuple(h for h in range(n) if row[h] == table[h][g]))
        return tuple(out)

    return _cached(G, "centralizer_sets", compute)


def gallagher_check(G: FiniteGroup, N: Subgroup) -> GallagherResult:
    """Check k(G) <= k(G/N) * k(N) for normal N, and report whether the
    centralizer condition for equality holds element-wise: the centralizer
    of every coset gN in G/N must be the image of the centralizer of g."""
    if not is_normal(G, N):
        raise GroupError("gallagher_check requires a normal subgroup")
    Q, pi = quotient_with_map(G, N)
    k_g = class_count(G)
    k_q = class_count(Q)
    k_n = class_count(as_group(G, N))
    holds = k_g <= k_q * k_n
    cent_g = _centralizer_sets(G)
    cent_q = _centralizer_sets(Q)
    equality = True
    for g in range(G.order):
        image = {pi[c] for c in cent_g[g]}
        if image != set(cent_q[pi[g]]):
            equality = False
            break
    return GallagherResult(holds, equality, k_g, k_q, k_n)


BOUND_SATISFIED = "satisfied"
BOUND_VACUOUS = "vacuous"
BOUND_VIOLATED = "violated"


@dataclass(frozen=True)
class DerivedBoundReport:
    d: Fraction
    derived_order: int
    odd: bool
    small_bound: str  # d > 5/16  implies |G'| < 12
    odd_bound: str  # odd and d > 35/243  implies |G'| < 27


def derived_order_bound_witness(G: FiniteGroup) -> DerivedBoundReport:
    """Evaluate the two commutator-order bounds on a concrete group."""
    d = commuting_probability(G)
    dn = derived_subgroup(G).order
    odd = G.order % 2 == 1

    def status(applicable: bool, ok: bool) -> str:
        if not applicable:
            return BOUND_VACUOUS
        return BOUND_SATISFIED if ok else BOUND_VIOLATED

    return DerivedBoundReport(
        d=d,
        derived_order=dn,
        odd=odd,
        small_bound=status(d > Fraction(5, 16), dn < 12),
        odd_bound=status(odd and d > Fraction(35, 243), dn < 27),
    )
