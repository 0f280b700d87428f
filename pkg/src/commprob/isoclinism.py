"""Isoclinism of finite groups via commutator pairing structures.

Two groups are isoclinic when there are isomorphisms between their central
quotients and between their derived subgroups that carry one commutator
pairing to the other.  The pairing of a group G is the well-defined map
(g1 Z, g2 Z) -> [g1, g2] from pairs of central cosets into the derived
subgroup; it is the full invariant and is checked directly here.
"""

from __future__ import annotations

from dataclasses import dataclass

from .perm import FiniteGroup, GroupError
from .isomorphism import extend_generator_map, iter_isomorphisms
from .structure import (
    _cached,
    as_group_with_map,
    center,
    derived_subgroup,
    quotient_with_map,
)


@dataclass(frozen=True)
class PairingStructure:
    """The isoclinism invariant of a group.

    ``pairing[q1][q2]`` is the element index, inside the standalone
    realization of the derived subgroup, of the commutator of any
    representatives of the central cosets q1 and q2.
    """

    inner_quotient: FiniteGroup
    derived: FiniteGroup
    pairing: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class IsoclinismWitness:
    quotient_iso: tuple[int, ...]
    derived_iso: tuple[int, ...]


def commutator_pairing(G: FiniteGroup) -> PairingStructure:
    """Build (G/Z(G), G', pairing) and verify the pairing is well defined.

    Representative independence is checked one argument at a time; since
    [g1 z, g2] = [g1, g2] = [g1, g2 z'] for central z, z', this forces
    independence in both arguments simultaneously.
    """

    def compute():
        Z = center(G)
        Q, pi = quotient_with_map(G, Z)
        D, dmap = as_group_with_map(G, derived_subgroup(G))
        reps = [-1] * Q.order
        for i in range(G.order):
            if reps[pi[i]] < 0:
                reps[pi[i]] = i

        def comm(a: int, b: int) -> int:
            return G.mul(G.mul(G.inv(a), G.inv(b)), G.mul(a, b))

        pairing = [
            tuple(dmap[comm(reps[q1], reps[q2])] for q2 in range(Q.order))
            for q1 in range(Q.order)
        ]
        for g1 in range(G.order):
            row = pairing[pi[g1]]
            for q2 in range(Q.order):
                if dmap[comm(g1, reps[q2])] != row[q2]:
                    raise GroupError("commutator pairing is not well defined")
        for g2 in range(G.order):
            q2 = pi[g2]
            for q1 in range(Q.order):
                if dmap[comm(reps[q1], g2)] != pairing[q1][q2]:
                    raise GroupError("commutator pairing is not well defined")
        return PairingStructure(Q, D, tuple(pairing))

    return _cached(G, "pairing", compute)


def is_stem(G: FiniteGroup) -> bool:
    """True iff the center is contained in the derived subgroup."""
    derived = set(derived_subgroup(G).member_indices)
    return all(z in derived for z in center(G).member_indices)


def _induced_derived_map(
    a: PairingStructure, b: PairingStructure, phi: list[int]
) -> tuple[int, ...] | None:
    """Extend the map forced on pairing values by phi to an isomorphism of
    the derived groups, or return None if it is not functional or does not
    extend."""
    forced: dict[int, int] = {}
    n = a.inner_quotient.order
    for q1 in range(n):
        row_a = a.pairing[q1]
        row_b = b.pairing[phi[q1]]
        for q2 in range(n):
            val = row_a[q2]
            target = row_b[phi[q2]]
            if forced.setdefault(val, target) != target:
                return None
    gens = sorted(forced)
    images = [forced[g] for g in gens]
    psi = extend_generator_map(a.derived, gens, b.derived, images)
    if psi is None or min(psi) < 0 or len(set(psi)) != a.derived.order:
        return None
    return tuple(psi)


def find_isoclinism(G: FiniteGroup, H: FiniteGroup) -> IsoclinismWitness | None:
    """Search for compatible isomorphisms of the two pairing structures.

    Cheap order prechecks run before any pairing is built; the quotient
    isomorphisms are then enumerated in canonical order and the first one
    whose induced map extends to the derived groups wins.
    """
    zg, zh = center(G), center(H)
    if G.order // zg.order != H.order // zh.order:
        return None
    if derived_subgroup(G).order != derived_subgroup(H).order:
        return None
    pg = commutator_pairing(G)
    ph = commutator_pairing(H)
    for phi in iter_isomorphisms(pg.inner_quotient, ph.inner_quotient):
        psi = _induced_derived_map(pg, ph, phi)
        if psi is not None:
            return IsoclinismWitness(tuple(phi), psi)
    return None


def are_isoclinic(G: FiniteGroup, H: FiniteGroup) -> bool:
    return find_isoclinism(G, H) is not None


def verify_isoclinism_witness(
    G: FiniteGroup, H: FiniteGroup, witness: IsoclinismWitness
) -> bool:
    """Re-check a witness from scratch: both maps must be bijective
    homomorphisms and the compatibility square must commute on all pairs."""
    pg = commutator_pairing(G)
    ph = commutator_pairing(H)
    phi, psi = witness.quotient_iso, witness.derived_iso
    qa, qb = pg.inner_quotient, ph.inner_quotient
    if sorted(phi) != list(range(qb.order)) or sorted(psi) != list(
        range(ph.derived.order)
    ):
        return False
    for x in range(qa.order):
        for y in range(qa.order):
            if phi[qa.mul(x, y)] != qb.mul(phi[x], phi[y]):
                return False
            if psi[pg.pairing[x][y]] != ph.pairing[phi[x]][phi[y]]:
                return False
    da, db = pg.derived, ph.derived
    for x in range(da.order):
        for y in range(da.order):
            if psi[da.mul(x, y)] != db.mul(psi[x], psi[y]):
                return False
    return True
