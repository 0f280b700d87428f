"""Subgroup-level structure of finite permutation groups.

Centers, centralizers, conjugacy classes, derived and normal structure,
quotients, complements, and the solvable / nilpotent / supersolvable
classifiers.  Everything operates on element indices of an immutable
:class:`~commprob.perm.FiniteGroup`; results are memoized on the group.
"""

from __future__ import annotations

import threading
from typing import Iterable, Sequence

from .perm import FiniteGroup, GroupError, Permutation, generate_group


class NotNormal(GroupError):
    """The given subgroup is not normal in its parent."""


class Subgroup:
    """A subset of a parent group's element indices closed under its
    multiplication.  Compared and hashed by member indices."""

    __slots__ = ("parent", "member_indices", "_mset")

    def __init__(self, parent: FiniteGroup, member_indices: Iterable[int]):
        self.parent = parent
        self.member_indices: tuple[int, ...] = tuple(sorted(set(member_indices)))
        self._mset: frozenset | None = None

    @property
    def order(self) -> int:
        return len(self.member_indices)

    def __contains__(self, idx: int) -> bool:
        if self._mset is None:
            self._mset = frozenset(self.member_indices)
        return idx in self._mset

    def is_trivial(self) -> bool:
        return self.order == 1

    def is_whole(self) -> bool:
        return self.order == self.parent.order

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Subgroup)
            and self.parent is other.parent
            and self.member_indices == other.member_indices
        )

    def __hash__(self) -> int:
        return hash(self.member_indices)

    def __repr__(self) -> str:
        return f"<Subgroup order={self.order} of group order {self.parent.order}>"


class ConjugacyClass:
    """Conjugation orbit; the representative is the lowest member index."""

    __slots__ = ("representative", "members")

    def __init__(self, members: Iterable[int]):
        self.members: tuple[int, ...] = tuple(sorted(members))
        self.representative: int = self.members[0]

    @property
    def size(self) -> int:
        return len(self.members)

    def __repr__(self) -> str:
        return f"<ConjugacyClass rep={self.representative} size={self.size}>"


def _cached(G: FiniteGroup, key, compute):
    cache = G._cache
    if key not in cache:
        cache[key] = compute()
    return cache[key]


def _check_index(G: FiniteGroup, x: int) -> None:
    if not 0 <= x < G.order:
        raise IndexError(f"element index {x} out of range for group of order {G.order}")


# -- subgroup generation -----------------------------------------------------


def _close_indices(G: FiniteGroup, seeds: Iterable[int]) -> tuple[int, ...]:
    seen = {G.identity_index}
    gens = sorted(set(seeds))
    frontier = [G.identity_index] + [s for s in gens if s not in seen]
    seen.update(gens)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = G.mul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return tuple(sorted(seen))


def subgroup_generated(G: FiniteGroup, seeds: Iterable[int]) -> Subgroup:
    """Smallest subgroup of G containing the seed element indices."""
    seeds = list(seeds)
    for s in seeds:
        _check_index(G, s)
    return Subgroup(G, _close_indices(G, seeds))


def subgroup_gens(G: FiniteGroup, H: Subgroup) -> tuple[int, ...]:
    """Greedy minimal generating sequence of a subgroup, in index order."""
    chosen: list[int] = []
    closed: tuple[int, ...] = (G.identity_index,)
    closed_set = {G.identity_index}
    for i in H.member_indices:
        if i not in closed_set:
            chosen.append(i)
            closed = _close_indices(G, chosen)
            closed_set = set(closed)
            if len(closed) == H.order:
                break
    return tuple(chosen)


# -- centers, centralizers, classes ------------------------------------------


def center(G: FiniteGroup) -> Subgroup:
    """Elements commuting with everything (it suffices to test generators)."""

    def compute():
        gens = G.generating_indices()
        members = [
            x
            for x in range(G.order)
            if all(G.mul(x, g) == G.mul(g, x) for g in gens)
        ]
        return Subgroup(G, members)

    return _cached(G, "center", compute)


def centralizer(G: FiniteGroup, x: int) -> Subgroup:
    """All g with gx = xg; the class size of x equals its index."""
    _check_index(G, x)
    return Subgroup(
        G, (g for g in range(G.order) if G.mul(g, x) == G.mul(x, g))
    )


def is_abelian(G: FiniteGroup) -> bool:
    def compute():
        gens = G.generating_indices()
        return all(G.mul(a, b) == G.mul(b, a) for a in gens for b in gens)

    return _cached(G, "abelian", compute)


def conjugacy_classes(G: FiniteGroup) -> list[ConjugacyClass]:
    """Partition of all indices into conjugation orbits, ordered by lowest
    representative.  Orbits are grown by conjugating with generators only."""

    def compute():
        gens = G.generating_indices()
        seen = [False] * G.order
        classes = []
        for i in range(G.order):
            if seen[i]:
                continue
            orbit = {i}
            seen[i] = True
            frontier = [i]
            while frontier:
                nxt = []
                for x in frontier:
                    for g in gens:
                        y = G.conjugate(x, g)
                        if not seen[y]:
                            seen[y] = True
                            orbit.add(y)
                            nxt.append(y)
                frontier = nxt
            classes.append(ConjugacyClass(orbit))
        return classes

    return _cached(G, "classes", compute)


def class_size_map(G: FiniteGroup) -> tuple[int, ...]:
    """Size of the conjugacy class of each element, indexed by element."""

    def compute():
        sizes = [0] * G.order
        for c in conjugacy_classes(G):
            for m in c.members:
                sizes[m] = c.size
        return tuple(sizes)

    return _cached(G, "class_sizes", compute)


def classes_inside(G: FiniteGroup, N: Subgroup) -> list[ConjugacyClass]:
    """The G-classes entirely contained in the normal subgroup N."""
    if not is_normal(G, N):
        raise NotNormal("classes_inside requires a normal subgroup")
    members = set(N.member_indices)
    return [c for c in conjugacy_classes(G) if c.representative in members]


# -- normality and the normal subgroup lattice --------------------------------


def is_normal(G: FiniteGroup, H: Subgroup) -> bool:
    """True iff gHg^-1 = H for all g (tested on generators of both sides)."""
    if H.parent is not G:
        raise GroupError("subgroup does not belong to this group")
    members = set(H.member_indices)
    gens = G.generating_indices()
    return all(
        G.conjugate(h, g) in members
        for h in subgroup_gens(G, H)
        for g in gens
    )


def normal_closure(G: FiniteGroup, seeds: Iterable[int]) -> Subgroup:
    """Smallest normal subgroup of G containing the seeds."""
    gens = G.generating_indices()
    current = set(_close_indices(G, seeds))
    while True:
        extra = set()
        for h in current:
            for g in gens:
                y = G.conjugate(h, g)
                if y not in current:
                    extra.add(y)
        if not extra:
            return Subgroup(G, current)
        current = set(_close_indices(G, current | extra))


def normal_subgroups(G: FiniteGroup) -> list[Subgroup]:
    """All normal subgroups, as the join-closure of the subgroups generated
    by single conjugacy classes; sorted by order then member set."""

    def compute():
        atoms = {}
        trivial = (G.identity_index,)
        atoms[trivial] = Subgroup(G, trivial)
        for c in conjugacy_classes(G):
            s = _close_indices(G, c.members)
            atoms[s] = Subgroup(G, s)
        found = dict(atoms)
        frontier = list(atoms.values())
        while frontier:
            nxt = []
            for a in frontier:
                for b in list(found.values()):
                    if a.order == G.order or b.order == G.order:
                        continue
                    joined = _close_indices(
                        G, set(a.member_indices) | set(b.member_indices)
                    )
                    if joined not in found:
                        sub = Subgroup(G, joined)
                        found[joined] = sub
                        nxt.append(sub)
            frontier = nxt
        return sorted(found.values(), key=lambda s: (s.order, s.member_indices))

    return _cached(G, "normal_subgroups", compute)


def minimal_normal_subgroups(G: FiniteGroup) -> list[Subgroup]:
    """Minimal elements among the nontrivial normal subgroups."""
    if G.order == 1:
        raise GroupError("the trivial group has no minimal normal subgroups")
    nontrivial = [n for n in normal_subgroups(G) if not n.is_trivial()]
    out = []
    for n in nontrivial:
        nset = set(n.member_indices)
        if not any(
            m is not n and set(m.member_indices) < nset for m in nontrivial
        ):
            out.append(n)
    return out


# -- quotients and subgroups as standalone groups ------------------------------


def _coset_data(G: FiniteGroup, N: Subgroup) -> tuple[list[int], list[int]]:
    """Right-coset ids (by ascending representative) and representatives."""
    coset_of = [-1] * G.order
    reps: list[int] = []
    for i in range(G.order):
        if coset_of[i] < 0:
            cid = len(reps)
            reps.append(i)
            for m in N.member_indices:
                coset_of[G.mul(m, i)] = cid
    return coset_of, reps


def quotient_with_map(G: FiniteGroup, N: Subgroup) -> tuple[FiniteGroup, tuple[int, ...]]:
    """Quotient G/N realized by the action on right cosets, plus the
    projection map from G element indices to quotient element indices."""
    if not is_normal(G, N):
        raise NotNormal("quotients require a normal subgroup")
    key = ("quotient", N.member_indices)

    def compute():
        coset_of, reps = _coset_data(G, N)
        ncos = len(reps)

        def coset_perm(g: int) -> Permutation:
            return Permutation(coset_of[G.mul(r, g)] for r in reps)

        Q = generate_group(
            ncos,
            [coset_perm(g) for g in G.generating_indices()] or [Permutation.identity(ncos)],
            max_order=max(G.order, 1),
        )
        if Q.order * N.order != G.order:
            raise GroupError("coset action has the wrong image size")
        pi = tuple(Q.index_of(coset_perm(g)) for g in range(G.order))
        return Q, pi

    return _cached(G, key, compute)


def quotient(G: FiniteGroup, N: Subgroup) -> FiniteGroup:
    """The quotient group G/N as permutations of the cosets of N."""
    return quotient_with_map(G, N)[0]


def as_group_with_map(G: FiniteGroup, H: Subgroup) -> tuple[FiniteGroup, dict[int, int]]:
    """Re-enumerate a subgroup as a standalone group via its regular
    representation; also return the map parent index -> new index."""
    key = ("as_group", H.member_indices)

    def compute():
        members = H.member_indices
        pos = {m: i for i, m in enumerate(members)}
        perms = [
            Permutation(pos[G.mul(y, x)] for y in members) for x in members
        ]
        group = FiniteGroup(len(members), perms)
        mapping = {m: group.index_of(p) for m, p in zip(members, perms)}
        return group, mapping

    return _cached(G, key, compute)


def as_group(G: FiniteGroup, H: Subgroup) -> FiniteGroup:
    return as_group_with_map(G, H)[0]


# -- commutator structure ------------------------------------------------------


def commutator(G: FiniteGroup, a: int, b: int) -> int:
    """Index of [a, b] = a^-1 b^-1 a b."""
    return G.mul(G.mul(G.inv(a), G.inv(b)), G.mul(a, b))


def _commutator_subgroup(G: FiniteGroup, a_gens: Sequence[int], b_gens: Sequence[int]) -> Subgroup:
    """Normal closure in G of the generator commutators [a, b].

    Valid whenever <a_gens union b_gens> together with conjugation data is
    available from G itself; both uses below (derived series terms and lower
    central series terms) involve subgroups normal in G.
    """
    seeds = {commutator(G, a, b) for a in a_gens for b in b_gens}
    seeds.discard(G.identity_index)
    return normal_closure(G, seeds)


def derived_subgroup(G: FiniteGroup) -> Subgroup:
    """Subgroup generated by all commutators."""

    def compute():
        gens = G.generating_indices()
        return _commutator_subgroup(G, gens, gens)

    return _cached(G, "derived", compute)


def _derived_of(G: FiniteGroup, H: Subgroup) -> Subgroup:
    """Derived subgroup of a subgroup, computed inside the parent."""
    hg = subgroup_gens(G, H)
    seeds = {commutator(G, a, b) for a in hg for b in hg}
    seeds.discard(G.identity_index)
    # normal closure under H-conjugation only
    current = set(_close_indices(G, seeds))
    while True:
        extra = {
            G.conjugate(x, h)
            for x in current
            for h in hg
            if G.conjugate(x, h) not in current
        }
        if not extra:
            return Subgroup(G, current)
        current = set(_close_indices(G, current | extra))


def derived_series(G: FiniteGroup) -> list[Subgroup]:
    """G >= G' >= G'' >= ... until the series stabilizes."""
    series = [Subgroup(G, range(G.order))]
    while True:
        nxt = (
            derived_subgroup(G)
            if len(series) == 1
            else _derived_of(G, series[-1])
        )
        if nxt.member_indices == series[-1].member_indices:
            return series
        series.append(nxt)
        if nxt.is_trivial():
            return series


def is_solvable(G: FiniteGroup) -> bool:
    return derived_series(G)[-1].is_trivial()


def lower_central_series(G: FiniteGroup) -> list[Subgroup]:
    """G >= [G,G] >= [G,[G,G]] >= ... until the series stabilizes."""
    gens = G.generating_indices()
    series = [Subgroup(G, range(G.order))]
    while True:
        last = series[-1]
        nxt = _commutator_subgroup(G, gens, subgroup_gens(G, last))
        if nxt.member_indices == last.member_indices:
            return series
        series.append(nxt)
        if nxt.is_trivial():
            return series


def is_nilpotent(G: FiniteGroup) -> bool:
    return lower_central_series(G)[-1].is_trivial()


# -- supersolvability ----------------------------------------------------------

_SSOLV_MEMO: dict[tuple, list[tuple[FiniteGroup, bool]]] = {}
_SSOLV_LOCK = threading.Lock()


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _iso_invariant_key(G: FiniteGroup) -> tuple:
    orders = tuple(sorted(p.order() for p in G.elements))
    sizes = tuple(sorted(c.size for c in conjugacy_classes(G)))
    return (G.order, orders, sizes)


def _prime_order_normal_subgroups(G: FiniteGroup) -> list[Subgroup]:
    """Normal subgroups <x> of prime order, in canonical order."""
    out = []
    seen: set[tuple[int, ...]] = set()
    gens = G.generating_indices()
    for x in range(G.order):
        if x == G.identity_index:
            continue
        o = G.elements[x].order()
        if not _is_prime(o):
            continue
        members = _close_indices(G, [x])
        if members in seen:
            continue
        seen.add(members)
        mset = set(members)
        if all(G.conjugate(x, g) in mset for g in gens):
            out.append(Subgroup(G, members))
    return out


def is_supersolvable(G: FiniteGroup) -> bool:
    """Recursive test: G is supersolvable iff it is trivial or has a normal
    subgroup of prime order with supersolvable quotient.

    Memoized on an isomorphism-invariant key (order, element-order multiset,
    class-size multiset) with an isomorphism check on key collisions.  The
    memo table is guarded by a lock so concurrent calls are safe.
    """
    if G.order == 1:
        return True
    key = _iso_invariant_key(G)
    with _SSOLV_LOCK:
        bucket = list(_SSOLV_MEMO.get(key, ()))
    if bucket:
        from .isomorphism import are_isomorphic  # circular at module load time

        for known, verdict in bucket:
            if are_isomorphic(G, known):
                return verdict
    result = False
    for N in _prime_order_normal_subgroups(G):
        if is_supersolvable(quotient(G, N)):
            result = True
            break
    with _SSOLV_LOCK:
        _SSOLV_MEMO.setdefault(key, []).append((G, result))
    return result


# -- complements ---------------------------------------------------------------


def find_complement(G: FiniteGroup, N: Subgroup) -> Subgroup | None:
    """A subgroup H with H meet N = 1 and |H| * |N| = |G|, if one exists.

    Depth-first search over coset representatives: at each step the first
    coset not yet covered by <H> is tried, candidates in canonical element
    order, so the first success is deterministic.
    """
    if not is_normal(G, N):
        raise NotNormal("complements are searched for normal subgroups only")
    if N.is_trivial() or N.is_whole():
        raise GroupError("find_complement requires a nontrivial proper subgroup")
    target = G.order // N.order
    _, pi = quotient_with_map(G, N)
    coset_members: list[list[int]] = [[] for _ in range(target)]
    for i in range(G.order):
        coset_members[pi[i]].append(i)

    def search(current: tuple[int, ...]) -> tuple[int, ...] | None:
        if len(current) == target:
            return current
        covered = {pi[x] for x in current}
        first_open = min(q for q in range(target) if q not in covered)
        for cand in coset_members[first_open]:
            grown = _close_indices(G, set(current) | {cand})
            if len(grown) > target or target % len(grown) != 0:
                continue
            if len({pi[x] for x in grown}) != len(grown):
                continue  # meets N nontrivially
            result = search(grown)
            if result is not None:
                return result
        return None

    found = search((G.identity_index,))
    if found is None:
        return None
    return Subgroup(G, found)
