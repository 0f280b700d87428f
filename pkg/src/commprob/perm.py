"""Permutation arithmetic and closure of generating sets into finite groups.

Elements are permutations of {0, ..., degree-1} in one-line image form.
Composition reads left to right: ``p * q`` applies ``p`` first, then ``q``.
A :class:`FiniteGroup` is a fully enumerated element list sorted
lexicographically by image tuple, so element indices are deterministic
across runs and can be used as stable element names everywhere else.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

DEFAULT_ORDER_CAP = 5000


class GroupError(ValueError):
    """Invalid group-theoretic input or construction."""


class OrderCapExceeded(GroupError):
    """A closure grew past the configured maximum group order."""


class Permutation:
    """A bijection of {0, ..., degree-1} stored as a tuple of images.

    ``p.images[i]`` is the image of point ``i``.  Instances are immutable
    by convention and hashable.
    """

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        imgs = tuple(images)
        n = len(imgs)
        if n == 0:
            raise GroupError("a permutation needs at least one point")
        seen = [False] * n
        for v in imgs:
            if not isinstance(v, int) or not 0 <= v < n or seen[v]:
                raise GroupError(f"not a bijection of 0..{n - 1}: {imgs!r}")
            seen[v] = True
        self.images = imgs

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree))

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.images))

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Apply self first, then other."""
        if self.degree != other.degree:
            raise GroupError(
                f"degree mismatch: {self.degree} vs {other.degree}"
            )
        o = other.images
        return Permutation(o[v] for v in self.images)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, v in enumerate(self.images):
            inv[v] = i
        return Permutation(inv)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def order(self) -> int:
        """Least m >= 1 with p^m equal to the identity (lcm of cycle lengths)."""
        n = len(self.images)
        seen = [False] * n
        o = 1
        for i in range(n):
            if not seen[i]:
                length = 0
                j = i
                while not seen[j]:
                    seen[j] = True
                    j = self.images[j]
                    length += 1
                o = math.lcm(o, length)
        return o

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)!r})"


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Composition in application order: the result maps i to q(p(i))."""
    return p * q


class FiniteGroup:
    """A fully enumerated permutation group with canonical element order.

    Immutable after construction and safe to share read-only across
    concurrent tasks; derived data (inverse table, multiplication table,
    structural invariants) is memoized on the instance.
    """

    __slots__ = ("degree", "elements", "identity_index", "_index", "_gens", "_cache")

    def __init__(
        self,
        degree: int,
        elements: Iterable[Permutation],
        generator_perms: Sequence[Permutation] | None = None,
    ):
        els = sorted(set(elements), key=lambda p: p.images)
        if not els:
            raise GroupError("a group needs at least the identity element")
        for p in els:
            if p.degree != degree:
                raise GroupError(
                    f"degree mismatch: expected {degree}, got {p.degree}"
                )
        self.degree = degree
        self.elements: tuple[Permutation, ...] = tuple(els)
        self._index = {p.images: i for i, p in enumerate(self.elements)}
        ident = tuple(range(degree))
        if ident not in self._index:
            raise GroupError("element set does not contain the identity")
        self.identity_index = self._index[ident]
        for p in self.elements:
            if p.inverse().images not in self._index:
                raise GroupError(f"element set is missing the inverse of {p!r}")
        if generator_perms is None:
            self._gens = None
        else:
            self._gens = tuple(self._index[g.images] for g in generator_perms)
        self._cache: dict = {}

    # -- basic queries ---------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.elements)

    def index_of(self, p: Permutation) -> int:
        try:
            return self._index[p.images]
        except KeyError:
            raise GroupError(f"{p!r} is not an element of this group") from None

    def __contains__(self, p: Permutation) -> bool:
        return isinstance(p, Permutation) and p.images in self._index

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FiniteGroup)
            and self.degree == other.degree
            and self.elements == other.elements
        )

    def __hash__(self) -> int:
        h = self._cache.get("hash")
        if h is None:
            h = hash((self.degree, tuple(p.images for p in self.elements)))
            self._cache["hash"] = h
        return h

    def __repr__(self) -> str:
        return f"<FiniteGroup order={self.order} degree={self.degree}>"

    # -- index arithmetic ------------------------------------------------

    def mul(self, i: int, j: int) -> int:
        """Index of elements[i] * elements[j] (apply i first, then j)."""
        table = self._cache.get("mul_table")
        if table is not None:
            return table[i][j]
        q = self.elements[j].images
        return self._index[tuple(q[v] for v in self.elements[i].images)]

    def inv(self, i: int) -> int:
        invs = self._cache.get("inv")
        if invs is None:
            invs = tuple(self._index[p.inverse().images] for p in self.elements)
            self._cache["inv"] = invs
        return invs[i]

    def conjugate(self, x: int, g: int) -> int:
        """Index of g^-1 * x * g."""
        return self.mul(self.mul(self.inv(g), x), g)

    def multiplication_table(self) -> list[list[int]]:
        """Full |G| x |G| index table, built once and cached.

        Columns are filled in generator-word order so only |G| * #generators
        real permutation compositions are needed; the rest are lookups.
        """
        table = self._cache.get("mul_table")
        if table is not None:
            return table
        n = self.order
        gens = self.generating_indices()
        # parent[j] = (k, g) with elements[j] == elements[k] * elements[g]
        parent: dict[int, tuple[int, int]] = {}
        bfs_order = [self.identity_index]
        reached = {self.identity_index}
        head = 0
        while head < len(bfs_order):
            k = bfs_order[head]
            head += 1
            for g in gens:
                j = self.mul(k, g)
                if j not in reached:
                    reached.add(j)
                    parent[j] = (k, g)
                    bfs_order.append(j)
        if len(reached) != n:
            raise GroupError("generating set does not generate the group")
        table = [[0] * n for _ in range(n)]
        for i in range(n):
            table[i][self.identity_index] = i
        for g in gens:
            for i in range(n):
                table[i][g] = self.mul(i, g)
        for j in bfs_order:
            if j == self.identity_index or j in gens:
                continue
            k, g = parent[j]
            col_k = [table[i][k] for i in range(n)]
            for i in range(n):
                table[i][j] = table[col_k[i]][g]
        self._cache["mul_table"] = table
        return table

    def generating_indices(self) -> tuple[int, ...]:
        """A small generating sequence, deterministic for a given group.

        Returns the generators recorded at construction when available,
        otherwise a greedy minimal sequence in canonical element order.
        """
        if self._gens is not None and len(self._gens) > 0:
            return self._gens
        gens = self._cache.get("greedy_gens")
        if gens is None:
            chosen: list[int] = []
            closed = {self.identity_index}
            for i in range(self.order):
                if i not in closed:
                    chosen.append(i)
                    closed = self._close(closed | {i})
                    if len(closed) == self.order:
                        break
            gens = tuple(chosen)
            self._cache["greedy_gens"] = gens
        return gens

    def _close(self, seed: set[int]) -> set[int]:
        """Monoid closure of seed indices under multiplication."""
        seen = set(seed)
        seen.add(self.identity_index)
        gens = sorted(seed)
        frontier = list(seen)
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.mul(x, g)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return seen


def generate_group(
    degree: int,
    generators: Sequence[Permutation],
    max_order: int = DEFAULT_ORDER_CAP,
) -> FiniteGroup:
    """Breadth-first closure of {identity} | generators under composition.

    Raises :class:`OrderCapExceeded` (naming the cap) if the closure grows
    past ``max_order`` elements, and :class:`GroupError` on degree mismatch.
    """
    if degree < 1:
        raise GroupError("degree must be a positive integer")
    for g in generators:
        if g.degree != degree:
            raise GroupError(
                f"generator degree {g.degree} does not match group degree {degree}"
            )
    gens = list(dict.fromkeys(generators))
    ident = Permutation.identity(degree)
    seen: dict[tuple[int, ...], Permutation] = {ident.images: ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = p * g
                if q.images not in seen:
                    if len(seen) >= max_order:
                        raise OrderCapExceeded(
                            f"group closure exceeded the order cap of {max_order}"
                        )
                    seen[q.images] = q
                    nxt.append(q)
        frontier = nxt
    return FiniteGroup(degree, seen.values(), generator_perms=gens)


def element_order(G: FiniteGroup, x: int) -> int:
    """Least m >= 1 with x^m equal to the identity."""
    if not 0 <= x < G.order:
        raise IndexError(f"element index {x} out of range for group of order {G.order}")
    return G.elements[x].order()
