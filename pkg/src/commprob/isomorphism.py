"""Group isomorphism testing by backtracking over generator images.

The search assigns images to a small generating sequence of the source
group, pruned by element order and conjugacy-class size, and extends each
partial assignment to a homomorphism by walking the Cayley graph.  The
exploration follows canonical index order, so witnesses are deterministic.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .perm import FiniteGroup
from .structure import _cached, class_size_map


def extend_generator_map(
    src: FiniteGroup,
    gens: Sequence[int],
    dst: FiniteGroup,
    images: Sequence[int],
) -> list[int] | None:
    """Extend gens -> images to a homomorphism on <gens>, or return None.

    The returned list maps source indices to destination indices and holds
    -1 outside the subgroup generated by ``gens``.  Consistency is checked
    on every (element, generator) product, which forces the homomorphism
    property on the whole generated subgroup.
    """
    phi = [-1] * src.order
    phi[src.identity_index] = dst.identity_index
    queue = [src.identity_index]
    pairs = list(zip(gens, images))
    head = 0
    while head < len(queue):
        x = queue[head]
        head += 1
        px = phi[x]
        for g, mg in pairs:
            y = src.mul(x, g)
            py = dst.mul(px, mg)
            if phi[y] < 0:
                phi[y] = py
                queue.append(y)
            elif phi[y] != py:
                return None
    return phi


def _injective_where_defined(phi: list[int]) -> bool:
    defined = [v for v in phi if v >= 0]
    return len(defined) == len(set(defined))


def _element_profiles(G: FiniteGroup) -> tuple[tuple[int, int], ...]:
    def compute():
        sizes = class_size_map(G)
        return tuple(
            (p.order(), sizes[i]) for i, p in enumerate(G.elements)
        )

    return _cached(G, "profiles", compute)


def _compatible(G: FiniteGroup, H: FiniteGroup) -> bool:
    if G.order != H.order:
        return False
    pg = _element_profiles(G)
    ph = _element_profiles(H)
    return sorted(pg) == sorted(ph)


def iter_isomorphisms(G: FiniteGroup, H: FiniteGroup) -> Iterator[list[int]]:
    """Yield every isomorphism G -> H as an index map, in canonical order."""
    if not _compatible(G, H):
        return
    gens = G.generating_indices()
    if not gens:  # trivial group
        yield [H.identity_index]
        return
    profiles_h = _element_profiles(H)
    candidates = [
        [j for j in range(H.order) if profiles_h[j] == _element_profiles(G)[g]]
        for g in gens
    ]
    n = G.order
    chosen: list[int] = []

    def dfs(depth: int) -> Iterator[list[int]]:
        if depth == len(gens):
            phi = extend_generator_map(G, gens, H, chosen)
            if phi is not None and min(phi) >= 0 and len(set(phi)) == n:
                yield list(phi)
            return
        for cand in candidates[depth]:
            chosen.append(cand)
            partial = extend_generator_map(G, gens[: depth + 1], H, chosen)
            if partial is not None and _injective_where_defined(partial):
                yield from dfs(depth + 1)
            chosen.pop()

    yield from dfs(0)


def find_isomorphism(G: FiniteGroup, H: FiniteGroup) -> list[int] | None:
    """First isomorphism found in canonical search order, else None."""
    for phi in iter_isomorphisms(G, H):
        return phi
    return None


def are_isomorphic(G: FiniteGroup, H: FiniteGroup) -> bool:
    return find_isomorphism(G, H) is not None
