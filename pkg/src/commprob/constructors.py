"""Constructors for the built-in catalog: cyclic groups, direct and
semidirect products, automorphism groups, and named groups.

Semidirect convention (fixed): the acting group H acts on N on the right,
h |-> (n |-> n^h), and the product multiplies as

    (a, h) * (a', h') = (a^h' * a', h * h')

so that inside the product the conjugate of an embedded N-element by an
embedded H-element agrees with the action.  The action map H -> Aut(N) is
a homomorphism with respect to left-to-right composition.  Products are
realized by the right regular representation on |N| * |H| points.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .perm import (
    DEFAULT_ORDER_CAP,
    FiniteGroup,
    GroupError,
    Permutation,
    generate_group,
)
from .isomorphism import extend_generator_map, iter_isomorphisms

DEFAULT_AUT_CAP = 32


def cyclic(n: int) -> FiniteGroup:
    """The cyclic group of order n, acting on n points by rotation."""
    if n < 1:
        raise GroupError("cyclic group order must be a positive integer")
    if n == 1:
        return generate_group(1, [])
    rot = Permutation((i + 1) % n for i in range(n))
    return generate_group(n, [rot])


def direct_product(
    A: FiniteGroup, B: FiniteGroup, max_order: int = DEFAULT_ORDER_CAP
) -> FiniteGroup:
    """A x B acting on the disjoint union of the two point sets."""
    if A.order * B.order > max_order:
        raise GroupError(
            f"product order {A.order * B.order} exceeds the order cap of {max_order}"
        )
    da = A.degree

    def pair(a: Permutation, b: Permutation) -> Permutation:
        return Permutation(tuple(a.images) + tuple(v + da for v in b.images))

    elements = [pair(a, b) for a in A.elements for b in B.elements]
    ea, eb = A.elements[A.identity_index], B.elements[B.identity_index]
    gens = [pair(A.elements[i], eb) for i in A.generating_indices()]
    gens += [pair(ea, B.elements[j]) for j in B.generating_indices()]
    return FiniteGroup(da + B.degree, elements, generator_perms=gens or None)


def automorphism_group(A: FiniteGroup, max_base: int = DEFAULT_AUT_CAP) -> FiniteGroup:
    """All automorphisms of A, realized as permutations of A's element
    indices and closed into a group of degree |A|."""
    if A.order > max_base:
        raise GroupError(
            f"automorphism search cap exceeded: group order {A.order} > {max_base}"
        )
    perms = [Permutation(phi) for phi in iter_isomorphisms(A, A)]
    return FiniteGroup(A.order, perms)


def automorphism_from_generator_images(
    N: FiniteGroup, gens: Sequence[int], images: Sequence[int]
) -> tuple[int, ...]:
    """The unique automorphism of N sending gens to images, as a full
    permutation of element indices.  Raises if no such automorphism exists."""
    phi = extend_generator_map(N, gens, N, images)
    if phi is None or min(phi) < 0 or len(set(phi)) != N.order:
        raise GroupError(
            f"generator images {list(images)} do not define an automorphism"
        )
    return tuple(phi)


@dataclass(frozen=True)
class ActionSpec:
    """An action of H on N given on generators of H.

    ``automorphism_images[i]`` is the permutation of N's element indices by
    which ``acting_generators[i]`` acts.  Whether the assignment extends to
    a homomorphism H -> Aut(N) is verified during product construction.
    """

    acting_generators: tuple[int, ...]
    automorphism_images: tuple[tuple[int, ...], ...]


def trivial_action(N: FiniteGroup, H: FiniteGroup) -> ActionSpec:
    ident = tuple(range(N.order))
    gens = H.generating_indices()
    return ActionSpec(tuple(gens), tuple(ident for _ in gens))


def _validate_automorphism(N: FiniteGroup, img: tuple[int, ...], label: str) -> None:
    if sorted(img) != list(range(N.order)):
        raise GroupError(f"action image for {label} is not a bijection of N's indices")
    for a in range(N.order):
        for b in range(N.order):
            if img[N.mul(a, b)] != N.mul(img[a], img[b]):
                raise GroupError(
                    f"action image for {label} is not an automorphism: "
                    f"image of {a}*{b} disagrees with image({a})*image({b})"
                )


def _action_table(
    N: FiniteGroup, H: FiniteGroup, action: ActionSpec
) -> list[tuple[int, ...]]:
    """Extend the generator action to every element of H, verifying the
    homomorphism property, and return one index permutation per H element."""
    if len(action.acting_generators) != len(action.automorphism_images):
        raise GroupError("one automorphism image is required per acting generator")
    ident = tuple(range(N.order))
    gen_imgs: dict[int, tuple[int, ...]] = {}
    for g, img in zip(action.acting_generators, action.automorphism_images):
        if not 0 <= g < H.order:
            raise GroupError(f"acting generator index {g} out of range")
        img = tuple(img)
        _validate_automorphism(N, img, f"H-generator {g}")
        gen_imgs[g] = img
    psi: list[tuple[int, ...] | None] = [None] * H.order
    psi[H.identity_index] = ident
    queue = [H.identity_index]
    head = 0
    while head < len(queue):
        x = queue[head]
        head += 1
        px = psi[x]
        for g, img in gen_imgs.items():
            y = H.mul(x, g)
            py = tuple(img[v] for v in px)  # apply psi(x) first, then psi(g)
            if psi[y] is None:
                psi[y] = py
                queue.append(y)
            elif psi[y] != py:
                raise GroupError(
                    "action does not extend to a homomorphism: the relation "
                    f"psi({x}*{g}) = psi({x})*psi({g}) fails in H"
                )
    if any(p is None for p in psi):
        raise GroupError("acting generators do not generate H")
    return psi  # type: ignore[return-value]


def _semidirect_with_maps(
    N: FiniteGroup,
    H: FiniteGroup,
    action: ActionSpec,
    max_order: int = DEFAULT_ORDER_CAP,
) -> tuple[FiniteGroup, list[int], list[int]]:
    """Semidirect product plus the element indices of the embedded copies
    of N and H inside it."""
    order = N.order * H.order
    if order > max_order:
        raise GroupError(
            f"product order {order} exceeds the order cap of {max_order}"
        )
    psi = _action_table(N, H, action)
    nh = H.order
    n_table = N.multiplication_table()
    h_table = H.multiplication_table()

    def element(a: int, h: int) -> Permutation:
        # right multiplication by (a, h): point (b, k) -> (psi_h(b) * a, k * h)
        psi_h = psi[h]
        images = [0] * order
        for b in range(N.order):
            nb = n_table[psi_h[b]][a]
            base = b * nh
            for k in range(nh):
                images[base + k] = nb * nh + h_table[k][h]
        return Permutation(images)

    elements = []
    keyed: dict[tuple[int, int], Permutation] = {}
    for a in range(N.order):
        for h in range(H.order):
            p = element(a, h)
            elements.append(p)
            keyed[(a, h)] = p
    h_id = H.identity_index
    gens = [keyed[(a, h_id)] for a in N.generating_indices()]
    gens += [keyed[(N.identity_index, h)] for h in H.generating_indices()]
    G = FiniteGroup(order, elements, generator_perms=gens or None)
    n_embed = [G.index_of(keyed[(a, H.identity_index)]) for a in range(N.order)]
    h_embed = [G.index_of(keyed[(N.identity_index, h)]) for h in range(H.order)]
    return G, n_embed, h_embed


def semidirect_product(
    N: FiniteGroup,
    H: FiniteGroup,
    action: ActionSpec,
    max_order: int = DEFAULT_ORDER_CAP,
) -> FiniteGroup:
    """The semidirect product of N by H under the given action; contains a
    normal copy of N with a complement isomorphic to H."""
    return _semidirect_with_maps(N, H, action, max_order)[0]


# -- named groups --------------------------------------------------------------


def _symmetric(n: int) -> FiniteGroup:
    cycle = Permutation([(i + 1) % n for i in range(n)])
    swap = Permutation([1, 0] + list(range(2, n)))
    return generate_group(n, [cycle, swap])


def _alternating4() -> FiniteGroup:
    return generate_group(4, [Permutation([1, 2, 0, 3]), Permutation([1, 0, 3, 2])])


def _alternating5() -> FiniteGroup:
    return generate_group(5, [Permutation([1, 2, 3, 4, 0]), Permutation([1, 2, 0, 3, 4])])


def _dihedral(order: int) -> FiniteGroup:
    n = order // 2
    rot = Permutation([(i + 1) % n for i in range(n)])
    flip = Permutation([(n - i) % n for i in range(n)])
    return generate_group(n, [rot, flip])


_QUAT_AXIS = {
    (0, 0): (0, 0), (0, 1): (0, 1), (0, 2): (0, 2), (0, 3): (0, 3),
    (1, 0): (0, 1), (1, 1): (1, 0), (1, 2): (0, 3), (1, 3): (1, 2),
    (2, 0): (0, 2), (2, 1): (1, 3), (2, 2): (1, 0), (2, 3): (0, 1),
    (3, 0): (0, 3), (3, 1): (0, 2), (3, 2): (1, 1), (3, 3): (1, 0),
}


def _quaternion_with_units() -> tuple[FiniteGroup, dict[tuple[int, int], int]]:
    """Q8 from the quaternion unit table, in its regular representation.

    Units are (sign, axis) with axes 1, i, j, k; the returned map gives the
    canonical element index of each unit.
    """

    def mul(x: tuple[int, int], y: tuple[int, int]) -> tuple[int, int]:
        s, axis = _QUAT_AXIS[(x[1], y[1])]
        return ((x[0] + y[0] + s) % 2, axis)

    units = [(s, u) for s in range(2) for u in range(4)]
    idx = {u: i for i, u in enumerate(units)}

    def regular(g: tuple[int, int]) -> Permutation:
        return Permutation(idx[mul(x, g)] for x in units)

    group = generate_group(8, [regular((0, 1)), regular((0, 2))])
    where = {u: group.index_of(regular(u)) for u in units}
    return group, where


def _quaternion() -> FiniteGroup:
    return _quaternion_with_units()[0]


def _c7_c3() -> FiniteGroup:
    c7 = cyclic(7)
    squaring = tuple((2 * r) % 7 for r in range(7))
    return semidirect_product(c7, cyclic(3), ActionSpec((1,), (squaring,)))


def _c2cube_c7() -> FiniteGroup:
    n = direct_product(direct_product(cyclic(2), cyclic(2)), cyclic(2))
    e1 = n.index_of(Permutation([1, 0, 2, 3, 4, 5]))
    e2 = n.index_of(Permutation([0, 1, 3, 2, 4, 5]))
    e3 = n.index_of(Permutation([0, 1, 2, 3, 5, 4]))
    e1e2 = n.mul(e1, e2)
    act = automorphism_from_generator_images(n, [e1, e2, e3], [e2, e3, e1e2])
    return semidirect_product(n, cyclic(7), ActionSpec((1,), (act,)))


def _c5c5() -> FiniteGroup:
    return direct_product(cyclic(5), cyclic(5))


def _c5c5_gens(n55: FiniteGroup) -> tuple[int, int]:
    e1 = n55.index_of(Permutation([1, 2, 3, 4, 0, 5, 6, 7, 8, 9]))
    e2 = n55.index_of(Permutation([0, 1, 2, 3, 4, 6, 7, 8, 9, 5]))
    return e1, e2


def _c5c5_c3() -> FiniteGroup:
    """(C5 x C5) : C3 with a fixed-point-free order-3 action."""
    n55 = _c5c5()
    e1, e2 = _c5c5_gens(n55)
    inv_e1e2 = n55.inv(n55.mul(e1, e2))
    act = automorphism_from_generator_images(n55, [e1, e2], [e2, inv_e1e2])
    return semidirect_product(n55, cyclic(3), ActionSpec((1,), (act,)))


def _c5c5_c15() -> FiniteGroup:
    """The order-375 group named by extending C5 x C5 by an order-15 twist.

    Aut(C5 x C5) = GL(2, 5) has no element of order 15, so the order-5 and
    order-3 parts of the twist cannot commute and the group is built in two
    stages: first (C5 x C5) : C5 (the extraspecial group of order 125 and
    exponent 5), then an order-3 automorphism acting freely on its central
    quotient.  This is the unique order-375 group with 23 conjugacy classes.
    """
    n55 = _c5c5()
    e1, e2 = _c5c5_gens(n55)
    shear = automorphism_from_generator_images(n55, [e1, e2], [e1, n55.mul(e1, e2)])
    heis, n_embed, h_embed = _semidirect_with_maps(
        n55, cyclic(5), ActionSpec((1,), (shear,))
    )
    x = n_embed[e2]
    y = h_embed[1]
    xy_inv = heis.inv(heis.mul(x, y))
    beta = automorphism_from_generator_images(heis, [x, y], [y, xy_inv])
    return semidirect_product(heis, cyclic(3), ActionSpec((1,), (beta,)))


def _q8_c3() -> FiniteGroup:
    """Q8 : C3 with the order-3 automorphism cycling i -> j -> k."""
    q8, where = _quaternion_with_units()
    i, j = where[(0, 1)], where[(0, 2)]
    k = where[(0, 3)]
    act = automorphism_from_generator_images(q8, [i, j], [j, k])
    return semidirect_product(q8, cyclic(3), ActionSpec((1,), (act,)))


_CATALOG_SPEC: list[tuple[str, int, Callable[[], FiniteGroup]]] = []


def _build_catalog_spec() -> None:
    for n in (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15):
        _CATALOG_SPEC.append((f"C{n}", n, (lambda m: lambda: cyclic(m))(n)))
    _CATALOG_SPEC.append(("C2xC2", 4, lambda: direct_product(cyclic(2), cyclic(2))))
    _CATALOG_SPEC.append(("C2xC4", 8, lambda: direct_product(cyclic(2), cyclic(4))))
    _CATALOG_SPEC.append(
        ("C2xC2xC2", 8, lambda: direct_product(direct_product(cyclic(2), cyclic(2)), cyclic(2)))
    )
    _CATALOG_SPEC.append(("C3xC3", 9, lambda: direct_product(cyclic(3), cyclic(3))))
    _CATALOG_SPEC.append(
        ("C2xC2xC3", 12, lambda: direct_product(direct_product(cyclic(2), cyclic(2)), cyclic(3)))
    )
    _CATALOG_SPEC.append(("C5xC5", 25, _c5c5))
    _CATALOG_SPEC.append(("S3", 6, lambda: _symmetric(3)))
    _CATALOG_SPEC.append(("D8", 8, lambda: _dihedral(8)))
    _CATALOG_SPEC.append(("Q8", 8, _quaternion))
    _CATALOG_SPEC.append(("D10", 10, lambda: _dihedral(10)))
    _CATALOG_SPEC.append(("A4", 12, _alternating4))
    _CATALOG_SPEC.append(("D12", 12, lambda: _dihedral(12)))
    _CATALOG_SPEC.append(("C7:C3", 21, _c7_c3))
    _CATALOG_SPEC.append(("S4", 24, lambda: _symmetric(4)))
    _CATALOG_SPEC.append(("C2xA4", 24, lambda: direct_product(cyclic(2), _alternating4())))
    _CATALOG_SPEC.append(("Q8:C3", 24, _q8_c3))
    _CATALOG_SPEC.append(("C2^3:C7", 56, _c2cube_c7))
    _CATALOG_SPEC.append(("A5", 60, _alternating5))
    _CATALOG_SPEC.append(("(C5xC5):C3", 75, _c5c5_c3))
    _CATALOG_SPEC.append(("(C5xC5):C15", 375, _c5c5_c15))
    _CATALOG_SPEC.sort(key=lambda t: (t[1], t[0]))


_build_catalog_spec()
_BUILDERS = {name: fn for name, _, fn in _CATALOG_SPEC}


def catalog_keys() -> list[str]:
    """Stable catalog keys in canonical order (ascending order, then key)."""
    return [name for name, _, _ in _CATALOG_SPEC]


def catalog_orders() -> dict[str, int]:
    return {name: order for name, order, _ in _CATALOG_SPEC}


def named(name: str) -> FiniteGroup:
    """Construct a catalog group by key; the construction is deterministic."""
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise GroupError(
            f"unknown catalog key {name!r}; available keys: "
            + ", ".join(catalog_keys())
        ) from None
    return builder()


def catalog() -> dict[str, FiniteGroup]:
    """Build the whole catalog, in canonical order."""
    return {name: named(name) for name in catalog_keys()}
