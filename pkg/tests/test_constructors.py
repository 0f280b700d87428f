from fractions import Fraction

import pytest

from commprob.constructors import (
    ActionSpec,
    _semidirect_with_maps,
    automorphism_from_generator_images,
    automorphism_group,
    catalog_keys,
    catalog_orders,
    cyclic,
    direct_product,
    named,
    semidirect_product,
    trivial_action,
)
from commprob.isomorphism import are_isomorphic
from commprob.perm import GroupError, Permutation
from commprob.probability import class_count, commuting_probability
from commprob.structure import (
    Subgroup,
    find_complement,
    is_normal,
)

from oracles import gl_order


def test_cyclic_small():
    assert cyclic(1).order == 1
    assert cyclic(2).order == 2
    with pytest.raises(GroupError):
        cyclic(0)


def test_cyclic_15_element_orders():
    orders = sorted(p.order() for p in cyclic(15).elements)
    assert orders == [1] + [3] * 2 + [5] * 4 + [15] * 8


def test_direct_product_with_trivial(cat):
    G = direct_product(cat["A4"], cyclic(1))
    assert G.order == 12
    assert are_isomorphic(G, cat["A4"])


def test_klein_has_exponent_two(cat):
    assert all(p.order() <= 2 for p in cat["C2xC2"].elements)


def test_c2_a4_product(cat):
    G = cat["C2xA4"]
    assert G.order == 24
    assert class_count(G) == 8
    assert commuting_probability(G) == Fraction(1, 3)


def test_direct_product_projections(cat):
    A, B = cat["S3"], cat["C4"]
    G = direct_product(A, B)
    # restricting each element to the two point blocks recovers A and B
    left = {p.images[: A.degree] for p in G.elements}
    right = {tuple(v - A.degree for v in p.images[A.degree :]) for p in G.elements}
    assert left == {a.images for a in A.elements}
    assert right == {b.images for b in B.elements}


def test_automorphism_groups_small(cat):
    aut_v4 = automorphism_group(cat["C2xC2"])
    assert aut_v4.order == 6
    assert are_isomorphic(aut_v4, cat["S3"])
    assert automorphism_group(cyclic(2)).order == 1
    assert automorphism_group(cat["C3xC3"]).order == 48


def test_automorphism_group_elementary_abelian_orders(cat):
    cases = {
        (2, 2): cat["C2xC2"],
        (3, 2): cat["C3xC3"],
        (2, 3): cat["C2xC2xC2"],
        (5, 2): cat["C5xC5"],
    }
    for (p, k), G in cases.items():
        assert automorphism_group(G).order == gl_order(p, k), (p, k)


def test_automorphism_cap(cat):
    with pytest.raises(GroupError):
        automorphism_group(cat["A5"])


def test_trivial_action_gives_direct_product(cat):
    for A, B in ((cyclic(3), cyclic(4)), (cat["C2xC2"], cyclic(3))):
        sd = semidirect_product(A, B, trivial_action(A, B))
        dp = direct_product(A, B)
        assert sd.order == dp.order
        assert are_isomorphic(sd, dp)


def test_semidirect_klein_c3_is_a4(cat):
    v4 = cat["C2xC2"]
    act = automorphism_from_generator_images(v4, [1, 2], [2, 3])
    G = semidirect_product(v4, cyclic(3), ActionSpec((1,), (act,)))
    assert G.order == 12
    assert are_isomorphic(G, cat["A4"])


def test_semidirect_embeds_normal_factor(cat):
    v4 = cat["C2xC2"]
    act = automorphism_from_generator_images(v4, [1, 2], [2, 3])
    G, n_embed, h_embed = _semidirect_with_maps(v4, cyclic(3), ActionSpec((1,), (act,)))
    N = Subgroup(G, n_embed)
    assert is_normal(G, N)
    H = find_complement(G, N)
    assert H is not None and H.order == 3
    assert sorted(h_embed) == sorted(H.member_indices)


def test_semidirect_rejects_non_automorphism(cat):
    v4 = cat["C2xC2"]
    broken = (1, 0, 2, 3)  # a bijection that moves the identity
    with pytest.raises(GroupError) as err:
        semidirect_product(v4, cyclic(2), ActionSpec((1,), (broken,)))
    assert "automorphism" in str(err.value)


def test_semidirect_rejects_wrong_order_action(cat):
    # an order-2 automorphism assigned to a generator of C3 cannot extend
    v4 = cat["C2xC2"]
    swap = automorphism_from_generator_images(v4, [1, 2], [2, 1])
    with pytest.raises(GroupError) as err:
        semidirect_product(v4, cyclic(3), ActionSpec((1,), (swap,)))
    assert "homomorphism" in str(err.value)


def test_semidirect_rejects_non_generating_set(cat):
    v4 = cat["C2xC2"]
    c4 = cyclic(4)
    ident = tuple(range(4))
    with pytest.raises(GroupError) as err:
        semidirect_product(v4, c4, ActionSpec((2,), (ident,)))
    assert "generate" in str(err.value)


def test_named_examples():
    a4 = named("A4")
    assert a4.order == 12
    assert commuting_probability(a4) == Fraction(1, 3)
    g56 = named("C2^3:C7")
    assert g56.order == 56
    assert commuting_probability(g56) == Fraction(1, 7)
    g75 = named("(C5xC5):C3")
    assert g75.order == 75
    assert class_count(g75) == 11
    assert commuting_probability(g75) == Fraction(11, 75)


def test_named_order_375():
    G = named("(C5xC5):C15")
    assert G.order == 375
    assert commuting_probability(G) == Fraction(23, 375)


def test_named_unknown_lists_keys():
    with pytest.raises(GroupError) as err:
        named("M11")
    assert "A4" in str(err.value)


def test_catalog_orders_match(cat):
    orders = catalog_orders()
    for name, G in cat.items():
        assert G.order == orders[name], name


def test_catalog_canonical_order():
    keys = catalog_keys()
    orders = catalog_orders()
    assert keys == sorted(keys, key=lambda k: (orders[k], k))
    assert len(keys) >= 20
    assert orders[keys[0]] == 1 and orders[keys[-1]] == 375


def test_catalog_regeneration_deterministic(cat):
    for name in catalog_keys():
        fresh = named(name)
        assert [p.images for p in fresh.elements] == [
            p.images for p in cat[name].elements
        ], name


def test_quaternion_element_orders(cat):
    orders = sorted(p.order() for p in cat["Q8"].elements)
    assert orders == [1, 2] + [4] * 6


def test_sl23_shape(cat):
    G = cat["Q8:C3"]
    assert G.order == 24
    assert class_count(G) == 7
    assert commuting_probability(G) == Fraction(7, 24)


def test_fixed_point_free_c3_actions_agree(cat):
    # conjugate the order-3 action by the swap of the two C5 factors; the
    # resulting group must be isoclinic (in fact isomorphic) to the original
    from commprob.isoclinism import are_isoclinic

    n55 = direct_product(cyclic(5), cyclic(5))
    e1 = n55.index_of(Permutation([1, 2, 3, 4, 0, 5, 6, 7, 8, 9]))
    e2 = n55.index_of(Permutation([0, 1, 2, 3, 4, 6, 7, 8, 9, 5]))
    inv12 = n55.inv(n55.mul(e1, e2))
    act = automorphism_from_generator_images(n55, [e1, e2], [e2, inv12])
    swap = automorphism_from_generator_images(n55, [e1, e2], [e2, e1])
    conj = tuple(swap[act[swap[i]]] for i in range(n55.order))
    g_a = semidirect_product(n55, cyclic(3), ActionSpec((1,), (act,)))
    g_b = semidirect_product(n55, cyclic(3), ActionSpec((1,), (conj,)))
    assert are_isomorphic(g_a, g_b)
    assert are_isoclinic(g_a, cat["(C5xC5):C3"])


def test_order_cap_on_products():
    with pytest.raises(GroupError):
        direct_product(cyclic(100), cyclic(100), max_order=5000)
