import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from mcikit.catalog import load_group
from mcikit.constructions import (
    SemidirectSpec,
    cyclic,
    dihedral,
    modular_example,
    quaternion8,
    semidirect_cyclic,
)
from mcikit.group import (
    CapExceededError,
    Group,
    GroupError,
    GroupMismatchError,
    Subgroup,
    center,
    centralizer,
    check_axioms,
    cyclic_subgroup,
    derived_subgroup,
    direct_product,
    generated_subgroup,
    is_abelian,
    is_normal,
    normalizer,
    quotient,
    trivial_subgroup,
    whole,
)
from mcikit.structure import sylow

S3_TEXT = "group S3\nperm 3\n2 3 1\n2 1 3\n"


@pytest.fixture(scope="module")
def s3():
    return load_group(S3_TEXT)


@pytest.fixture(scope="module")
def q8():
    return quaternion8()


@pytest.fixture(scope="module")
def d8():
    return dihedral(8)


def test_load_s3_from_permutations(s3):
    assert s3.order == 6


def test_load_trivial_table():
    G = load_group("group trivial\ntable 1\n0\n")
    assert G.order == 1
    assert is_abelian(G)


def test_q8_regular_action_closure_count(perm_fixtures):
    G = perm_fixtures["q8"]
    assert G.order == 8
    # independent closure over raw permutation tuples
    gens = [(1, 4, 7, 2, 5, 0, 3, 6), (2, 3, 4, 5, 6, 7, 0, 1)]
    seen = {tuple(range(8))}
    frontier = list(seen)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple(g[x[i]] for i in range(8))
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    assert len(seen) == 8


def test_element_orders():
    C6 = cyclic(6)
    assert C6.element_order(0) == 1
    assert C6.element_order(1) == 6


def test_q8_central_involution(q8):
    Z = center(q8)
    (z,) = [x for x in Z.elements if x != 0]
    assert q8.element_order(z) == 2
    assert oracles.order_of(q8, z) == 2


def test_element_order_divides_group_order(catalog):
    for G in catalog[:300]:
        assert np.all(G.order % G.orders == 0)


def test_centers(s3, q8):
    A = cyclic(12)
    assert center(A).is_whole()
    assert center(s3).order == 1 == len(oracles.center(s3))
    assert center(q8).order == 2 == len(oracles.center(q8))


def test_centralizer_identity_is_whole(s3):
    assert centralizer(s3, 0).is_whole()


def test_q8_noncentral_centralizer_is_cyclic(q8):
    Z = center(q8)
    for g in range(8):
        if g in Z:
            continue
        C = centralizer(q8, g)
        assert C == cyclic_subgroup(q8, g)
        assert C.order == 4


def test_d8_reflection_centralizer(d8):
    Z = center(d8)
    refl = [g for g in range(8) if g not in Z and d8.element_order(g) == 2]
    assert refl
    for g in refl:
        C = centralizer(d8, g)
        assert C.order == 4
        assert C.order // cyclic_subgroup(d8, g).order == 2
        assert set(C.elements) == oracles.centralizer(d8, g)


def test_generated_subgroups():
    G = cyclic(12)
    assert generated_subgroup(G, []).is_trivial()
    assert cyclic_subgroup(G, 2).order == 6


def test_modular_center_generated_by_p_powers():
    G = modular_example(3, 1)
    a, b = 1, 9
    H = generated_subgroup(G, [G.power(a, 3), G.power(b, 3)])
    assert H == center(G)
    assert H.order == 9
    assert set(center(G).elements) == oracles.center(G)


def test_normality(s3):
    assert is_normal(s3, center(s3))
    P2 = sylow(s3, 2)
    assert not is_normal(s3, P2)
    # conjugate scan: some conjugate of P2 differs from P2
    conj = {frozenset(int(s3.mul(s3.mul(s3.inv(x), h), x)) for h in P2.elements) for x in range(6)}
    assert len(conj) == 3
    P3 = sylow(s3, 3)
    assert normalizer(s3, P3).is_whole()
    assert normalizer(s3, P2) == P2


def test_quotients(q8, s3):
    q = quotient(s3, trivial_subgroup(s3))
    assert q.quotient.order == 6
    assert sorted(q.projection) == list(range(6))
    assert quotient(s3, whole(s3)).quotient.order == 1
    qz = quotient(q8, center(q8))
    assert qz.quotient.order == 4
    assert is_abelian(qz.quotient)
    with pytest.raises(GroupError):
        quotient(s3, sylow(s3, 2))


def test_derived(s3, q8):
    assert derived_subgroup(cyclic(9)).is_trivial()
    assert derived_subgroup(s3).order == 3
    assert set(derived_subgroup(s3).elements) == oracles.derived(s3)
    assert derived_subgroup(q8) == center(q8)
    assert derived_subgroup(q8).order == 2


def test_direct_product(s3):
    P = direct_product(s3, cyclic(5))
    assert P.order == 30
    check_axioms(P)
    assert center(P).order == 5


def test_cross_group_elements_rejected(s3, q8):
    with pytest.raises(GroupMismatchError):
        s3[1] * q8[1]
    with pytest.raises(GroupMismatchError):
        s3.mul(q8[1], 0)
    with pytest.raises(GroupMismatchError):
        is_normal(s3, center(q8))


def test_element_sugar(q8):
    g = q8[1]
    assert (g * g.inverse()).idx == 0
    assert (g ** g.order).idx == 0
    assert g.order == oracles.order_of(q8, 1)


def test_cap_exceeded():
    # S_8 has 40320 elements
    text = "group S8\nperm 8\n2 3 4 5 6 7 8 1\n2 1 3 4 5 6 7 8\n"
    with pytest.raises(CapExceededError):
        load_group(text, cap=1000)
    assert load_group(text).order == 40320


def test_large_group_uses_permutation_backing():
    G = load_group("group S8\nperm 8\n2 3 4 5 6 7 8 1\n2 1 3 4 5 6 7 8\n")
    assert G.table is None
    check_axioms(G, samples=2000)
    assert center(G).order == 1
    assert derived_subgroup(G).order == 20160
    assert sylow(G, 2).order == 128
    assert sylow(G, 7).order == 7
    # element 1 is the 8-cycle generator, element 2 the transposition
    assert G.element_order(1) == 8 and G.element_order(2) == 2
    assert centralizer(G, 1).order == 8
    assert centralizer(G, 2).order == 2 * math.factorial(6)


def test_table_identity_normalization():
    # C3 with the identity stored at index 2
    t = [[1, 2, 0], [2, 0, 1], [0, 1, 2]]
    G = Group.from_table(t)
    assert G.order == 3
    assert list(G.table[0]) == [0, 1, 2]
    check_axioms(G)


def test_bad_tables_rejected():
    with pytest.raises(GroupError):
        Group.from_table([[0, 1], [1, 1]])
    with pytest.raises(GroupError):
        Group.from_table([[1, 0], [0, 1], [0, 0]])
    # Latin square with identity but non-associative (order 5 loop)
    loop = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    G = Group.from_table(loop)
    with pytest.raises(GroupError):
        check_axioms(G)


def test_subgroup_rejects_non_lagrange_subset(s3):
    mask = np.zeros(6, dtype=bool)
    mask[[0, 1, 2, 3]] = True
    with pytest.raises(GroupError):
        Subgroup(s3, mask)


# -- catalog-wide properties ------------------------------------------------

def test_axioms_hold_on_catalog(catalog, perm_fixtures):
    for G in list(catalog) + list(perm_fixtures.values()):
        check_axioms(G)


def _is_closed(G, members):
    members = set(int(x) for x in members)
    return all(G.mul(a, b) in members for a in members for b in members)


def test_subgroups_satisfy_lagrange_and_closure(catalog):
    for G in catalog:
        if G.order > 512 or G.order < 2:
            continue
        subs = [center(G), derived_subgroup(G), centralizer(G, G.order - 1),
                cyclic_subgroup(G, G.order // 2)]
        for H in subs:
            assert G.order % H.order == 0
            if G.order <= 64:
                assert _is_closed(G, H.elements)
            assert generated_subgroup(G, H.generators) == H


def test_quotient_is_homomorphism(catalog):
    for G in catalog:
        if G.order > 512 or G.order < 2:
            continue
        for N in (center(G), derived_subgroup(G)):
            q = quotient(G, N)
            Q, proj = q.quotient, q.projection
            assert Q.order == G.order // N.order
            every = np.arange(G.order)
            lhs = proj[G.table[every[:, None], every[None, :]]]
            rhs = Q.table[proj[:, None], proj[None, :]]
            assert np.array_equal(lhs, rhs)
            assert np.all(np.bincount(proj) == N.order)


def test_centralizer_contains_cyclic_and_center(catalog):
    for G in catalog:
        if G.order > 200:
            continue
        Z = center(G)
        for g in range(G.order):
            C = centralizer(G, g)
            assert Z <= C
            assert cyclic_subgroup(G, g) <= C


def test_catalog_centers_match_gap(catalog, gap_invariants):
    for G in catalog:
        assert center(G).order == int(gap_invariants[G.label]["centre"])
        assert derived_subgroup(G).order == int(gap_invariants[G.label]["derived"])


# -- randomized constructions ---------------------------------------------

@st.composite
def semidirect_specs(draw):
    n = draw(st.integers(1, 30))
    m = draw(st.integers(1, 12))
    units = [t for t in range(max(n, 1)) if math.gcd(t, n) == 1 and pow(t, m, n) == 1 % n]
    if not units:
        units = [1]
    t = draw(st.sampled_from(units))
    return SemidirectSpec(n, m, t)


@settings(max_examples=60, deadline=None)
@given(semidirect_specs(), st.data())
def test_random_semidirect_products(spec, data):
    G = semidirect_cyclic(spec)
    assert G.order == spec.n * spec.m
    check_axioms(G)
    x = data.draw(st.integers(0, G.order - 1))
    y = data.draw(st.integers(0, G.order - 1))
    assert G.mul(x, G.inv(x)) == 0
    assert G.element_order(x) == oracles.order_of(G, x)
    assert set(generated_subgroup(G, [x, y]).elements) == oracles.closure(G, [x, y])
    assert set(centralizer(G, x).elements) == oracles.centralizer(G, x)
    if G.order <= 60:
        assert set(center(G).elements) == oracles.center(G)
        assert set(derived_subgroup(G).elements) == oracles.derived(G)
