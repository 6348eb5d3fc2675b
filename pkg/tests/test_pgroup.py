import numpy as np
import pytest

import oracles
from mcikit.constructions import (
    cyclic,
    dihedral,
    elementary_abelian,
    modular_example,
    quaternion8,
)
from mcikit.group import GroupError, center, derived_subgroup, is_abelian
from mcikit.pgroup import (
    agemo,
    central_omega_level,
    commutator_set_sizes,
    exponent_of,
    frattini,
    is_camina,
    is_p_central,
    is_powerful,
    is_special,
    omega,
    profile,
)
from mcikit.structure import is_p_group


def _pgroups(catalog):
    return [G for G in catalog if G.order > 1 and is_p_group(G)]


def test_omega_examples():
    E = elementary_abelian(2, 3)
    assert omega(E, 0).is_trivial()
    assert omega(E, 1).is_whole()
    M = modular_example(3, 1)
    O1 = omega(M, 1)
    assert O1.order == 9 and O1 == center(M)
    # definitional: elements of order dividing 3, closed up
    assert set(O1.elements) == oracles.closure(M, [x for x in range(M.order)
                                                   if oracles.order_of(M, x) in (1, 3)])


def test_agemo_and_exponent_examples():
    E = elementary_abelian(5, 2)
    assert agemo(E, 0).is_whole()
    assert exponent_of(E) == 5
    Q = quaternion8()
    assert agemo(Q, 1).order == 2
    assert exponent_of(Q) == 4
    assert exponent_of(cyclic(12)) == 12


def test_p_central_examples():
    assert is_p_central(cyclic(27))
    assert not is_p_central(dihedral(8))
    assert is_p_central(modular_example(3, 2))
    assert is_p_central(modular_example(2, 2))


def test_powerful_and_frattini_examples():
    assert is_powerful(elementary_abelian(3, 2))
    assert not is_powerful(dihedral(8))
    assert frattini(quaternion8()).order == 2


def test_camina_and_special_examples():
    Q = quaternion8()
    assert is_camina(Q) and is_special(Q)
    assert is_camina(dihedral(8))
    M = modular_example(3, 1)
    assert center(M).order == 9 and derived_subgroup(M).order == 3
    assert not is_special(M)
    with pytest.raises(GroupError):
        is_camina(cyclic(8))


def test_non_p_groups_rejected():
    for fn in (lambda G: omega(G, 1), lambda G: agemo(G, 1), is_p_central, is_powerful, frattini):
        with pytest.raises(GroupError):
            fn(cyclic(6))
    with pytest.raises(GroupError):
        omega(cyclic(4), -1)


def test_central_omega_level():
    M = modular_example(3, 2)
    r = central_omega_level(M)
    assert omega(M, r) <= center(M)
    assert not omega(M, r + 1) <= center(M)
    assert r == 2


# -- catalog-wide -----------------------------------------------------------

def test_profile_towers(catalog):
    for G in _pgroups(catalog):
        prof = profile(G)
        p = prof.p
        assert G.order == p ** prof.order_exp
        assert exponent_of(G) == p ** prof.exponent_exp
        o, a = prof.omega_orders, prof.agemo_orders
        assert len(o) == len(a) == prof.exponent_exp + 1
        assert o[0] == 1 and o[-1] == G.order
        assert a[0] == G.order and a[-1] == 1
        assert all(x <= y for x, y in zip(o, o[1:]))
        assert all(x >= y for x, y in zip(a, a[1:]))


def test_omega_and_agemo_match_definitions(catalog):
    for G in _pgroups(catalog):
        if G.order > 64:
            continue
        p = profile(G).p
        for i in range(profile(G).exponent_exp + 1):
            small = [x for x in range(G.order) if p ** i % oracles.order_of(G, x) == 0]
            assert set(omega(G, i).elements) == oracles.closure(G, small)
            powers = {oracles.power(G, x, p ** i) for x in range(G.order)}
            assert set(agemo(G, i).elements) == oracles.closure(G, powers)


def test_camina_matches_commutator_scan(catalog):
    for G in _pgroups(catalog):
        if G.order > 64 or is_abelian(G):
            continue
        D = derived_subgroup(G)
        sizes = commutator_set_sizes(G)
        expected = all(sizes[g] == D.order for g in range(G.order) if g not in D)
        assert is_camina(G) == expected


def test_omega_index_monotone_on_p_central(catalog):
    seen = 0
    for G in _pgroups(catalog):
        if not is_p_central(G):
            continue
        seen += 1
        idx = profile(G).omega_indices
        for i in range(len(idx) - 1):
            assert idx[i + 1] <= idx[i], (G.label, idx)
    assert seen > 50


def test_p_central_torsion_facts(catalog):
    for G in _pgroups(catalog):
        if not is_p_central(G):
            continue
        p = profile(G).p
        for i in range(1, profile(G).exponent_exp + 1):
            O = omega(G, i)
            assert np.all(p ** i % G.orders[O.elements] == 0)
        assert G.order // agemo(G, 1).order <= omega(G, 1).order


def test_powerful_agemo_indices_decrease(catalog):
    seen = 0
    for G in _pgroups(catalog):
        if not is_powerful(G):
            continue
        seen += 1
        idx = profile(G).agemo_indices
        for i in range(len(idx) - 1):
            assert idx[i + 1] <= idx[i], (G.label, idx)
    assert seen > 50


def test_first_gap_at_least_p_squared(catalog):
    seen = 0
    extra = [modular_example(p, k) for p, k in ((2, 1), (2, 2), (3, 1), (3, 2), (5, 1))]
    for G in _pgroups(catalog) + extra:
        if is_abelian(G) or not is_p_central(G):
            continue
        seen += 1
        p = profile(G).p
        r = central_omega_level(G)
        assert omega(G, r + 1).order // omega(G, r).order >= p * p, G.label
    assert seen >= 10


def test_special_means_equal_subgroups(catalog):
    for G in _pgroups(catalog):
        if is_abelian(G):
            continue
        D, F, Z = derived_subgroup(G), frattini(G), center(G)
        assert D <= F
        assert is_special(G) == (D == F == Z)
