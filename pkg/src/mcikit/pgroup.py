"""Omega and agemo towers of p-groups and the predicates built on them."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .group import (
    Group,
    GroupError,
    Subgroup,
    center,
    derived_subgroup,
    generated_subgroup,
    is_abelian,
    join,
)
from .structure import group_prime


def _prime(G: Group) -> int:
    if G.order == 1:
        raise GroupError("the trivial group has no associated prime")
    return group_prime(G)


def omega(G: Group, i: int) -> Subgroup:
    """Subgroup generated by the elements of order at most ``p**i``."""
    if i < 0:
        raise GroupError("omega index must be non-negative")
    p = _prime(G)
    key = ("omega", i)
    if key not in G._cache:
        sel = np.flatnonzero((p ** i) % G.orders == 0)
        G._cache[key] = generated_subgroup(G, sel)
    return G._cache[key]


def agemo(G: Group, i: int) -> Subgroup:
    """Subgroup generated by the ``p**i``-th powers."""
    if i < 0:
        raise GroupError("agemo index must be non-negative")
    p = _prime(G)
    key = ("agemo", i)
    if key not in G._cache:
        powers = np.unique(G.power_many(G.all_elements(), p ** i))
        G._cache[key] = generated_subgroup(G, powers)
    return G._cache[key]


def exponent_of(G: Group) -> int:
    return int(np.lcm.reduce(G.orders))


def frattini(G: Group) -> Subgroup:
    """``G' G^p``, the Frattini subgroup of a p-group."""
    _prime(G)
    return join(G, derived_subgroup(G), agemo(G, 1))


def is_p_central(G: Group) -> bool:
    p = _prime(G)
    return omega(G, 1 if p > 2 else 2) <= center(G)


def is_powerful(G: Group) -> bool:
    p = _prime(G)
    return derived_subgroup(G) <= agemo(G, 1 if p > 2 else 2)


def commutator_set_sizes(G: Group) -> np.ndarray:
    """``|{[g, x] : x in G}|`` for every ``g``."""
    every = G.all_elements()
    inv = G.inverses
    out = np.empty(G.order, dtype=np.int64)
    for g in range(G.order):
        # [g, x] = g^-1 x^-1 g x
        comms = G.mul_many(inv[g], G.mul_many(G.mul_many(inv[every], g), every))
        out[g] = len(np.unique(comms))
    return out


def is_camina(G: Group) -> bool:
    """Every ``g`` outside ``G'`` has ``{[g, x] : x in G} = G'``."""
    _prime(G)
    if is_abelian(G):
        raise GroupError("Camina condition is only defined for non-abelian groups")
    D = derived_subgroup(G)
    every = G.all_elements()
    inv = G.inverses
    for g in np.flatnonzero(~D.mask):
        comms = np.unique(G.mul_many(inv[g], G.mul_many(G.mul_many(inv[every], g), every)))
        if len(comms) != D.order or not D.mask[comms].all():
            return False
    return True


def is_special(G: Group) -> bool:
    """``G' = Phi(G) = Z(G)``."""
    _prime(G)
    D = derived_subgroup(G)
    return D == frattini(G) == center(G)


@dataclass(frozen=True)
class PGroupProfile:
    p: int
    order_exp: int
    exponent_exp: int
    omega_orders: tuple[int, ...]
    agemo_orders: tuple[int, ...]
    flags: dict = field(default_factory=dict)

    @property
    def omega_indices(self) -> list[int]:
        """``|Omega_{i+1} : Omega_i|`` for consecutive terms."""
        o = self.omega_orders
        return [o[i + 1] // o[i] for i in range(len(o) - 1)]

    @property
    def agemo_indices(self) -> list[int]:
        a = self.agemo_orders
        return [a[i] // a[i + 1] for i in range(len(a) - 1)]


def _log(n: int, p: int) -> int:
    e = 0
    while n > 1:
        n //= p
        e += 1
    return e


def profile(G: Group) -> PGroupProfile:
    """Towers and predicates, computed once per group."""
    cached = G._cache.get("pgroup_profile")
    if cached is not None:
        return cached
    p = _prime(G)
    t = _log(exponent_of(G), p)
    omegas = tuple(omega(G, i).order for i in range(t + 1))
    agemos = tuple(agemo(G, i).order for i in range(t + 1))
    abelian = is_abelian(G)
    flags = {
        "pCentral": is_p_central(G),
        "powerful": is_powerful(G),
        "camina": False if abelian else is_camina(G),
        "special": False if abelian else is_special(G),
    }
    cached = PGroupProfile(p, _log(G.order, p), t, omegas, agemos, flags)
    G._cache["pgroup_profile"] = cached
    return cached


def central_omega_level(G: Group) -> int:
    """Largest ``r`` with ``Omega_r(G) <= Z(G)``."""
    Z = center(G)
    r = 0
    while omega(G, r + 1) <= Z and omega(G, r + 1).order < G.order:
        r += 1
    if omega(G, r + 1) <= Z:
        # G = Omega_{r+1} is central: abelian, every level is central
        return r + 1
    return r
