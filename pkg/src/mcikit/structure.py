"""Sylow subgroups, derived and upper central series, and related tests."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .group import (
    Group,
    GroupError,
    Subgroup,
    center,
    derived_subgroup,
    generated_subgroup,
    is_normal,
    preimage,
    quotient,
    trivial_subgroup,
    whole,
)
from .primality import factorize, is_prime, p_part, prime_divisors


@dataclass(frozen=True)
class SeriesProfile:
    kind: str                      # "derived" or "upperCentral"
    terms: tuple[Subgroup, ...]
    stabilized: bool = True

    @property
    def orders(self) -> list[int]:
        return [H.order for H in self.terms]


def p_element_part(G: Group, x: int, p: int) -> int:
    """``x`` raised to the p'-part of its order, which is a p-element."""
    o = G.element_order(x)
    return G.power(x, o // p_part(o, p))


def sylow(G: Group, p: int) -> Subgroup:
    """A Sylow p-subgroup, grown by adjoining p-elements of the normalizer.

    Candidates are scanned in increasing index order, so the result is
    reproducible.  Returns the trivial subgroup when ``p`` does not divide
    ``|G|``.
    """
    if not is_prime(p):
        raise GroupError(f"{p} is not prime")
    key = ("sylow", p)
    if key in G._cache:
        return G._cache[key]
    target = p_part(G.order, p)
    if target == G.order:
        G._cache[key] = whole(G)
        return G._cache[key]
    P = trivial_subgroup(G)
    orders = G.orders
    inv = G.inverses
    while P.order < target:
        gens = np.array(P.generators, dtype=np.int64)
        new = None
        for x in range(G.order):
            if P.mask[x]:
                continue
            y = p_element_part(G, x, p) if orders[x] % p == 0 else 0
            if y == 0 or P.mask[y]:
                continue
            # y must normalize P for P<y> to be a p-group
            if len(gens) and not P.mask[G.mul_many(G.mul_many(inv[y], gens), y)].all():
                continue
            new = y
            break
        if new is None:
            raise GroupError(f"Sylow climb stalled at order {P.order} (target {target})")
        P = generated_subgroup(G, list(P.generators) + [new])
    G._cache[key] = P
    return P


def sylow_subgroups(G: Group) -> dict[int, Subgroup]:
    return {p: sylow(G, p) for p in prime_divisors(G.order)}


def is_p_group(G: Group) -> bool:
    return G.order == 1 or len(factorize(G.order)) == 1


def group_prime(G: Group) -> int:
    """The prime ``p`` with ``|G|`` a power of ``p``; error otherwise."""
    f = factorize(G.order)
    if len(f) != 1:
        raise GroupError(f"order {G.order} is not a prime power")
    return next(iter(f))


def is_nilpotent(G: Group) -> bool:
    """Every Sylow subgroup is normal."""
    if "nilpotent" not in G._cache:
        G._cache["nilpotent"] = all(is_normal(G, P) for P in sylow_subgroups(G).values())
    return G._cache["nilpotent"]


def derived_series(G: Group) -> SeriesProfile:
    """``G >= G' >= G'' >= ...`` until the terms stop shrinking."""
    terms = [whole(G)]
    while True:
        H, emb = terms[-1].as_group()
        D = derived_subgroup(H)
        mask = np.zeros(G.order, dtype=bool)
        mask[emb[D.elements]] = True
        nxt = Subgroup(G, mask)
        if nxt.order == terms[-1].order:
            break
        terms.append(nxt)
    return SeriesProfile("derived", tuple(terms))


def is_soluble(G: Group) -> bool:
    if "soluble" not in G._cache:
        G._cache["soluble"] = derived_series(G).terms[-1].is_trivial()
    return G._cache["soluble"]


is_solvable = is_soluble


def upper_central_series(G: Group) -> SeriesProfile:
    """``1 = Z_0 <= Z_1 <= ...``, each term the preimage of the centre of ``G/Z_i``."""
    cached = G._cache.get("ucs")
    if cached is not None:
        return cached
    terms = [trivial_subgroup(G)]
    while True:
        q = quotient(G, terms[-1])
        nxt = preimage(G, q, center(q.quotient))
        if nxt.order == terms[-1].order:
            break
        terms.append(nxt)
    cached = SeriesProfile("upperCentral", tuple(terms))
    G._cache["ucs"] = cached
    return cached


def maximal_abelian_normal(G: Group, exp_bound: int | None = None) -> Subgroup:
    """A normal abelian subgroup of exponent at most ``exp_bound`` not contained
    in any larger one.

    Starts from the ``exp_bound``-torsion of the centre and adjoins single
    elements in index order.  Single-element extension suffices: if a larger
    such subgroup B exists, then B/A meets the centre of G/A, and any x there
    gives a normal abelian <A, x>.

    ``exp_bound`` defaults to ``p`` for odd ``p`` and 4 for ``p = 2``.
    """
    p = group_prime(G)
    if exp_bound is None:
        exp_bound = p if p > 2 else 4
    orders = G.orders
    Z = center(G)
    # torsion of an abelian group is a subgroup
    A = Subgroup(G, Z.mask & (exp_bound % orders == 0))
    changed = True
    while changed:
        changed = False
        for x in range(G.order):
            if A.mask[x] or exp_bound % orders[x]:
                continue
            B = generated_subgroup(G, list(A.generators) + [x])
            if not is_abelian_subgroup(G, B):
                continue
            if np.any(exp_bound % orders[B.elements]):
                continue
            if not is_normal(G, B):
                continue
            A = B
            changed = True
    return A


def is_abelian_subgroup(G: Group, H: Subgroup) -> bool:
    gens = np.array(H.generators, dtype=np.int64)
    if len(gens) < 2:
        return True
    a = G.mul_many(gens[:, None], gens[None, :])
    return bool(np.array_equal(a, a.T))
