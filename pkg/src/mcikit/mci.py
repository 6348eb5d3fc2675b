"""Maximum centralizer index, bad primes, prime graph and the bound ledger.

For a non-abelian group, ``mci(G)`` is the largest index ``|C_G(g) : <g>|``
over non-central ``g``.  Centralizer orders come from conjugacy class sizes
(``|C_G(g)| = |G| / |g^G|``); the classes are orbits of conjugation by the
generators.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .group import (
    Element,
    Group,
    GroupError,
    Subgroup,
    center,
    centralizer,
    image,
    is_abelian,
    quotient,
)
from .primality import factorize, primes_up_to
from .structure import is_nilpotent, is_p_group, is_soluble, sylow, sylow_subgroups

# |pi*| = 5 forces pi* = {23, 29, 31, 37, 43}; folded into the general order bound
J4_BAD_PRIME_PRODUCT = 23 * 29 * 31 * 37 * 43


class AbelianGroupError(GroupError):
    """The invariant quantifies over non-central elements, and there are none."""


def conjugacy_classes(G: Group) -> np.ndarray:
    """Class id of every element; ids are numbered by smallest member."""
    cached = G._cache.get("classes")
    if cached is not None:
        return cached
    n = G.order
    every = G.all_elements()
    rows, cols = [], []
    for g in G.gens:
        rows.append(every)
        cols.append(np.asarray(G.conjugate_many(every, g), dtype=np.int64))
    if rows:
        r = np.concatenate(rows)
        c = np.concatenate(cols)
        graph = coo_matrix((np.ones(len(r), dtype=np.int8), (r, c)), shape=(n, n))
        _, labels = connected_components(graph, directed=True, connection="weak")
    else:
        labels = np.zeros(n, dtype=np.int64)
    # renumber so class ids follow the smallest element of each class
    first = {}
    ids = np.empty(n, dtype=np.int64)
    for x, lab in enumerate(labels):
        ids[x] = first.setdefault(int(lab), len(first))
    ids.setflags(write=False)
    G._cache["classes"] = ids
    return ids


def centralizer_orders(G: Group) -> np.ndarray:
    """``|C_G(g)|`` for every ``g`` (orbit-stabilizer on conjugacy classes)."""
    ids = conjugacy_classes(G)
    sizes = np.bincount(ids)
    return G.order // sizes[ids]


@dataclass(frozen=True)
class MciReport:
    m: int
    witness: Element
    is_abelian: bool = False
    k_exp: int | None = None


def mci(G: Group) -> MciReport:
    """Maximum centralizer index with the smallest-index witness."""
    if is_abelian(G):
        raise AbelianGroupError(f"{G.label or 'group'} is abelian; mci is undefined")
    cached = G._cache.get("mci")
    if cached is not None:
        return cached
    ratios = centralizer_orders(G) // G.orders
    noncentral = ~center(G).mask
    vals = np.where(noncentral, ratios, 0)
    w = int(np.argmax(vals))
    m = int(vals[w])
    k = None
    f = factorize(G.order)
    if len(f) == 1:
        p = next(iter(f))
        k = round(math.log(m, p)) if m > 1 else 0
        if p ** k != m:
            raise GroupError(f"mci {m} of a {p}-group is not a power of {p}")
    report = MciReport(m=m, witness=G.element(w), k_exp=k)
    G._cache["mci"] = report
    return report


def mci_value(G: Group) -> int:
    return mci(G).m


@dataclass(frozen=True)
class PrimeGraph:
    vertices: tuple[int, ...]
    edges: frozenset[tuple[int, int]]
    components: tuple[tuple[int, ...], ...]
    isolated: tuple[int, ...]

    def adjacent(self, p: int, q: int) -> bool:
        return (min(p, q), max(p, q)) in self.edges


def prime_graph(G: Group) -> PrimeGraph:
    """Primes of ``|G|``; ``p - q`` is an edge iff some element has order ``pq``."""
    if G.order == 1:
        raise GroupError("the trivial group has no prime graph")
    verts = sorted(factorize(G.order))
    edges = set()
    for o in np.unique(G.orders):
        ps = sorted(factorize(int(o))) if o > 1 else []
        for i, p in enumerate(ps):
            for q in ps[i + 1:]:
                edges.add((p, q))
    pos = {p: i for i, p in enumerate(verts)}
    k = len(verts)
    if edges:
        r = [pos[p] for p, _ in edges]
        c = [pos[q] for _, q in edges]
        adj = coo_matrix((np.ones(len(r)), (r, c)), shape=(k, k))
    else:
        adj = coo_matrix((k, k))
    _, labels = connected_components(adj, directed=False)
    comps: dict[int, list[int]] = {}
    for p, lab in zip(verts, labels):
        comps.setdefault(int(lab), []).append(p)
    components = tuple(sorted(tuple(c) for c in comps.values()))
    degree = {p: 0 for p in verts}
    for p, q in edges:
        degree[p] += 1
        degree[q] += 1
    isolated = tuple(p for p in verts if degree[p] == 0)
    return PrimeGraph(tuple(verts), frozenset(edges), components, isolated)


def is_bad_prime(G: Group, p: int) -> bool:
    """Sylow p-subgroup P has order p and ``C_G(P) = P Z(G)``."""
    f = factorize(G.order)
    if f.get(p) != 1:
        return False
    P = sylow(G, p)
    Z = center(G)
    pz = P.order * Z.order // (P & Z).order
    return centralizer(G, P).order == pz


def bad_primes(G: Group) -> list[int]:
    """The set of bad primes for mci, ascending."""
    if is_abelian(G):
        raise AbelianGroupError("bad primes are defined for non-abelian groups")
    cached = G._cache.get("bad_primes")
    if cached is None:
        cached = [p for p in sorted(factorize(G.order)) if is_bad_prime(G, p)]
        G._cache["bad_primes"] = cached
    return list(cached)


def isolated_primes_of_first_power(G: Group) -> list[int]:
    f = factorize(G.order)
    iso = prime_graph(G).isolated
    return [p for p in iso if f[p] == 1]


def isolated_equivalence_check(G: Group) -> bool:
    """For centerless G: bad primes are exactly the isolated primes dividing ``|G|`` once."""
    if center(G).order != 1:
        raise GroupError("isolated-vertex check needs a group with trivial centre")
    if G.order == 1:
        return True
    return bad_primes(G) == isolated_primes_of_first_power(G)


def reduction_check(G: Group) -> bool:
    """Bad primes survive to ``G/Z(G)``, which is centerless, with self-centralizing Sylows."""
    bad = bad_primes(G)
    if not bad:
        raise GroupError("reduction check needs a non-empty set of bad primes")
    q = quotient(G, center(G))
    Q = q.quotient
    if center(Q).order != 1:
        return False
    if not set(bad) <= set(bad_primes(Q)):
        return False
    for p in bad:
        Pbar = image(G, q, sylow(G, p))
        if centralizer(Q, Pbar) != Pbar:
            return False
    return True


def f0_explicit(m: int) -> int:
    """``prod_{p <= max(m, 2)} 8 m^4``: a bound for the order of ``G`` outside its bad primes."""
    if m < 1:
        raise ValueError("m must be positive")
    return (8 * m ** 4) ** len(primes_up_to(max(m, 2)))


def f1_explicit(m: int) -> int:
    return f0_explicit(m)


def is_q8_like(G: Group) -> bool:
    """Order 8, non-abelian, a single involution: the invariants of ``Q_8``."""
    return (G.order == 8 and not is_abelian(G)
            and int(np.count_nonzero(G.orders == 2)) == 1)


@dataclass(frozen=True)
class ClaimRecord:
    claim_id: str
    lhs: int
    rhs: int
    holds: bool
    exemption: str | None = None
    detail: str = ""


@dataclass
class BoundLedger:
    m: int
    pi_star: list[int]
    f0: int
    f1: int
    product_pi_star: int
    records: list[ClaimRecord] = field(default_factory=list)

    def claim(self, claim_id: str) -> list[ClaimRecord]:
        return [r for r in self.records if r.claim_id == claim_id]

    def holds(self, claim_id: str | None = None) -> bool:
        recs = self.records if claim_id is None else self.claim(claim_id)
        return all(r.holds for r in recs)


def build_ledger(G: Group) -> BoundLedger:
    """Evaluate the order bounds TA, P1, T2, TB and PS on a non-abelian group."""
    rep = mci(G)
    m = rep.m
    bad = bad_primes(G)
    prod = math.prod(bad)
    f0 = f0_explicit(m)
    ledger = BoundLedger(m=m, pi_star=bad, f0=f0, f1=f1_explicit(m), product_pi_star=prod)
    recs = ledger.records
    n = G.order
    if is_p_group(G):
        p = next(iter(factorize(n)))
        rhs = p ** (2 * rep.k_exp + 2)
        ok = n <= rhs
        exempt = None
        if not ok and is_q8_like(G):
            ok, exempt = True, "Q8"
        recs.append(ClaimRecord("TA", n, rhs, ok, exempt, f"p={p} k={rep.k_exp}"))
    for p, P in sylow_subgroups(G).items():
        H, _ = P.as_group()
        if is_abelian(H):
            continue
        rhs = 8 * m ** 4
        recs.append(ClaimRecord("P1", P.order, rhs, P.order <= rhs, None, f"p={p}"))
    if is_nilpotent(G):
        rhs = 8 * m ** 5
        recs.append(ClaimRecord("T2", n, rhs, n <= rhs))
    rhs = prod * f0
    recs.append(ClaimRecord("TB", n, rhs, n <= rhs, None, f"pi*={bad}"))
    sol = is_soluble(G)
    cap = 2 if sol else 5
    recs.append(ClaimRecord("PS", len(bad), cap, len(bad) <= cap, None,
                            "soluble" if sol else "insoluble"))
    return ledger


def class_order_bound(G: Group) -> int:
    """The order bound for the group's class: nilpotent, soluble, or general."""
    led = build_ledger(G)
    if is_nilpotent(G):
        return led.f1
    if len(led.pi_star) == 5:
        return J4_BAD_PRIME_PRODUCT * led.f1
    return led.product_pi_star * led.f1
