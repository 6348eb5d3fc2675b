"""Concrete realizations of standard families, built without presentations.

Cyclic-by-cyclic groups are pairs ``(i, j)`` meaning ``a^i b^j`` with
``(i, j)(i', j') = (i + i' t^j mod n, j + j' mod m)``, so ``b a b^-1 = a^t``;
pair ``(i, j)`` has index ``i + n j``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .group import DEFAULT_CAP, TABLE_LIMIT, CapExceededError, Group, GroupError
from .primality import is_prime


@dataclass(frozen=True)
class SemidirectSpec:
    n: int      # order of the normal cyclic factor <a>
    m: int      # order of the acting cyclic factor <b>
    t: int      # b acts by a -> a^t

    def validate(self) -> None:
        if self.n < 1 or self.m < 1:
            raise GroupError("factor orders must be positive")
        if math.gcd(self.t, self.n) != 1:
            raise GroupError(f"t={self.t} is not a unit modulo {self.n}")
        if pow(self.t, self.m, self.n) != 1 % self.n:
            raise GroupError(f"t^m = {self.t}^{self.m} is not 1 modulo {self.n}")


def semidirect_cyclic(spec: SemidirectSpec, label: str | None = None,
                      cap: int = DEFAULT_CAP) -> Group:
    spec.validate()
    n, m, t = spec.n, spec.m, spec.t % spec.n if spec.n > 1 else 0
    order = n * m
    name = label if label is not None else f"C{n}:C{m}(t={spec.t})"
    if order > cap:
        raise CapExceededError(f"order {order} exceeds element cap {cap}")
    a_gen = 1 if n > 1 else None
    b_gen = n if m > 1 else None
    gens = [g for g in (a_gen, b_gen) if g is not None]
    if order <= TABLE_LIMIT:
        idx = np.arange(order)
        i, j = idx % n, idx // n
        tpow = np.array([pow(t, k, n) if n > 1 else 0 for k in range(m)], dtype=np.int64)
        ii = (i[:, None] + i[None, :] * tpow[j][:, None]) % n
        jj = (j[:, None] + j[None, :]) % m
        return Group(order, table=(ii + n * jj).astype(np.int32), label=name, generators=gens)
    # faithful action on Z_n (affine, inverse maps) plus Z_m (translation)
    tinv = pow(t, -1, n)
    pts_n = np.arange(n)
    pts_m = np.arange(m)
    perms = np.empty((order, n + m), dtype=np.int32)
    tinv_pow = [pow(tinv, k, n) for k in range(m)]
    for j in range(m):
        for i in range(n):
            perms[i + n * j, :n] = ((pts_n - i) * tinv_pow[j]) % n
            perms[i + n * j, n:] = n + (pts_m - j) % m
    lookup = {perms[k].tobytes(): k for k in range(order)}
    if len(lookup) != order:
        raise GroupError("permutation realization is not faithful")
    return Group(order, perms=perms, lookup=lookup, label=name, generators=gens)


def cyclic(n: int) -> Group:
    if n < 1:
        raise GroupError("cyclic group order must be positive")
    return semidirect_cyclic(SemidirectSpec(n, 1, 1), label=f"C{n}")


def elementary_abelian(p: int, r: int) -> Group:
    """``(C_p)^r``; element index is the base-p digit vector."""
    if not is_prime(p):
        raise GroupError(f"{p} is not prime")
    if r < 0:
        raise GroupError("rank must be non-negative")
    n = p ** r
    if n > TABLE_LIMIT:
        raise CapExceededError(f"order {n} is above the table limit {TABLE_LIMIT}")
    idx = np.arange(n)
    digits = np.stack([(idx // p ** k) % p for k in range(r)], axis=1) if r else np.zeros((n, 0), int)
    weights = p ** np.arange(r)
    sums = (digits[:, None, :] + digits[None, :, :]) % p
    t = (sums * weights).sum(axis=2) if r else np.zeros((1, 1), int)
    return Group(n, table=t.astype(np.int32), label=f"C{p}^{r}",
                 generators=[p ** k for k in range(r)])


def dihedral(order: int) -> Group:
    """Dihedral group of the given (even) order: rotations ``a``, reflection ``b``."""
    if order < 2 or order % 2:
        raise GroupError("dihedral group order must be even and at least 2")
    n = order // 2
    return semidirect_cyclic(SemidirectSpec(n, 2, -1 % n if n > 1 else 0), label=f"D{order}")


def quaternion8() -> Group:
    """``Q_8`` by its right regular action: points 1, i, j, k, -1, -i, -j, -k."""
    i_gen = [1, 4, 7, 2, 5, 0, 3, 6]
    j_gen = [2, 3, 4, 5, 6, 7, 0, 1]
    return Group.from_permutations([i_gen, j_gen], degree=8, label="Q8")


def nonabelian_pq(p: int, q: int) -> Group:
    """The non-abelian group ``C_q : C_p`` of order ``pq`` (needs ``q = 1 mod p``)."""
    if not (is_prime(p) and is_prime(q)) or p >= q:
        raise GroupError("need primes p < q")
    if (q - 1) % p:
        raise GroupError(f"no non-abelian group of order {p * q}: {q} is not 1 mod {p}")
    # an element of multiplicative order p modulo q
    for g in range(2, q):
        t = pow(g, (q - 1) // p, q)
        if t != 1:
            break
    return semidirect_cyclic(SemidirectSpec(q, p, t), label=f"C{q}:C{p}")


def modular_example(p: int, k: int, cap: int = DEFAULT_CAP) -> Group:
    """``<a, b | a^(p^(k+1)) = b^(p^(k+1)) = 1, a^b = a^(1 + p^k)>`` of order ``p^(2k+2)``."""
    if not is_prime(p):
        raise GroupError(f"{p} is not prime")
    if k < 1:
        raise GroupError("k must be at least 1")
    n = p ** (k + 1)
    G = semidirect_cyclic(SemidirectSpec(n, n, 1 + p ** k), label=f"M({p},{k})", cap=cap)
    if G.order != p ** (2 * k + 2):
        raise GroupError("construction has the wrong order")
    return G


def modular_generators(p: int, k: int) -> tuple[int, int]:
    """Indices of ``a`` and ``b`` in :func:`modular_example`."""
    return 1, p ** (k + 1)


FAMILIES = {
    "cyclic": (cyclic, 1),
    "elementary": (elementary_abelian, 2),
    "dihedral": (dihedral, 1),
    "quaternion": (quaternion8, 0),
    "pq": (nonabelian_pq, 2),
    "modular": (modular_example, 2),
    "semidirect": (lambda n, m, t: semidirect_cyclic(SemidirectSpec(n, m, t)), 3),
}


def construct(family: str, *params: int) -> Group:
    try:
        fn, arity = FAMILIES[family]
    except KeyError:
        raise GroupError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}") from None
    if len(params) != arity:
        raise GroupError(f"family {family!r} takes {arity} integer parameter(s)")
    return fn(*params)
