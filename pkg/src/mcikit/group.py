"""Finite groups on dense element indices.

Every group has elements ``0..n-1`` with the identity pinned to index 0.
Multiplication is backed by a dense Cayley table when ``n <= TABLE_LIMIT``
and by stored permutation images (plus a hash from image tuple to index)
above that.  All higher-level algorithms go through the vectorized
primitives ``mul_many``, ``inverses`` and ``orders`` so that both backings
behave identically.
"""
from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np

TABLE_LIMIT = 4096
DEFAULT_CAP = 50_000


class GroupError(ValueError):
    """Invalid group data or a violated precondition."""


class GroupMismatchError(GroupError):
    """An element or subgroup was used with a group it does not belong to."""


class CapExceededError(GroupError):
    """A closure grew past the configured element cap."""


def _perm_key(row: np.ndarray) -> bytes:
    return row.tobytes()


class Group:
    """A finite group with a total multiplication oracle on ``range(order)``.

    Use :meth:`from_table` or :meth:`from_permutations` rather than calling
    the constructor directly.
    """

    def __init__(self, order, *, table=None, perms=None, lookup=None,
                 label="", generators=()):
        self.order = int(order)
        self.label = label
        self.table = table
        self._perms = perms
        self._lookup = lookup
        self.generators = tuple(int(g) for g in generators)
        self._cache: dict = {}

    # -- construction --------------------------------------------------

    @classmethod
    def from_table(cls, table, label: str = "", generators=(), check: bool = True) -> Group:
        """Build a group from a Cayley table (``table[r][c] = r*c``).

        The identity is located and moved to index 0 if necessary.
        """
        t = np.asarray(table, dtype=np.int32)
        if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
            raise GroupError("Cayley table must be a non-empty square array")
        n = t.shape[0]
        if t.min() < 0 or t.max() >= n:
            raise GroupError("Cayley table entries fall outside [0, n)")
        ids = [e for e in range(n)
               if np.array_equal(t[e], np.arange(n)) and np.array_equal(t[:, e], np.arange(n))]
        if not ids:
            raise GroupError("Cayley table has no identity element")
        e = ids[0]
        if e != 0:
            swap = np.arange(n)
            swap[0], swap[e] = e, 0
            # relabel: new index k corresponds to old element swap[k]
            t = swap[t[np.ix_(swap, swap)]].astype(np.int32)
            generators = [int(swap[g]) for g in generators]
        if check:
            _check_table(t)
        return cls(n, table=t, label=label, generators=generators)

    @classmethod
    def from_permutations(cls, gens: Sequence[Sequence[int]], degree: int | None = None,
                          label: str = "", cap: int = DEFAULT_CAP) -> Group:
        """Close 0-based permutation images under multiplication (BFS).

        Products compose left to right: ``(x*y)[i] = y[x[i]]``.  Element 0 is
        the identity and indices follow BFS discovery order.
        """
        if degree is None:
            degree = len(gens[0]) if gens else 1
        dtype = np.int32
        gen_arr = []
        for g in gens:
            a = np.asarray(g, dtype=dtype)
            if a.shape != (degree,) or not np.array_equal(np.sort(a), np.arange(degree)):
                raise GroupError(f"not a permutation of {degree} points: {list(g)}")
            gen_arr.append(a)
        ident = np.arange(degree, dtype=dtype)
        elems = [ident]
        lookup = {_perm_key(ident): 0}
        parent = [(-1, -1)]
        gen_idx = []
        for a in gen_arr:
            k = _perm_key(a)
            if k not in lookup:
                lookup[k] = len(elems)
                elems.append(a)
                parent.append((0, len(gen_idx)))
            gen_idx.append(lookup[k])
        # right-multiplication columns, one per generator
        right = [np.full(cap + 1, -1, dtype=np.int64) for _ in gen_arr]
        head = 0
        while head < len(elems):
            x = elems[head]
            for s, a in enumerate(gen_arr):
                y = a[x]
                k = _perm_key(y)
                j = lookup.get(k)
                if j is None:
                    j = len(elems)
                    if j >= cap:
                        raise CapExceededError(f"closure exceeds element cap {cap}")
                    lookup[k] = j
                    elems.append(y)
                    parent.append((head, s))
                right[s][head] = j
            head += 1
        n = len(elems)
        perms = np.stack(elems)
        right = [r[:n] for r in right]
        table = None
        if n <= TABLE_LIMIT:
            table = np.empty((n, n), dtype=np.int32)
            table[:, 0] = np.arange(n)
            for y in range(1, n):
                p, s = parent[y]
                table[:, y] = right[s][table[:, p]]
        gens_out = []
        for g in gen_idx:
            if g != 0 and g not in gens_out:
                gens_out.append(g)
        return cls(n, table=table, perms=perms, lookup=lookup, label=label,
                   generators=gens_out)

    # -- element-level API ---------------------------------------------

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"<Group {self.label or '?'} of order {self.order}>"

    def __getitem__(self, idx: int) -> Element:
        return self.element(idx)

    def element(self, idx: int) -> Element:
        idx = int(idx)
        if not 0 <= idx < self.order:
            raise GroupError(f"element index {idx} out of range for order {self.order}")
        return Element(self, idx)

    def index(self, g) -> int:
        """Normalize an ``int`` or :class:`Element` to an index of this group."""
        if isinstance(g, Element):
            if g.group is not self:
                raise GroupMismatchError(f"element of {g.group!r} used in {self!r}")
            return g.idx
        g = int(g)
        if not 0 <= g < self.order:
            raise GroupError(f"element index {g} out of range for order {self.order}")
        return g

    @property
    def identity(self) -> int:
        return 0

    @property
    def degree(self) -> int | None:
        return None if self._perms is None else self._perms.shape[1]

    def mul(self, x, y) -> int:
        x, y = self.index(x), self.index(y)
        if self.table is not None:
            return int(self.table[x, y])
        return self._lookup[_perm_key(self._perms[y][self._perms[x]])]

    def mul_many(self, xs, ys) -> np.ndarray:
        """Elementwise (broadcast) products of index arrays."""
        xs, ys = np.broadcast_arrays(np.asarray(xs), np.asarray(ys))
        if self.table is not None:
            return self.table[xs, ys]
        shape = xs.shape
        xs, ys = xs.ravel(), ys.ravel()
        rows = np.take_along_axis(self._perms[ys], self._perms[xs], axis=1)
        lk = self._lookup
        return np.fromiter((lk[_perm_key(r)] for r in rows), dtype=np.int64,
                           count=len(xs)).reshape(shape)

    def inv(self, x) -> int:
        return int(self.inverses[self.index(x)])

    def power(self, x, k: int) -> int:
        x = self.index(x)
        k = int(k) % self.element_order(x)
        result, base = 0, x
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def power_many(self, xs, k: int) -> np.ndarray:
        xs = np.asarray(xs)
        result = np.zeros_like(xs)
        base = xs.copy()
        k = int(k)
        while k:
            if k & 1:
                result = self.mul_many(result, base)
            base = self.mul_many(base, base)
            k >>= 1
        return result

    def element_order(self, x) -> int:
        return int(self.orders[self.index(x)])

    def commutator(self, x, y) -> int:
        """``[x, y] = x^-1 y^-1 x y``."""
        x, y = self.index(x), self.index(y)
        inv = self.inverses
        return self.mul(self.mul(inv[x], inv[y]), self.mul(x, y))

    def conjugate_many(self, xs, g) -> np.ndarray:
        """``g^-1 x g`` for each x in ``xs``."""
        g = self.index(g)
        return self.mul_many(self.mul_many(self.inverses[g], xs), g)

    # -- cached whole-group data --------------------------------------

    @property
    def inverses(self) -> np.ndarray:
        inv = self._cache.get("inverses")
        if inv is None:
            if self.table is not None:
                r, c = np.nonzero(self.table == 0)
                inv = np.empty(self.order, dtype=np.int64)
                inv[r] = c
            else:
                inverse_perms = np.argsort(self._perms, axis=1).astype(self._perms.dtype)
                inv = np.fromiter((self._lookup[_perm_key(r)] for r in inverse_perms),
                                  dtype=np.int64, count=self.order)
            inv.setflags(write=False)
            self._cache["inverses"] = inv
        return inv

    @property
    def orders(self) -> np.ndarray:
        """Element orders, indexed by element."""
        out = self._cache.get("orders")
        if out is None:
            n = self.order
            out = np.zeros(n, dtype=np.int64)
            if self.table is not None:
                idx = np.arange(n)
                cur = idx.copy()
                k = 1
                pending = np.ones(n, dtype=bool)
                while pending.any():
                    hit = pending & (cur == 0)
                    out[hit] = k
                    pending &= ~hit
                    cur = self.table[cur, idx]
                    k += 1
            else:
                for i, row in enumerate(self._perms):
                    out[i] = _perm_order(row)
            out.setflags(write=False)
            self._cache["orders"] = out
        return out

    @property
    def gens(self) -> tuple[int, ...]:
        """A generating set: the stored one, or a greedy one in index order."""
        g = self._cache.get("gens")
        if g is None:
            if self.generators:
                g = self.generators
            else:
                g = _greedy_generators(self, np.ones(self.order, dtype=bool))
            self._cache["gens"] = g
        return g

    def permutation_generators(self) -> tuple[list[np.ndarray], int]:
        """Generators as 0-based permutation images (regular action if table-only)."""
        if self._perms is not None:
            return [self._perms[g] for g in self.gens], self._perms.shape[1]
        return [self.table[:, g].copy() for g in self.gens], self.order

    def all_elements(self) -> np.ndarray:
        return np.arange(self.order)


@dataclass(frozen=True, eq=False)
class Element:
    """Reference to an element of a specific group."""

    group: Group
    idx: int

    def _other(self, other) -> int:
        if isinstance(other, Element) and other.group is not self.group:
            raise GroupMismatchError("elements belong to different groups")
        return self.group.index(other)

    def __mul__(self, other) -> Element:
        return Element(self.group, self.group.mul(self.idx, self._other(other)))

    def __pow__(self, k: int) -> Element:
        return Element(self.group, self.group.power(self.idx, k))

    def inverse(self) -> Element:
        return Element(self.group, self.group.inv(self.idx))

    @property
    def order(self) -> int:
        return self.group.element_order(self.idx)

    def __eq__(self, other) -> bool:
        return isinstance(other, Element) and other.group is self.group and other.idx == self.idx

    def __hash__(self) -> int:
        return hash((id(self.group), self.idx))

    def __int__(self) -> int:
        return self.idx

    def __index__(self) -> int:
        return self.idx

    def __repr__(self) -> str:
        return f"Element({self.idx} of {self.group.label or '?'})"


class Subgroup:
    """A subgroup of ``parent`` stored as a membership mask."""

    def __init__(self, parent: Group, mask: np.ndarray, generators: Iterable[int] | None = None):
        mask = np.asarray(mask, dtype=bool)
        if mask.shape != (parent.order,):
            raise GroupError("membership mask has the wrong length")
        self.parent = parent
        self.mask = mask
        self.mask.setflags(write=False)
        self.order = int(mask.sum())
        if not mask[0]:
            raise GroupError("subgroup must contain the identity")
        if parent.order % self.order:
            raise GroupError(f"subset of size {self.order} cannot be a subgroup of order {parent.order}")
        self._gens = None if generators is None else tuple(int(g) for g in generators if g != 0)
        self._elements = None

    @property
    def generators(self) -> tuple[int, ...]:
        if self._gens is None:
            self._gens = _greedy_generators(self.parent, self.mask)
        return self._gens

    @property
    def elements(self) -> np.ndarray:
        if self._elements is None:
            self._elements = np.flatnonzero(self.mask)
        return self._elements

    def __len__(self) -> int:
        return self.order

    def __contains__(self, g) -> bool:
        return bool(self.mask[self.parent.index(g)])

    def _check(self, other: Subgroup) -> None:
        if other.parent is not self.parent:
            raise GroupMismatchError("subgroups of different groups")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        return other.parent is self.parent and np.array_equal(self.mask, other.mask)

    def __hash__(self) -> int:
        return hash((id(self.parent), self.mask.tobytes()))

    def __le__(self, other: Subgroup) -> bool:
        self._check(other)
        return bool(np.all(other.mask[self.elements]))

    def __lt__(self, other: Subgroup) -> bool:
        return self <= other and self.order < other.order

    def __and__(self, other: Subgroup) -> Subgroup:
        self._check(other)
        return Subgroup(self.parent, self.mask & other.mask)

    def is_trivial(self) -> bool:
        return self.order == 1

    def is_whole(self) -> bool:
        return self.order == self.parent.order

    def as_group(self, label: str | None = None) -> tuple[Group, np.ndarray]:
        """Standalone copy of the subgroup plus the embedding ``new index -> parent index``."""
        G = self.parent
        el = self.elements
        name = label if label is not None else f"subgroup of {G.label}"
        if G.table is not None:
            pos = np.full(G.order, -1, dtype=np.int64)
            pos[el] = np.arange(len(el))
            t = pos[G.table[np.ix_(el, el)]].astype(np.int32)
            H = Group(len(el), table=t, label=name,
                      generators=[int(pos[g]) for g in self.generators])
            return H, el
        H = Group.from_permutations([G._perms[g] for g in self.generators],
                                    degree=G.degree, label=name, cap=max(G.order, 1) + 1)
        emb = np.array([G._lookup[_perm_key(r)] for r in H._perms], dtype=np.int64)
        return H, emb

    def __repr__(self) -> str:
        return f"<Subgroup of order {self.order} in {self.parent.label or '?'}>"


@dataclass(frozen=True)
class QuotientResult:
    quotient: Group
    projection: np.ndarray
    kernel: Subgroup


# -- helpers ---------------------------------------------------------------

def _perm_order(row: np.ndarray) -> int:
    seen = np.zeros(len(row), dtype=bool)
    order = 1
    for start in range(len(row)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = row[j]
            length += 1
        order = math.lcm(order, length)
    return order


def _check_table(t: np.ndarray) -> None:
    n = t.shape[0]
    if not (np.array_equal(t[0], np.arange(n)) and np.array_equal(t[:, 0], np.arange(n))):
        raise GroupError("index 0 is not the identity")
    zeros_r = (t == 0).sum(axis=1)
    zeros_c = (t == 0).sum(axis=0)
    if np.any(zeros_r != 1) or np.any(zeros_c != 1):
        raise GroupError("some element lacks a unique inverse")
    r, c = np.nonzero(t == 0)
    if not np.array_equal(t[c, r], np.zeros(n, dtype=t.dtype)):
        raise GroupError("left and right inverses differ")
    srt = np.sort(t, axis=1)
    if not np.all(srt == np.arange(n)):
        raise GroupError("Cayley table rows are not permutations (not a Latin square)")


def _closure(G: Group, gens: Sequence[int], cap: int | None = None) -> np.ndarray:
    mask = np.zeros(G.order, dtype=bool)
    mask[0] = True
    gens = [g for g in dict.fromkeys(int(g) for g in gens) if g != 0]
    if not gens:
        return mask
    garr = np.array(gens)
    frontier = np.array([0])
    count = 1
    while len(frontier):
        cand = G.mul_many(frontier[:, None], garr[None, :]).ravel()
        cand = np.unique(cand)
        new = cand[~mask[cand]]
        mask[new] = True
        count += len(new)
        if cap is not None and count > cap:
            raise CapExceededError(f"closure exceeds element cap {cap}")
        frontier = new
    return mask


def _greedy_generators(G: Group, mask: np.ndarray) -> tuple[int, ...]:
    """Generators picked in increasing index order until they generate ``mask``."""
    gens: list[int] = []
    cur = np.zeros(G.order, dtype=bool)
    cur[0] = True
    target = int(mask.sum())
    # try high-order elements first: fewer generators, same determinism
    cand = np.flatnonzero(mask)
    cand = cand[np.argsort(-G.orders[cand], kind="stable")]
    for x in cand:
        if cur.sum() == target:
            break
        if cur[x]:
            continue
        gens.append(int(x))
        cur = _closure(G, gens)
    return tuple(gens)


def _as_index_array(G: Group, xs) -> np.ndarray:
    return np.array([G.index(x) for x in xs], dtype=np.int64)


def _sub(G: Group, H: Subgroup) -> Subgroup:
    if H.parent is not G:
        raise GroupMismatchError("subgroup belongs to a different group")
    return H


# -- operations ------------------------------------------------------------

def whole(G: Group) -> Subgroup:
    return Subgroup(G, np.ones(G.order, dtype=bool), G.gens)


def trivial_subgroup(G: Group) -> Subgroup:
    mask = np.zeros(G.order, dtype=bool)
    mask[0] = True
    return Subgroup(G, mask, ())


def generated_subgroup(G: Group, gens: Iterable = ()) -> Subgroup:
    """Smallest subgroup containing ``gens`` (empty input gives the trivial subgroup)."""
    idx = [int(i) for i in _as_index_array(G, list(gens))]
    return Subgroup(G, _closure(G, idx), idx)


def cyclic_subgroup(G: Group, g) -> Subgroup:
    return generated_subgroup(G, [g])


def subgroup_from_elements(G: Group, elements) -> Subgroup:
    """Subgroup generated by a set of elements; the result may be larger than the set."""
    return generated_subgroup(G, elements)


def join(G: Group, *subgroups: Subgroup) -> Subgroup:
    gens: list[int] = []
    for H in subgroups:
        gens.extend(_sub(G, H).generators)
    return generated_subgroup(G, gens)


def centralizer_of_elements(G: Group, xs) -> Subgroup:
    """All elements commuting with every element of ``xs``."""
    xs = _as_index_array(G, xs)
    every = G.all_elements()
    mask = np.ones(G.order, dtype=bool)
    for x in xs:
        mask &= G.mul_many(every, x) == G.mul_many(x, every)
    return Subgroup(G, mask)


def centralizer(G: Group, g) -> Subgroup:
    """``C_G(g)``, or the centralizer of a whole subgroup if ``g`` is a Subgroup."""
    if isinstance(g, Subgroup):
        return centralizer_of_elements(G, _sub(G, g).generators)
    return centralizer_of_elements(G, [g])


def center(G: Group) -> Subgroup:
    cached = G._cache.get("center")
    if cached is None:
        cached = centralizer_of_elements(G, G.gens)
        G._cache["center"] = cached
    return cached


def is_abelian(G: Group) -> bool:
    gens = np.array(G.gens, dtype=np.int64)
    if len(gens) < 2:
        return True
    a = G.mul_many(gens[:, None], gens[None, :])
    return bool(np.array_equal(a, a.T))


def is_normal(G: Group, H: Subgroup) -> bool:
    _sub(G, H)
    el = H.generators
    if not el:
        return True
    el = np.array(el)
    for g in G.gens:
        if not H.mask[G.conjugate_many(el, g)].all():
            return False
    return True


def normalizer(G: Group, H: Subgroup) -> Subgroup:
    """``{x : x^-1 H x = H}``."""
    _sub(G, H)
    gens = np.array(H.generators, dtype=np.int64)
    if len(gens) == 0 or H.is_whole():
        return whole(G)
    every = G.all_elements()
    inv = G.inverses
    # x normalizes H iff x^-1 h x lies in H for each generator h of H
    mask = np.ones(G.order, dtype=bool)
    for h in gens:
        conj = G.mul_many(G.mul_many(inv[every], h), every)
        mask &= H.mask[conj]
    return Subgroup(G, mask)


def normal_closure(G: Group, xs) -> Subgroup:
    """Smallest normal subgroup containing ``xs``."""
    H = generated_subgroup(G, xs)
    changed = True
    while changed:
        changed = False
        for g in G.gens:
            hs = np.array(H.generators, dtype=np.int64)
            if len(hs) == 0:
                break
            conj = G.conjugate_many(hs, g)
            outside = conj[~H.mask[conj]]
            if len(outside):
                H = generated_subgroup(G, list(H.generators) + [int(x) for x in outside])
                changed = True
    return H


def derived_subgroup(G: Group) -> Subgroup:
    """``G'``: normal closure of commutators of generators."""
    cached = G._cache.get("derived")
    if cached is None:
        gens = G.gens
        comms = {G.commutator(a, b) for i, a in enumerate(gens) for b in gens[i + 1:]}
        comms.discard(0)
        cached = normal_closure(G, sorted(comms))
        G._cache["derived"] = cached
    return cached


def product_set(G: Group, H: Subgroup, K: Subgroup) -> np.ndarray:
    """Mask of the set ``HK``."""
    prods = G.mul_many(H.elements[:, None], K.elements[None, :]).ravel()
    mask = np.zeros(G.order, dtype=bool)
    mask[prods] = True
    return mask


def quotient(G: Group, N: Subgroup, label: str | None = None) -> QuotientResult:
    """``G/N`` with cosets numbered by their smallest element (coset ``N`` is 0)."""
    _sub(G, N)
    if not is_normal(G, N):
        raise GroupError("quotient requires a normal subgroup")
    n = G.order
    proj = np.full(n, -1, dtype=np.int64)
    reps = []
    nel = N.elements
    for x in range(n):
        if proj[x] < 0:
            proj[G.mul_many(x, nel)] = len(reps)
            reps.append(x)
    reps = np.array(reps)
    m = len(reps)
    name = label if label is not None else f"{G.label}/N{N.order}"
    if m <= TABLE_LIMIT:
        t = proj[G.mul_many(reps[:, None], reps[None, :])].astype(np.int32)
        gens = sorted({int(proj[g]) for g in G.gens} - {0})
        Q = Group(m, table=t, label=name, generators=gens)
    else:
        # regular permutation action of the generators on cosets
        perms = []
        for g in G.gens:
            perms.append(proj[G.mul_many(reps, g)])
        Q = Group.from_permutations(perms, degree=m, label=name, cap=m + 1)
        # reindex projection to the BFS order of Q
        pos = {}
        for i in range(Q.order):
            # image of coset 0 under element i identifies the coset
            pos[int(Q._perms[i][0])] = i
        proj = np.array([pos[c] for c in proj], dtype=np.int64)
    return QuotientResult(Q, proj, N)


def preimage(G: Group, q: QuotientResult, Hbar: Subgroup) -> Subgroup:
    return Subgroup(G, Hbar.mask[q.projection])


def image(G: Group, q: QuotientResult, H: Subgroup) -> Subgroup:
    Q = q.quotient
    mask = np.zeros(Q.order, dtype=bool)
    mask[q.projection[H.elements]] = True
    return Subgroup(Q, mask)


def direct_product(G: Group, H: Group, label: str | None = None) -> Group:
    """``G x H``; element ``(g, h)`` has index ``g + |G| h``."""
    a, b = G.order, H.order
    n = a * b
    name = label if label is not None else f"{G.label} x {H.label}"
    if n <= TABLE_LIMIT:
        if G.table is None or H.table is None:
            raise GroupError("table-backed factors required for a table-backed product")
        tg = G.table.astype(np.int64)
        th = H.table.astype(np.int64)
        gi = np.tile(np.arange(a), b)
        hi = np.repeat(np.arange(b), a)
        t = tg[gi[:, None], gi[None, :]] + a * th[hi[:, None], hi[None, :]]
        gens = [g for g in G.gens] + [a * h for h in H.gens]
        return Group(n, table=t.astype(np.int32), label=name, generators=gens)
    pg, dg = G.permutation_generators()
    ph, dh = H.permutation_generators()
    perms = [np.concatenate([p, np.arange(dg, dg + dh)]) for p in pg]
    perms += [np.concatenate([np.arange(dg), p + dg]) for p in ph]
    return Group.from_permutations(perms, degree=dg + dh, label=name, cap=max(DEFAULT_CAP, n + 1))


def check_axioms(G: Group, samples: int = 10_000, seed: int = 0) -> None:
    """Raise :class:`GroupError` unless identity, inverse, closure and associativity hold.

    Associativity is exhaustive for ``n <= 256`` and sampled otherwise.
    """
    n = G.order
    every = G.all_elements()
    if not (np.array_equal(G.mul_many(0, every), every) and np.array_equal(G.mul_many(every, 0), every)):
        raise GroupError("identity law fails")
    inv = G.inverses
    if not (np.all(G.mul_many(every, inv) == 0) and np.all(G.mul_many(inv, every) == 0)):
        raise GroupError("inverse law fails")
    if n <= 256:
        if G.table is not None:
            t = G.table
            for a in range(n):
                lhs = t[t[a][:, None], every[None, :]]   # (a b) c
                rhs = t[a][t]                             # a (b c)
                if not np.array_equal(lhs, rhs):
                    raise GroupError(f"associativity fails with a={a}")
            return
        a, b, c = np.meshgrid(every, every, every, indexing="ij")
        a, b, c = a.ravel(), b.ravel(), c.ravel()
    else:
        rng = np.random.default_rng(seed)
        a, b, c = rng.integers(0, n, size=(3, samples))
    lhs = G.mul_many(G.mul_many(a, b), c)
    rhs = G.mul_many(a, G.mul_many(b, c))
    bad = np.flatnonzero(lhs != rhs)
    if len(bad):
        i = bad[0]
        raise GroupError(f"associativity fails at ({a[i]}, {b[i]}, {c[i]})")
