"""Finite permutation groups with fully enumerated element sets.

A :class:`FiniteGroup` stores every element, sorted lexicographically by
image array, together with a dense multiplication table.  Subgroups are
:class:`SubgroupRef` objects holding an ``int`` bitset over the parent's
element indices, so containment and intersection are single integer ops.

Functions that quantify over "the group" (normalizer, permutizer, ...)
accept either a :class:`FiniteGroup` or a :class:`SubgroupRef`; in the
latter case the subgroup plays the role of the ambient group and results
are returned as subgroups of its parent.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence, Union

import numpy as np

from .perm import Permutation, compose, format_cycles

__all__ = [
    "CapExceededError",
    "DEFAULT_MAX_ORDER",
    "max_order",
    "FiniteGroup",
    "SubgroupRef",
    "Quotient",
    "closure",
    "set_product",
    "permutes",
    "conjugate_subgroup",
    "normalizer",
    "centralizer",
    "center",
    "core",
    "quotient_group",
    "prime_factors",
    "p_part",
]

DEFAULT_MAX_ORDER = 5000


class CapExceededError(OverflowError):
    """Raised when a construction would exceed a configured size cap."""


def max_order() -> int:
    """The active order cap: ``PERMLAB_MAX_ORDER`` or the default."""
    env = os.environ.get("PERMLAB_MAX_ORDER")
    return int(env) if env else DEFAULT_MAX_ORDER


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def p_part(n: int, primes: Union[int, Iterable[int]]) -> int:
    """Largest divisor of ``n`` whose prime factors all lie in ``primes``."""
    if isinstance(primes, int):
        primes = (primes,)
    part = 1
    for p in set(primes):
        while n % p == 0:
            n //= p
            part *= p
    return part


# bitset <-> numpy mask


def mask_to_bits(mask: np.ndarray) -> int:
    return int.from_bytes(np.packbits(mask, bitorder="little").tobytes(), "little")


def bits_to_mask(bits: int, n: int) -> np.ndarray:
    raw = bits.to_bytes((n + 7) // 8, "little")
    return np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")[:n].astype(bool)


def indices_to_bits(idx: Iterable[int]) -> int:
    bits = 0
    for i in idx:
        bits |= 1 << int(i)
    return bits


def bits_to_indices(bits: int, n: int) -> np.ndarray:
    return np.flatnonzero(bits_to_mask(bits, n))


class FiniteGroup:
    """A permutation group given by generators and its full element list.

    Build instances with :func:`closure`.  Instances are treated as
    immutable; derived data (tables, lattices, quotients) is cached on the
    object.
    """

    def __init__(
        self,
        degree: int,
        generators: Sequence[Permutation],
        elements: Sequence[Permutation],
        *,
        table: np.ndarray | None = None,
    ):
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = tuple(elements)
        self.order = len(self.elements)
        self._index = {p: i for i, p in enumerate(self.elements)}
        self.cache: dict = {}
        if table is not None:
            self.__dict__["mul"] = table

    def __getstate__(self):
        return {"degree": self.degree, "generators": self.generators, "elements": self.elements}

    def __setstate__(self, state):
        self.__init__(state["degree"], state["generators"], state["elements"])

    def __repr__(self) -> str:
        gens = ", ".join(format_cycles(g) for g in self.generators)
        return f"FiniteGroup(degree={self.degree}, order={self.order}, gens=[{gens}])"

    def __len__(self) -> int:
        return self.order

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, p: object) -> bool:
        return p in self._index

    def index(self, p: Permutation) -> int:
        try:
            return self._index[p]
        except KeyError:
            raise ValueError(f"{format_cycles(p)} is not an element of the group") from None

    @property
    def identity(self) -> Permutation:
        return self.elements[0]

    @cached_property
    def mul(self) -> np.ndarray:
        """``mul[i, j]`` is the index of ``elements[i] * elements[j]``."""
        n = self.order
        table = np.empty((n, n), dtype=np.int32)
        if n == 1:
            table[0, 0] = 0
            return table
        arr = np.array([p.array_form for p in self.elements], dtype=np.int32)
        gens = [self.index(g) for g in self.generators if not g.is_identity()]
        # right-regular action of each generator: R[s][i] = idx(e_i * s)
        right = {}
        for s in set(gens):
            s_img = np.array(self.elements[s].array_form, dtype=np.int32)
            prod = s_img[arr]
            right[s] = np.fromiter(
                (self._index[Permutation._raw(tuple(row))] for row in prod.tolist()),
                dtype=np.int32,
                count=n,
            )
        table[:, 0] = np.arange(n)
        seen = np.zeros(n, dtype=bool)
        seen[0] = True
        queue = deque([0])
        while queue:
            g = queue.popleft()
            col = table[:, g]
            for s in gens:
                h = right[s][g]
                if not seen[h]:
                    seen[h] = True
                    table[:, h] = right[s][col]
                    queue.append(h)
        return table

    @cached_property
    def inv(self) -> np.ndarray:
        return np.argmin(self.mul, axis=1).astype(np.int32)

    @cached_property
    def element_orders(self) -> np.ndarray:
        n = self.order
        orders = np.zeros(n, dtype=np.int64)
        cur = np.arange(n)
        k = 1
        while True:
            hit = (cur == 0) & (orders == 0)
            orders[hit] = k
            if orders.all():
                return orders
            cur = self.mul[cur, np.arange(n)]
            k += 1

    @cached_property
    def exponent(self) -> int:
        from math import lcm

        return lcm(*(int(o) for o in np.unique(self.element_orders)))

    @cached_property
    def cyclic_bits(self) -> list[int]:
        """Bitset of ``<x>`` for each element index ``x``."""
        n = self.order
        out = []
        mul = self.mul
        for x in range(n):
            bits = 1
            y = x
            while y != 0:
                bits |= 1 << int(y)
                y = mul[y, x]
            out.append(bits)
        return out

    @cached_property
    def cyclic_subgroups(self) -> list["SubgroupRef"]:
        """Distinct cyclic subgroups, each generated by its first generator."""
        seen = {}
        for x, bits in enumerate(self.cyclic_bits):
            if bits not in seen:
                seen[bits] = SubgroupRef(self, bits, gens=(x,) if x else ())
        return sorted(seen.values(), key=SubgroupRef.sort_key)

    @cached_property
    def all_bits(self) -> int:
        return (1 << self.order) - 1

    @cached_property
    def whole(self) -> "SubgroupRef":
        return SubgroupRef(self, self.all_bits, gens=tuple(self.index(g) for g in self.generators))

    @cached_property
    def trivial(self) -> "SubgroupRef":
        return SubgroupRef(self, 1, gens=())

    @property
    def primes(self) -> list[int]:
        return prime_factors(self.order)

    def subgroup(self, gens: Iterable[Union[Permutation, int]]) -> "SubgroupRef":
        """The subgroup generated by ``gens`` (permutations or element indices)."""
        idx = [g if isinstance(g, (int, np.integer)) else self.index(g) for g in gens]
        idx = [int(i) for i in idx if i != 0]
        return SubgroupRef(self, _close(self, idx), gens=tuple(idx))

    def subgroup_from_bits(self, bits: int) -> "SubgroupRef":
        return SubgroupRef(self, bits)

    def is_subgroup_bits(self, bits: int) -> bool:
        idx = bits_to_indices(bits, self.order)
        if idx.size == 0 or idx[0] != 0:
            return False
        mask = bits_to_mask(bits, self.order)
        return bool(mask[self.mul[np.ix_(idx, idx)]].all())


def closure(degree: int, gens: Iterable[Permutation], cap: int | None = None) -> FiniteGroup:
    """Enumerate ``<gens>`` breadth first.

    Raises :class:`CapExceededError` as soon as the element count passes
    ``cap`` (default: :func:`max_order`).
    """
    if cap is None:
        cap = max_order()
    gens = list(gens)
    for g in gens:
        if g.degree != degree:
            raise ValueError(f"generator {g} has degree {g.degree}, expected {degree}")
    ident = Permutation.identity(degree)
    moving = [g for g in gens if not g.is_identity()]
    seen = {ident}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for s in moving:
            y = compose(x, s)
            if y not in seen:
                seen.add(y)
                if len(seen) > cap:
                    raise CapExceededError(f"group order exceeds cap {cap}")
                queue.append(y)
    return FiniteGroup(degree, gens, sorted(seen))


def _close(G: FiniteGroup, gens: Sequence[int], start: np.ndarray | None = None) -> int:
    """Bitset of the subgroup generated by element indices ``gens``.

    With ``start`` (mask of a subgroup generated by a subset of ``gens``)
    the result is grown one right coset of ``start`` at a time.
    """
    n = G.order
    if not gens:
        return 1 if start is None else mask_to_bits(start)
    mul = G.mul
    if start is None:
        mask = np.zeros(n, dtype=bool)
        mask[0] = True
        sub = np.array([0])
    else:
        mask = start.copy()
        sub = np.flatnonzero(mask)
    # Dimino-style: the result is a union of right cosets of the start subgroup
    gens = list(dict.fromkeys(int(g) for g in gens))
    reps = [0]
    i = 0
    while i < len(reps):
        r = reps[i]
        i += 1
        for s in gens:
            y = mul[r, s]
            if not mask[y]:
                coset = mul[sub, y]
                mask[coset] = True
                reps.append(int(y))
    return mask_to_bits(mask)


class SubgroupRef:
    """A subgroup of a fixed parent group, identified by its member bitset."""

    def __init__(self, parent: FiniteGroup, bits: int, gens: Sequence[int] | None = None):
        self.parent = parent
        self.bits = bits
        self.order = bits.bit_count()
        if gens is not None:
            self.__dict__["gens"] = tuple(int(g) for g in gens)

    def __repr__(self) -> str:
        gens = ";".join(format_cycles(self.parent.elements[g]) for g in self.gens) or "()"
        return f"SubgroupRef(order={self.order}, gens={gens})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SubgroupRef):
            return NotImplemented
        return self.parent is other.parent and self.bits == other.bits

    def __hash__(self) -> int:
        return hash((id(self.parent), self.bits))

    def __le__(self, other: "SubgroupRef") -> bool:
        _same_parent(self, other)
        return self.bits & other.bits == self.bits

    def __lt__(self, other: "SubgroupRef") -> bool:
        return self <= other and self.bits != other.bits

    def __ge__(self, other: "SubgroupRef") -> bool:
        return other <= self

    def __gt__(self, other: "SubgroupRef") -> bool:
        return other < self

    def __and__(self, other: "SubgroupRef") -> "SubgroupRef":
        _same_parent(self, other)
        return SubgroupRef(self.parent, self.bits & other.bits)

    def __contains__(self, x: object) -> bool:
        if isinstance(x, Permutation):
            if x not in self.parent:
                return False
            x = self.parent.index(x)
        return bool((self.bits >> int(x)) & 1)

    def __len__(self) -> int:
        return self.order

    def sort_key(self) -> tuple:
        return (self.order, tuple(self.indices.tolist()))

    @cached_property
    def mask(self) -> np.ndarray:
        return bits_to_mask(self.bits, self.parent.order)

    @cached_property
    def indices(self) -> np.ndarray:
        return np.flatnonzero(self.mask)

    @property
    def elements(self) -> list[Permutation]:
        els = self.parent.elements
        return [els[i] for i in self.indices]

    @cached_property
    def gens(self) -> tuple[int, ...]:
        """A small generating set (element indices), chosen greedily."""
        G = self.parent
        orders = G.element_orders
        cand = sorted(self.indices.tolist(), key=lambda i: (-orders[i], i))
        gens: list[int] = []
        cur = np.zeros(G.order, dtype=bool)
        cur[0] = True
        count = 1
        for x in cand:
            if count == self.order:
                break
            if not cur[x]:
                gens.append(x)
                cur = bits_to_mask(_close(G, gens, start=cur), G.order)
                count = int(cur.sum())
        return tuple(gens)

    @property
    def generators(self) -> list[Permutation]:
        return [self.parent.elements[g] for g in self.gens]

    def describe(self) -> str:
        gens = ";".join(format_cycles(g) for g in self.generators) or "()"
        return f"order {self.order} <{gens}>"

    def join(self, *others: "SubgroupRef") -> "SubgroupRef":
        gens = list(self.gens)
        for o in others:
            _same_parent(self, o)
            gens.extend(o.gens)
        bits = _close(self.parent, gens, start=self.mask)
        return SubgroupRef(self.parent, bits, gens=gens)

    def join_element(self, x: int) -> "SubgroupRef":
        if (self.bits >> x) & 1:
            return self
        bits = _close(self.parent, self.gens + (x,), start=self.mask)
        return SubgroupRef(self.parent, bits, gens=self.gens + (x,))

    def is_normal(self, G: Union[FiniteGroup, "SubgroupRef", None] = None) -> bool:
        """Normality in ``G`` (default: the parent)."""
        G = self.parent if G is None else G
        return normalizer(G, self).bits == _universe(G).bits

    def conjugate(self, g: Union[int, Permutation]) -> "SubgroupRef":
        return conjugate_subgroup(self, g)

    def is_p_group(self, p: int | None = None) -> bool:
        pr = prime_factors(self.order)
        if p is None:
            return len(pr) <= 1
        return all(q == p for q in pr)

    def is_nilpotent(self) -> bool:
        """Nilpotent iff every Sylow subgroup is unique.

        For each prime p the p-elements of H number exactly |H|_p precisely
        when H has a single Sylow p-subgroup.
        """
        orders = self.parent.element_orders[self.indices]
        for p in prime_factors(self.order):
            n_p = int(np.sum(orders == np.array([p_part(int(o), p) for o in orders])))
            if n_p != p_part(self.order, p):
                return False
        return True

    def is_abelian(self) -> bool:
        idx = self.indices
        block = self.parent.mul[np.ix_(idx, idx)]
        return bool((block == block.T).all())

    def is_cyclic(self) -> bool:
        return bool((self.parent.element_orders[self.indices] == self.order).any())

    def as_group(self) -> FiniteGroup:
        """This subgroup as a standalone group on the same points."""
        key = ("as_group", self.bits)
        cache = self.parent.cache
        if key not in cache:
            idx = self.indices
            pos = np.full(self.parent.order, -1, dtype=np.int32)
            pos[idx] = np.arange(idx.size, dtype=np.int32)
            table = pos[self.parent.mul[np.ix_(idx, idx)]]
            cache[key] = FiniteGroup(self.parent.degree, self.generators, self.elements, table=table)
        return cache[key]

    def to_local(self, K: "SubgroupRef") -> "SubgroupRef":
        """``K <= self`` re-expressed as a subgroup of :meth:`as_group`."""
        if not K <= self:
            raise ValueError("subgroup is not contained in this subgroup")
        H = self.as_group()
        pos = np.searchsorted(self.indices, K.indices)
        return SubgroupRef(H, indices_to_bits(pos.tolist()))

    def from_local(self, L: "SubgroupRef") -> "SubgroupRef":
        """Inverse of :meth:`to_local`."""
        if L.parent is not self.as_group():
            raise ValueError("subgroup does not belong to this subgroup's standalone group")
        return SubgroupRef(self.parent, indices_to_bits(self.indices[L.indices].tolist()))


GroupLike = Union[FiniteGroup, SubgroupRef]


def _universe(G: GroupLike) -> SubgroupRef:
    return G.whole if isinstance(G, FiniteGroup) else G


def _parent(G: GroupLike) -> FiniteGroup:
    return G if isinstance(G, FiniteGroup) else G.parent


def _same_parent(*subs: SubgroupRef) -> None:
    p = subs[0].parent
    for s in subs[1:]:
        if s.parent is not p:
            raise ValueError("subgroups belong to different parent groups")


def _check_inside(G: GroupLike, H: SubgroupRef) -> SubgroupRef:
    U = _universe(G)
    _same_parent(U, H)
    if not H <= U:
        raise ValueError("subgroup is not contained in the ambient group")
    return U


def _element_index(G: FiniteGroup, g: Union[int, Permutation, np.integer]) -> int:
    if isinstance(g, Permutation):
        return G.index(g)
    g = int(g)
    if not 0 <= g < G.order:
        raise ValueError(f"element index {g} out of range")
    return g


def product_mask(H: SubgroupRef, K: SubgroupRef) -> np.ndarray:
    G = H.parent
    mask = np.zeros(G.order, dtype=bool)
    mask[G.mul[np.ix_(H.indices, K.indices)]] = True
    return mask


def set_product(H: SubgroupRef, K: SubgroupRef) -> frozenset[Permutation]:
    """The complex ``HK = {hk}`` as a set of permutations."""
    _same_parent(H, K)
    els = H.parent.elements
    return frozenset(els[i] for i in np.flatnonzero(product_mask(H, K)))


def _permutes_idx(mul: np.ndarray, n: int, A: np.ndarray, B: np.ndarray) -> bool:
    # |AB| = |BA|, so AB = BA iff BA is inside AB
    mask = np.zeros(n, dtype=bool)
    mask[mul[np.ix_(A, B)]] = True
    return bool(mask[mul[np.ix_(B, A)]].all())


def permutes(H: SubgroupRef, K: SubgroupRef) -> bool:
    """``HK = KH`` as sets (equivalently ``HK`` is a subgroup)."""
    _same_parent(H, K)
    if H.bits & K.bits in (H.bits, K.bits):
        return True
    G = H.parent
    return _permutes_idx(G.mul, G.order, H.indices, K.indices)


def conjugate_subgroup(H: SubgroupRef, g: Union[int, Permutation]) -> SubgroupRef:
    """``H^g = {g^-1 h g}``."""
    G = H.parent
    g = _element_index(G, g)
    if g == 0:
        return H
    conj = G.mul[G.mul[G.inv[g], H.indices], g]
    return SubgroupRef(G, indices_to_bits(conj.tolist()), gens=[G.mul[G.mul[G.inv[g], x], g] for x in H.gens])


def conjugation_rows(G: FiniteGroup, H: SubgroupRef, by: np.ndarray) -> np.ndarray:
    """Row ``i`` holds the element indices of ``H^(by[i])``."""
    mul = G.mul
    left = mul[G.inv[by][:, None], H.indices[None, :]]
    return mul[left, by[:, None]]


def normalizer(G: GroupLike, H: SubgroupRef) -> SubgroupRef:
    """``N_G(H)``."""
    U = _check_inside(G, H)
    P = U.parent
    cand = U.indices
    rows = conjugation_rows(P, H, cand)
    ok = H.mask[rows].all(axis=1)
    return SubgroupRef(P, indices_to_bits(cand[ok].tolist()))


def centralizer(G: GroupLike, S: Union[SubgroupRef, Iterable[Union[int, Permutation]]]) -> SubgroupRef:
    """``C_G(S)`` for a subgroup or any collection of elements of the parent."""
    U = _universe(G)
    P = U.parent
    if isinstance(S, SubgroupRef):
        _same_parent(U, S)
        s_idx = np.array(S.gens if S.gens else [0])
    else:
        s_idx = np.array([_element_index(P, s) for s in S] or [0])
    cand = U.indices
    ok = (P.mul[np.ix_(cand, s_idx)] == P.mul[np.ix_(s_idx, cand)].T).all(axis=1)
    return SubgroupRef(P, indices_to_bits(cand[ok].tolist()))


def center(G: GroupLike) -> SubgroupRef:
    return centralizer(G, _universe(G))


def core(G: GroupLike, M: SubgroupRef) -> SubgroupRef:
    """``Core_G(M)``: intersection of all conjugates of ``M`` under ``G``."""
    U = _check_inside(G, M)
    P = U.parent
    rows = conjugation_rows(P, M, U.indices)
    counts = np.bincount(rows.ravel(), minlength=P.order)
    return SubgroupRef(P, mask_to_bits(counts == U.order))


@dataclass(eq=False)
class Quotient:
    """``G/N`` realised by the action of ``G`` on the right cosets of ``N``.

    ``coset[g]`` is the coset number of element ``g`` (cosets numbered by
    their smallest member) and ``image[g]`` the index of its image in
    ``group``.
    """

    source: FiniteGroup
    kernel: SubgroupRef
    group: FiniteGroup
    coset: np.ndarray
    image: np.ndarray

    def image_of(self, H: SubgroupRef) -> SubgroupRef:
        """``HN/N``."""
        _same_parent(H, self.kernel)
        return SubgroupRef(self.group, indices_to_bits(np.unique(self.image[H.indices]).tolist()))

    def preimage(self, K: SubgroupRef) -> SubgroupRef:
        if K.parent is not self.group:
            raise ValueError("subgroup does not belong to the quotient group")
        return SubgroupRef(self.source, mask_to_bits(K.mask[self.image]))

    def map(self, g: Union[int, Permutation]) -> Permutation:
        return self.group.elements[self.image[_element_index(self.source, g)]]


def quotient_group(G: FiniteGroup, N: SubgroupRef) -> Quotient:
    """Build ``G/N``; ``N`` must be normal in ``G``."""
    if N.parent is not G:
        raise ValueError("kernel is not a subgroup of this group")
    key = ("quotient", N.bits)
    if key in G.cache:
        return G.cache[key]
    if not N.is_normal():
        raise ValueError("kernel is not normal")
    n = G.order
    mul = G.mul
    coset = np.full(n, -1, dtype=np.int64)
    reps = []
    for g in range(n):
        if coset[g] < 0:
            coset[mul[N.indices, g]] = len(reps)
            reps.append(g)
    reps_arr = np.array(reps)
    # action of element x on cosets: Nr -> N(r x)
    action = coset[mul[reps_arr[:, None], np.arange(n)[None, :]]].T
    perms = [Permutation._raw(tuple(row)) for row in action.tolist()]
    degree = len(reps)
    gens = [perms[G.index(s)] for s in G.generators]
    gens = [g for g in gens if not g.is_identity()]
    Q = FiniteGroup(degree, gens, sorted(set(perms)))
    image = np.array([Q.index(p) for p in perms], dtype=np.int64)
    result = Quotient(G, N, Q, coset, image)
    G.cache[key] = result
    return result
