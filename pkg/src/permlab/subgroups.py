"""Subgroup lattices and distinguished subgroups."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Union

import numpy as np

from .group import (
    CapExceededError,
    FiniteGroup,
    SubgroupRef,
    conjugation_rows,
    normalizer,
    p_part,
    prime_factors,
)

__all__ = [
    "DEFAULT_MAX_SUBGROUPS",
    "SubgroupLattice",
    "all_subgroups",
    "intermediate_subgroups",
    "sylow_subgroups",
    "sylow_subgroup",
    "hall_subgroups",
    "maximal_subgroups",
    "normal_subgroups",
    "minimal_normal_subgroups",
    "is_prime",
]

DEFAULT_MAX_SUBGROUPS = 100_000


def is_prime(n: int) -> bool:
    return n > 1 and prime_factors(n) == [n]


@dataclass(eq=False)
class SubgroupLattice:
    """All subgroups of ``parent`` in canonical order.

    Nodes are sorted by ``(order, member indices)``.  ``lower[i]`` lists the
    maximal subgroups of node ``i`` and ``upper[i]`` the nodes covering it.
    """

    parent: FiniteGroup
    nodes: list[SubgroupRef]
    lower: list[list[int]]
    upper: list[list[int]]
    classes: list[list[int]]
    class_of: list[int]
    position: dict[int, int] = field(repr=False)

    def __len__(self) -> int:
        return len(self.nodes)

    def __iter__(self):
        return iter(self.nodes)

    def __contains__(self, H: SubgroupRef) -> bool:
        return H.parent is self.parent and H.bits in self.position

    def index(self, H: Union[SubgroupRef, int]) -> int:
        bits = H if isinstance(H, int) else H.bits
        if isinstance(H, SubgroupRef) and H.parent is not self.parent:
            raise ValueError("subgroup belongs to a different group")
        try:
            return self.position[bits]
        except KeyError:
            raise ValueError("not a node of this lattice") from None

    def node(self, H: Union[SubgroupRef, int]) -> SubgroupRef:
        """The lattice's own instance of ``H`` (carrying cached data)."""
        return self.nodes[self.index(H)]

    @property
    def top(self) -> SubgroupRef:
        return self.nodes[-1]

    @property
    def bottom(self) -> SubgroupRef:
        return self.nodes[0]

    def class_representatives(self) -> list[SubgroupRef]:
        return [self.nodes[c[0]] for c in self.classes]

    def conjugacy_class(self, H: SubgroupRef) -> list[SubgroupRef]:
        return [self.nodes[i] for i in self.classes[self.class_of[self.index(H)]]]

    @cached_property
    def prime_reach(self) -> list[int]:
        """``prime_reach[i]``: bitset of nodes reachable from node ``i`` by
        steps ``U < V`` with ``|V:U|`` prime (node ``i`` included)."""
        reach = [0] * len(self.nodes)
        for i in range(len(self.nodes) - 1, -1, -1):
            r = 1 << i
            oi = self.nodes[i].order
            for j in self.upper[i]:
                if is_prime(self.nodes[j].order // oi):
                    r |= reach[j]
            reach[i] = r
        return reach


def all_subgroups(G: FiniteGroup, max_subgroups: Optional[int] = None) -> SubgroupLattice:
    """Every subgroup of ``G``: cyclic seeds closed under joins.

    Any subgroup is generated by its cyclic subgroups, so repeatedly joining
    known subgroups with cyclic ones reaches all of them.  Only one member
    per conjugacy class is extended (joins commute with conjugation), and
    for a fixed ``A`` the elements of one double coset ``A y A`` with
    ``<y> = <x>`` all give the same join ``<A, x>``.
    """
    cap = DEFAULT_MAX_SUBGROUPS if max_subgroups is None else max_subgroups
    cached = G.cache.get("lattice")
    if cached is not None:
        return cached
    n = G.order
    mul = G.mul
    everything = np.arange(n)
    cyclic_gens: dict[int, list[int]] = {}
    for x, bits in enumerate(G.cyclic_bits):
        cyclic_gens.setdefault(bits, []).append(x)
    known: dict[int, SubgroupRef] = {}
    classes: list[list[int]] = []
    queue: list[SubgroupRef] = []

    def add_class(H: SubgroupRef) -> None:
        rows = conjugation_rows(G, H, everything)
        masks = np.zeros((n, n), dtype=bool)
        masks[everything[:, None], rows] = True
        packed, first = np.unique(np.packbits(masks, axis=1, bitorder="little"), axis=0, return_index=True)
        members = []
        gens = np.array(H.gens, dtype=np.int64)
        for row, g in zip(packed, first):
            bits = int.from_bytes(row.tobytes(), "little")
            if bits == H.bits:
                K = H
            else:
                K = SubgroupRef(G, bits, gens=mul[mul[G.inv[g], gens], g].tolist() if gens.size else ())
            known[bits] = K
            members.append(bits)
        classes.append(members)
        queue.append(H)
        if len(known) > cap:
            raise CapExceededError(f"subgroup count exceeds cap {cap}")

    add_class(G.trivial)
    for C in G.cyclic_subgroups:
        if C.bits not in known:
            add_class(C)
    i = 0
    while i < len(queue):
        A = queue[i]
        i += 1
        done = A.mask.copy()
        a_idx = A.indices
        for x in range(n):
            if done[x]:
                continue
            J = A.join_element(x)
            same = np.array(cyclic_gens[G.cyclic_bits[x]])
            done[mul[mul[a_idx[:, None, None], same[None, :, None]], a_idx[None, None, :]].ravel()] = True
            if J.bits not in known:
                add_class(J)
    nodes = sorted(known.values(), key=SubgroupRef.sort_key)
    lattice = _assemble(G, nodes, classes)
    G.cache["lattice"] = lattice
    return lattice


def _assemble(G: FiniteGroup, nodes: list[SubgroupRef], class_bits: list[list[int]]) -> SubgroupLattice:
    position = {H.bits: i for i, H in enumerate(nodes)}
    k = len(nodes)
    lower: list[list[int]] = [[] for _ in range(k)]
    upper: list[list[int]] = [[] for _ in range(k)]
    for b in range(k):
        B = nodes[b]
        maximal: list[int] = []
        for a in range(b - 1, -1, -1):
            A = nodes[a]
            if A.order == B.order or B.order % A.order or A.bits & B.bits != A.bits:
                continue
            if any(A.bits & nodes[m].bits == A.bits for m in maximal):
                continue
            maximal.append(a)
        maximal.sort()
        lower[b] = maximal
        for a in maximal:
            upper[a].append(b)
    classes = sorted(sorted(position[b] for b in members) for members in class_bits)
    class_of = [-1] * k
    for c, members in enumerate(classes):
        for m in members:
            class_of[m] = c
    return SubgroupLattice(G, nodes, lower, upper, classes, class_of, position)


def intermediate_subgroups(
    lattice: SubgroupLattice, H: SubgroupRef, top: Optional[SubgroupRef] = None
) -> list[SubgroupRef]:
    """All ``U`` with ``H <= U <= top`` (default ``top``: the whole group)."""
    lattice.index(H)
    hb = H.bits
    tb = lattice.parent.all_bits if top is None else top.bits
    return [U for U in lattice.nodes if U.bits & hb == hb and U.bits & tb == U.bits]


def sylow_subgroups(G: FiniteGroup, p: int) -> list[SubgroupRef]:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if G.order % p:
        raise ValueError(f"{p} does not divide |G| = {G.order}")
    target = p_part(G.order, p)
    return [H for H in all_subgroups(G).nodes if H.order == target]


def sylow_subgroup(G: FiniteGroup, p: int) -> SubgroupRef:
    """One Sylow p-subgroup, grown inside normalizers; no lattice needed."""
    target = p_part(G.order, p)
    orders = G.element_orders
    p_elems = [x for x in range(G.order) if orders[x] > 1 and p_part(int(orders[x]), p) == orders[x]]
    P = G.trivial
    while P.order < target:
        N = normalizer(G, P)
        for x in p_elems:
            if N.mask[x] and not P.mask[x]:
                P = P.join_element(x)
                break
        else:  # pragma: no cover - contradicts Sylow's theorem
            raise AssertionError("could not enlarge p-subgroup")
    return P


def hall_subgroups(G: FiniteGroup, primes: Iterable[int]) -> list[SubgroupRef]:
    """Subgroups whose order is the full pi-part of ``|G|``; may be empty."""
    target = p_part(G.order, list(primes))
    return [H for H in all_subgroups(G).nodes if H.order == target]


def maximal_subgroups(G: Union[FiniteGroup, SubgroupLattice]) -> list[SubgroupRef]:
    lattice = G if isinstance(G, SubgroupLattice) else all_subgroups(G)
    return [lattice.nodes[i] for i in lattice.lower[len(lattice) - 1]]


def _normal_closure(G: FiniteGroup, x: int) -> SubgroupRef:
    cls = np.unique(G.mul[G.mul[G.inv, x], np.arange(G.order)])
    return G.subgroup(cls.tolist())


def normal_subgroups(G: FiniteGroup) -> list[SubgroupRef]:
    """Normal closures of single elements, closed under products."""
    if "normal" in G.cache:
        return G.cache["normal"]
    known: dict[int, SubgroupRef] = {1: G.trivial}
    for x in range(1, G.order):
        N = _normal_closure(G, x)
        known.setdefault(N.bits, N)
    base = list(known.values())
    queue = list(base)
    i = 0
    while i < len(queue):
        A = queue[i]
        i += 1
        for B in base:
            if B.bits & A.bits == B.bits:
                continue
            J = A.join(B)
            if J.bits not in known:
                known[J.bits] = J
                queue.append(J)
    result = sorted(known.values(), key=SubgroupRef.sort_key)
    G.cache["normal"] = result
    return result


def minimal_normal_subgroups(G: FiniteGroup) -> list[SubgroupRef]:
    normals = [N for N in normal_subgroups(G) if N.order > 1]
    return [N for N in normals if not any(M.bits != N.bits and M.bits & N.bits == M.bits for M in normals)]
