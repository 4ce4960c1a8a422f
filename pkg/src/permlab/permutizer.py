"""Permutizers, permuteral subgroups, P-subnormality and friends.

``permutizer(G, H)`` is the subgroup generated by every ``x`` in ``G`` with
``<x>H = H<x>``.  As elsewhere in the package, ``G`` may be a
:class:`FiniteGroup` or a :class:`SubgroupRef` standing in for the ambient
group, so ``permutizer(U, H)`` computes ``P_U(H)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from .group import (
    FiniteGroup,
    SubgroupRef,
    _check_inside,
    _permutes_idx,
    _universe,
    conjugation_rows,
    normalizer,
)
from .subgroups import (
    SubgroupLattice,
    all_subgroups,
    intermediate_subgroups,
    is_prime,
    sylow_subgroup,
)

__all__ = [
    "ChainWitness",
    "permutizer",
    "is_permuteral",
    "strongly_permuteral_witness",
    "is_strongly_permuteral",
    "p_subnormal_chain",
    "is_p_subnormal",
    "is_w_supersoluble",
    "is_pronormal",
    "is_abnormal",
    "carter_subgroups",
    "satisfies_permutizer_condition",
]

GroupLike = Union[FiniteGroup, SubgroupRef]


def permutizer(G: GroupLike, H: SubgroupRef) -> SubgroupRef:
    """``P_G(H)``."""
    U = _check_inside(G, H)
    P = U.parent
    key = ("permutizer", U.bits, H.bits)
    if key in P.cache:
        return P.cache[key]
    mul, n = P.mul, P.order
    result = H
    for C in P.cyclic_subgroups:
        if result.bits == U.bits:
            break
        cb = C.bits
        # cyclic subgroups already inside the running result cannot change it
        if cb & U.bits != cb or cb & result.bits == cb:
            continue
        if _permutes_idx(mul, n, C.indices, H.indices):
            result = result.join_element(C.gens[0])
    P.cache[key] = result
    return result


def is_permuteral(G: GroupLike, H: SubgroupRef) -> bool:
    return permutizer(G, H).bits == _universe(G).bits


def _lattice(L: Union[SubgroupLattice, FiniteGroup]) -> SubgroupLattice:
    return L if isinstance(L, SubgroupLattice) else all_subgroups(L)


def strongly_permuteral_witness(
    lattice: Union[SubgroupLattice, FiniteGroup], H: SubgroupRef, top: Optional[SubgroupRef] = None
) -> Optional[SubgroupRef]:
    """First ``U`` (canonical order) with ``H <= U <= top`` and
    ``P_U(H) != U``; ``None`` when ``H`` is strongly permuteral."""
    lattice = _lattice(lattice)
    for U in intermediate_subgroups(lattice, H, top):
        if not is_permuteral(U, H):
            return U
    return None


def is_strongly_permuteral(
    lattice: Union[SubgroupLattice, FiniteGroup], H: SubgroupRef, top: Optional[SubgroupRef] = None
) -> bool:
    return strongly_permuteral_witness(lattice, H, top) is None


@dataclass(frozen=True)
class ChainWitness:
    """``H = terms[0] < terms[1] < ... < terms[-1]`` with prime indices."""

    terms: tuple[SubgroupRef, ...]
    indices: tuple[int, ...]

    def __str__(self) -> str:
        orders = " < ".join(str(t.order) for t in self.terms)
        return f"{orders} (indices {list(self.indices)})"


def p_subnormal_chain(
    lattice: Union[SubgroupLattice, FiniteGroup], H: SubgroupRef, top: Optional[SubgroupRef] = None
) -> Optional[ChainWitness]:
    """A prime-index chain from ``H`` up to ``top`` (default the whole group).

    Every such chain has length equal to the number of prime factors of
    ``|top:H|``; the one returned takes the canonically first admissible
    step each time.
    """
    lattice = _lattice(lattice)
    i = lattice.index(H)
    t = len(lattice) - 1 if top is None else lattice.index(top)
    reach = lattice.prime_reach
    if not (reach[i] >> t) & 1:
        return None
    chain = [i]
    while chain[-1] != t:
        cur = chain[-1]
        o = lattice.nodes[cur].order
        step = next(j for j in lattice.upper[cur] if is_prime(lattice.nodes[j].order // o) and (reach[j] >> t) & 1)
        chain.append(step)
    terms = tuple(lattice.nodes[j] for j in chain)
    return ChainWitness(terms, tuple(b.order // a.order for a, b in zip(terms, terms[1:])))


def is_p_subnormal(
    lattice: Union[SubgroupLattice, FiniteGroup], H: SubgroupRef, top: Optional[SubgroupRef] = None
) -> bool:
    lattice = _lattice(lattice)
    t = len(lattice) - 1 if top is None else lattice.index(top)
    return bool((lattice.prime_reach[lattice.index(H)] >> t) & 1)


def is_w_supersoluble(G: FiniteGroup) -> bool:
    """Every Sylow subgroup is P-subnormal; one per prime suffices since
    P-subnormality is conjugation invariant."""
    if "w_supersoluble" not in G.cache:
        lattice = all_subgroups(G)
        G.cache["w_supersoluble"] = all(
            is_p_subnormal(lattice, sylow_subgroup(G, p)) for p in G.primes
        )
    return G.cache["w_supersoluble"]


def _conjugates(G: GroupLike, H: SubgroupRef):
    """Yield ``(K, xs)``: each distinct conjugate ``K = H^x`` with all the
    conjugating elements ``xs`` of the ambient group."""
    U = _check_inside(G, H)
    P = U.parent
    xs = U.indices
    rows = conjugation_rows(P, H, xs)
    masks = np.zeros((xs.size, P.order), dtype=bool)
    masks[np.arange(xs.size)[:, None], rows] = True
    packed = np.packbits(masks, axis=1, bitorder="little")
    uniq, inverse = np.unique(packed, axis=0, return_inverse=True)
    inverse = inverse.ravel()
    for k, row in enumerate(uniq):
        bits = int.from_bytes(row.tobytes(), "little")
        yield SubgroupRef(P, bits), xs[inverse == k]


def is_pronormal(G: GroupLike, H: SubgroupRef) -> bool:
    """For every ``x``, ``H`` and ``H^x`` are conjugate in ``<H, H^x>``."""
    P = H.parent
    for K, _ in _conjugates(G, H):
        if K.bits == H.bits:
            continue
        J = H.join(K)
        rows = conjugation_rows(P, H, J.indices)
        if not K.mask[rows].all(axis=1).any():
            return False
    return True


def is_abnormal(G: GroupLike, H: SubgroupRef) -> bool:
    """Every ``x`` lies in ``<H, H^x>``."""
    for K, xs in _conjugates(G, H):
        J = H.join(K)
        if not J.mask[xs].all():
            return False
    return True


def carter_subgroups(G: FiniteGroup) -> list[SubgroupRef]:
    """Nilpotent self-normalising subgroups."""
    return [H for H in all_subgroups(G).nodes if H.is_nilpotent() and normalizer(G, H).bits == H.bits]


def satisfies_permutizer_condition(G: FiniteGroup) -> bool:
    """``H < P_G(H)`` for every proper subgroup ``H``."""
    return all(permutizer(G, H).bits != H.bits for H in all_subgroups(G).nodes[:-1])
