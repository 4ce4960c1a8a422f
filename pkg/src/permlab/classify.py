"""Structural predicates, characteristic subgroups and series.

All functions take a :class:`FiniteGroup`; to classify a subgroup, pass
``H.as_group()``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import lcm
from typing import Optional, Union

import numpy as np

from .group import (
    FiniteGroup,
    SubgroupRef,
    _universe,
    conjugate_subgroup,
    mask_to_bits,
    p_part,
    prime_factors,
    quotient_group,
)
from .subgroups import (
    all_subgroups,
    is_prime,
    maximal_subgroups,
    minimal_normal_subgroups,
    normal_subgroups,
    sylow_subgroup,
)

__all__ = [
    "ChiefSeries",
    "ChiefFactorAction",
    "Classification",
    "is_abelian",
    "is_nilpotent",
    "is_soluble",
    "derived_subgroup",
    "normal_closure",
    "fitting",
    "frattini",
    "socle",
    "is_p_nilpotent",
    "p_nilpotent_radical",
    "chief_series",
    "is_chief_factor",
    "factor_centralizer",
    "chief_factor_action",
    "is_supersoluble",
    "is_supersoluble_huppert",
    "is_ore_dispersive",
    "is_p_closed",
    "fitting_series",
    "nilpotent_length",
    "is_metanilpotent",
    "residual",
    "subgroup_exponent",
    "in_A_class",
    "wU_local_check",
    "classify",
]


def is_abelian(G: FiniteGroup) -> bool:
    return G.whole.is_abelian()


def is_nilpotent(G: FiniteGroup) -> bool:
    return G.whole.is_nilpotent()


def normal_closure(U: Union[FiniteGroup, SubgroupRef], gens: list[int]) -> SubgroupRef:
    """Smallest subgroup normal in ``U`` containing the given elements."""
    U = _universe(U)
    G = U.parent
    K = G.subgroup(gens)
    changed = True
    while changed:
        changed = False
        for u in U.gens:
            C = conjugate_subgroup(K, u)
            if not C <= K:
                K = K.join(C)
                changed = True
    return K


def derived_subgroup(G: Union[FiniteGroup, SubgroupRef]) -> SubgroupRef:
    """Normal closure of the commutators of generators."""
    U = _universe(G)
    P = U.parent
    mul, inv = P.mul, P.inv
    comms = []
    for a in U.gens:
        for b in U.gens:
            comms.append(int(mul[mul[inv[a], inv[b]], mul[a, b]]))
    return normal_closure(U, [c for c in comms if c])


def is_soluble(G: Union[FiniteGroup, SubgroupRef]) -> bool:
    D = _universe(G)
    while D.order > 1:
        E = derived_subgroup(D)
        if E.bits == D.bits:
            return False
        D = E
    return True


def _join_all(G: FiniteGroup, subs: list[SubgroupRef]) -> SubgroupRef:
    if not subs:
        return G.trivial
    return subs[0].join(*subs[1:]) if len(subs) > 1 else subs[0]


def fitting(G: FiniteGroup) -> SubgroupRef:
    """Product of all normal nilpotent subgroups."""
    return _join_all(G, [N for N in normal_subgroups(G) if N.is_nilpotent()])


def frattini(G: FiniteGroup) -> SubgroupRef:
    """Intersection of the maximal subgroups."""
    bits = G.all_bits
    for M in maximal_subgroups(G):
        bits &= M.bits
    return G.subgroup_from_bits(bits)


def socle(G: FiniteGroup) -> SubgroupRef:
    return _join_all(G, minimal_normal_subgroups(G))


def is_p_nilpotent(N: SubgroupRef, p: int) -> bool:
    """Whether ``N`` has a normal p-complement.

    That happens exactly when the p'-elements of ``N`` are closed under
    multiplication.
    """
    G = N.parent
    orders = G.element_orders[N.indices]
    idx = N.indices[orders % p != 0]
    mask = np.zeros(G.order, dtype=bool)
    mask[idx] = True
    return bool(mask[G.mul[np.ix_(idx, idx)]].all())


def p_nilpotent_radical(G: FiniteGroup, p: int) -> SubgroupRef:
    """``F_p(G)``: product of all normal p-nilpotent subgroups."""
    return _join_all(G, [N for N in normal_subgroups(G) if is_p_nilpotent(N, p)])


@dataclass(frozen=True)
class ChiefSeries:
    terms: tuple[SubgroupRef, ...]

    @property
    def factor_orders(self) -> list[int]:
        return [b.order // a.order for a, b in zip(self.terms, self.terms[1:])]

    def factors(self) -> list[tuple[SubgroupRef, SubgroupRef]]:
        """Consecutive pairs ``(K, H)`` with ``H/K`` a chief factor."""
        return list(zip(self.terms, self.terms[1:]))


def chief_series(G: FiniteGroup) -> ChiefSeries:
    """``1 = G_0 < ... < G_r = G``, each step the canonically first normal
    subgroup of ``G`` minimal over the previous term."""
    normals = normal_subgroups(G)
    terms = [G.trivial]
    while terms[-1].order < G.order:
        cur = terms[-1].bits
        above = [N for N in normals if N.bits & cur == cur and N.bits != cur]
        minimal = [N for N in above if not any(M.bits != N.bits and M.bits & N.bits == M.bits for M in above)]
        terms.append(minimal[0])
    return ChiefSeries(tuple(terms))


def is_chief_factor(G: FiniteGroup, K: SubgroupRef, H: SubgroupRef) -> bool:
    if not (K < H and K.is_normal() and H.is_normal()):
        return False
    return not any(
        N.bits not in (K.bits, H.bits) and N.bits & H.bits == N.bits and N.bits & K.bits == K.bits
        for N in normal_subgroups(G)
    )


def factor_centralizer(G: FiniteGroup, K: SubgroupRef, H: SubgroupRef) -> SubgroupRef:
    """``C_G(H/K) = {g : [g, h] in K for all h in H}``."""
    mul, inv = G.mul, G.inv
    g = np.arange(G.order)
    ok = np.ones(G.order, dtype=bool)
    for h in H.gens:
        comm = mul[mul[inv[g], inv[h]], mul[g, h]]
        ok &= K.mask[comm]
    return G.subgroup_from_bits(mask_to_bits(ok))


@dataclass(frozen=True)
class ChiefFactorAction:
    """Fingerprint of ``G/C_G(H/K)``."""

    order: int
    abelian: bool
    exponent: int
    centralizer: SubgroupRef = field(compare=False, repr=False)


def _quotient_exponent(G: FiniteGroup, C: SubgroupRef) -> int:
    """Exponent of ``G/C`` from element powers."""
    n = G.order
    cur = np.arange(n)
    first = np.zeros(n, dtype=np.int64)
    k = 1
    while True:
        hit = C.mask[cur] & (first == 0)
        first[hit] = k
        if first.all():
            return lcm(*(int(x) for x in np.unique(first)))
        cur = G.mul[cur, np.arange(n)]
        k += 1


def chief_factor_action(G: FiniteGroup, K: SubgroupRef, H: SubgroupRef) -> ChiefFactorAction:
    if not is_chief_factor(G, K, H):
        raise ValueError("pair is not a chief factor")
    C = factor_centralizer(G, K, H)
    abelian = derived_subgroup(G) <= C
    return ChiefFactorAction(G.order // C.order, abelian, _quotient_exponent(G, C), C)


def is_supersoluble(G: FiniteGroup) -> bool:
    """Soluble with every chief factor of prime order."""
    if "supersoluble" not in G.cache:
        G.cache["supersoluble"] = is_soluble(G) and all(is_prime(f) for f in chief_series(G).factor_orders)
    return G.cache["supersoluble"]


def is_supersoluble_huppert(G: FiniteGroup) -> bool:
    """Huppert's criterion: every maximal subgroup has prime index."""
    return all(is_prime(G.order // M.order) for M in maximal_subgroups(G))


def is_ore_dispersive(G: FiniteGroup) -> bool:
    """For primes ``p_1 > ... > p_n`` of ``|G|``, each set of
    ``{p_1..p_i}``-elements is a normal subgroup of order
    ``p_1^a_1 ... p_i^a_i``."""
    primes = sorted(G.primes, reverse=True)
    orders = G.element_orders
    for i in range(1, len(primes) + 1):
        pi = primes[:i]
        target = p_part(G.order, pi)
        members = np.array([p_part(int(o), pi) == o for o in orders])
        if int(members.sum()) != target:
            return False
        idx = np.flatnonzero(members)
        if not members[G.mul[np.ix_(idx, idx)]].all():
            return False
    return True


def is_p_closed(G: FiniteGroup, p: int) -> bool:
    """Normal Sylow p-subgroup, i.e. exactly |G|_p elements of p-power order."""
    if G.order % p:
        raise ValueError(f"{p} does not divide |G| = {G.order}")
    orders = G.element_orders
    count = sum(1 for o in orders if p_part(int(o), p) == o)
    return count == p_part(G.order, p)


def fitting_series(G: FiniteGroup) -> list[SubgroupRef]:
    """``F_0 = 1 < F_1 = F(G) < ... = G``; requires soluble ``G``."""
    if not is_soluble(G):
        raise ValueError("nilpotent length is defined for soluble groups only")
    series = [G.trivial]
    while series[-1].order < G.order:
        Q = quotient_group(G, series[-1])
        series.append(Q.preimage(fitting(Q.group)))
    return series


def nilpotent_length(G: FiniteGroup) -> int:
    return len(fitting_series(G)) - 1


def is_metanilpotent(G: FiniteGroup) -> bool:
    return is_soluble(G) and nilpotent_length(G) <= 2


_CLASSES = {
    "nilpotent": is_nilpotent,
    "supersoluble": is_supersoluble,
}


def residual(G: FiniteGroup, cls: str) -> SubgroupRef:
    """Intersection of all normal ``N`` with ``G/N`` in ``cls``
    (``"nilpotent"`` or ``"supersoluble"``)."""
    try:
        member = _CLASSES[cls]
    except KeyError:
        raise ValueError(f"unknown class {cls!r}") from None
    bits = G.all_bits
    for N in normal_subgroups(G):
        if N.bits & bits != bits and member(quotient_group(G, N).group):
            bits &= N.bits
    return G.subgroup_from_bits(bits)


def subgroup_exponent(H: SubgroupRef) -> int:
    return lcm(1, *(int(o) for o in np.unique(H.parent.element_orders[H.indices])))


def in_A_class(G: Union[FiniteGroup, SubgroupRef], p: int) -> bool:
    """Abelian of exponent dividing ``p - 1``."""
    H = _universe(G)
    return H.is_abelian() and (p - 1) % subgroup_exponent(H) == 0


def wU_local_check(G: FiniteGroup) -> bool:
    """For each p in pi(G): ``G/F_p(G)`` is soluble and its Sylow subgroups
    are abelian of exponent dividing p - 1."""
    for p in G.primes:
        Q = quotient_group(G, p_nilpotent_radical(G, p)).group
        if not is_soluble(Q):
            return False
        for q in Q.primes:
            if not in_A_class(sylow_subgroup(Q, q), p):
                return False
    return True


@dataclass(frozen=True)
class Classification:
    soluble: bool
    nilpotent: bool
    abelian: bool
    supersoluble: bool
    w_supersoluble: bool
    metanilpotent: bool
    ore_dispersive: bool
    nilpotent_length: Optional[int]
    p_closed: dict[int, bool]

    def as_dict(self) -> dict:
        d = dict(self.__dict__)
        d["p_closed"] = {str(p): v for p, v in self.p_closed.items()}
        return d


def classify(G: FiniteGroup) -> Classification:
    from .permutizer import is_w_supersoluble

    soluble = is_soluble(G)
    return Classification(
        soluble=soluble,
        nilpotent=is_nilpotent(G),
        abelian=is_abelian(G),
        supersoluble=is_supersoluble(G),
        w_supersoluble=is_w_supersoluble(G),
        metanilpotent=is_metanilpotent(G),
        ore_dispersive=is_ore_dispersive(G),
        nilpotent_length=nilpotent_length(G) if soluble else None,
        p_closed={p: is_p_closed(G, p) for p in G.primes},
    )
