"""Property suites: one checkable statement set per suite id.

Each suite is a function ``suite(c)`` taking a :class:`Checker` bound to a
single corpus group.  It records instances with ``c.check(ok, witness)``
and may call ``c.skip(reason)`` when the group does not satisfy the
statement's hypothesis.  Implication-style statements count every examined
instance, including those where the hypothesis fails.
"""

from __future__ import annotations

import random
import zlib
from dataclasses import dataclass, field
from math import gcd
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

from .classify import (
    chief_factor_action,
    factor_centralizer,
    fitting,
    frattini,
    is_chief_factor,
    is_metanilpotent,
    is_ore_dispersive,
    is_p_closed,
    is_soluble,
    is_supersoluble,
    p_nilpotent_radical,
    residual,
    socle,
    wU_local_check,
)
from .group import (
    FiniteGroup,
    SubgroupRef,
    centralizer,
    conjugate_subgroup,
    conjugation_rows,
    normalizer,
    prime_factors,
    quotient_group,
)
from .permutizer import (
    carter_subgroups,
    is_abnormal,
    is_p_subnormal,
    is_permuteral,
    is_pronormal,
    is_strongly_permuteral,
    is_w_supersoluble,
    permutizer,
)
from .subgroups import (
    all_subgroups,
    minimal_normal_subgroups,
    normal_subgroups,
    sylow_subgroups,
)

# quantifier sweeps are exhaustive up to this order, sampled above it
EXHAUSTIVE_MAX_ORDER = 100
SAMPLE_SUBGROUPS = 10
SAMPLE_ELEMENTS = 6
SAMPLE_NORMALS = 6


class SkipMember(Exception):
    """Raised by :meth:`Checker.skip`; the runner records the reason."""


@dataclass
class Checker:
    suite: str
    name: str
    G: FiniteGroup
    checks: int = 0
    failures: list[str] = field(default_factory=list)

    def __post_init__(self):
        self.exhaustive = self.G.order <= EXHAUSTIVE_MAX_ORDER
        self.rng = random.Random(sample_seed(self.suite, self.name))

    def check(self, ok: bool, witness: Callable[[], str] | str) -> bool:
        self.checks += 1
        if not ok:
            self.failures.append(witness() if callable(witness) else witness)
        return ok

    def skip(self, reason: str) -> None:
        raise SkipMember(reason)

    def pick(self, items: Sequence, k: int) -> list:
        """All of ``items`` on exhaustive groups, else ``k`` of them chosen
        by the seeded generator (original order kept)."""
        items = list(items)
        if self.exhaustive or len(items) <= k:
            return items
        chosen = sorted(self.rng.sample(range(len(items)), k))
        return [items[i] for i in chosen]

    # shared data, computed once per group

    @property
    def lattice(self):
        return all_subgroups(self.G)

    @property
    def nodes(self) -> list[SubgroupRef]:
        return self.lattice.nodes

    @property
    def normals(self) -> list[SubgroupRef]:
        return normal_subgroups(self.G)

    def subgroups(self) -> list[SubgroupRef]:
        return self.pick(self.nodes, SAMPLE_SUBGROUPS)

    def elements(self) -> list[int]:
        return self.pick(range(self.G.order), SAMPLE_ELEMENTS)

    def normal_sample(self) -> list[SubgroupRef]:
        return self.pick(self.normals, SAMPLE_NORMALS)


def sample_seed(suite: str, name: str) -> int:
    """Seed for sampled sweeps: CRC-32 of ``"<suite>|<group name>"``."""
    return zlib.crc32(f"{suite}|{name}".encode())


def _d(H: SubgroupRef) -> str:
    return H.describe()


def _psn(G: FiniteGroup, H: SubgroupRef, top: Optional[SubgroupRef] = None) -> bool:
    return is_p_subnormal(all_subgroups(G), H, top)


def _sperm(G: FiniteGroup, H: SubgroupRef) -> bool:
    return is_strongly_permuteral(all_subgroups(G), H)


def _is_hall(G: FiniteGroup, H: SubgroupRef) -> bool:
    return gcd(H.order, G.order // H.order) == 1


def _overgroups(c: Checker, H: SubgroupRef) -> list[SubgroupRef]:
    hb = H.bits
    return [U for U in c.nodes if U.bits & hb == hb]


def _chief_factors(G: FiniteGroup) -> list[tuple[SubgroupRef, SubgroupRef]]:
    normals = normal_subgroups(G)
    return [(K, H) for K in normals for H in normals if K < H and is_chief_factor(G, K, H)]


def _cache(G: FiniteGroup, key, fn):
    if key not in G.cache:
        G.cache[key] = fn()
    return G.cache[key]


def _pronormal_bits(G: FiniteGroup) -> set[int]:
    """Pronormal lattice nodes, tested on one member per conjugacy class."""

    def compute():
        L = all_subgroups(G)
        out = set()
        for cls in L.classes:
            if is_pronormal(G, L.nodes[cls[0]]):
                out.update(L.nodes[i].bits for i in cls)
        return out

    return _cache(G, "pronormal_bits", compute)


def _nilpotent_factorizations(G: FiniteGroup) -> list[tuple[SubgroupRef, SubgroupRef]]:
    """Pairs ``(A, B)`` of nilpotent subgroups with ``G = AB``; ``A`` runs
    over conjugacy class representatives (``G = AB`` implies
    ``G = A^g B^g``)."""

    def compute():
        L = all_subgroups(G)
        nil = [H for H in L.nodes if H.is_nilpotent()]
        out = []
        for A in (H for H in L.class_representatives() if H.is_nilpotent()):
            for B in nil:
                if A.order * B.order == G.order * (A.bits & B.bits).bit_count():
                    out.append((A, B))
        return out

    return _cache(G, "nilpotent_factorizations", compute)


# L1.1


def suite_L1_1(c: Checker) -> None:
    G = c.G
    for K, H in _chief_factors(G):
        C = factor_centralizer(G, K, H)
        Q = quotient_group(G, C).group
        for p in prime_factors(H.order // K.order):
            c.check(p_nilpotent_radical(G, p) <= C, lambda: f"F_{p}(G) not in C_G({_d(H)}/{_d(K)})")
            c.check(
                not any(N.is_p_group(p) for N in minimal_normal_subgroups(Q)),
                lambda: f"G/C_G({_d(H)}/{_d(K)}) has a normal {p}-subgroup",
            )


# L1.2


def suite_L1_2(c: Checker) -> None:
    G = c.G
    for K in c.normal_sample():
        Q = quotient_group(G, K)
        for cls in ("nilpotent", "supersoluble"):
            lhs = residual(Q.group, cls)
            rhs = Q.image_of(residual(G, cls))
            c.check(lhs == rhs, lambda: f"{cls} residual of G/K differs from G^F K/K for K = {_d(K)}")


# L1.3


def suite_L1_3(c: Checker) -> None:
    G = c.G
    if not is_soluble(G):
        c.skip("not soluble")
    Q = quotient_group(G, frattini(G))
    B = Q.group
    F = fitting(B)
    c.check(Q.image_of(fitting(G)) == F, "F(G)/Phi(G) != F(G/Phi(G))")
    c.check(centralizer(B, F) == F, "C(F) != F in G/Phi(G)")
    c.check(socle(B) == F, "Soc != F in G/Phi(G)")


# L1.5


def suite_L1_5(c: Checker) -> None:
    G = c.G
    L = c.lattice
    soluble = is_soluble(G)
    hs = c.subgroups()
    ks = c.subgroups()
    normals = c.normal_sample()
    psn = {H.bits: _psn(G, H) for H in L.nodes}
    quotients = {N.bits: quotient_group(G, N) for N in normals}

    for H in hs:
        for N in normals:
            Q = quotients[N.bits]
            if psn[H.bits]:
                # (1)
                c.check(_psn(G, H & N, top=N), lambda: f"(1) H&N not P-sn N: H={_d(H)}, N={_d(N)}")
                c.check(_psn(Q.group, Q.image_of(H)), lambda: f"(1) HN/N not P-sn: H={_d(H)}, N={_d(N)}")
            if N <= H:
                # (2)
                c.check(
                    not _psn(Q.group, Q.image_of(H)) or psn[H.bits],
                    lambda: f"(2) H/N P-sn but H not: H={_d(H)}, N={_d(N)}",
                )
        # (3)
        joins = [H.join(N) for N in normals]
        for i, A in enumerate(joins):
            for B in joins[i + 1 :]:
                if psn[A.bits] and psn[B.bits]:
                    c.check(psn[(A & B).bits], lambda: f"(3) HN1 & HN2 not P-sn: H={_d(H)}")
        # (5): the lattice's conjugacy classes come from a full sweep over G
        if psn[H.bits]:
            for j in L.classes[L.class_of[L.index(H)]]:
                c.check(psn[L.nodes[j].bits], lambda: f"(5) conjugate of P-sn {_d(H)} is not P-sn")
    # (4)
    for H in hs:
        for K in ks:
            if H <= K and _psn(G, H, top=K) and psn[K.bits]:
                c.check(psn[H.bits], lambda: f"(4) transitivity fails: H={_d(H)}, K={_d(K)}")
    # (6)
    R = residual(G, "supersoluble")
    for H in hs:
        if R <= H:
            c.check(psn[H.bits], lambda: f"(6) H contains G^U but is not P-sn: {_d(H)}")
    if not soluble:
        return
    for H in hs:
        if not psn[H.bits]:
            continue
        for K in ks:
            # (7)
            c.check(_psn(G, H & K, top=K), lambda: f"(7) H&K not P-sn K: H={_d(H)}, K={_d(K)}")
            # (8)
            if psn[K.bits]:
                c.check(psn[(H & K).bits], lambda: f"(8) H1&H2 not P-sn: {_d(H)}, {_d(K)}")


# L1.10 - L1.12


def suite_L1_10(c: Checker) -> None:
    G = c.G
    pron = _pronormal_bits(G)
    for H in c.subgroups():
        if H.bits in pron:
            c.check(is_abnormal(G, normalizer(G, H)), lambda: f"N_G(H) not abnormal for pronormal {_d(H)}")
        else:
            c.check(True, "")


def _overgroup_condition(c: Checker, H: SubgroupRef) -> bool:
    """Condition (2): ``H <= U`` and ``H <= U^x`` force ``x in U``.

    ``H <= U^x`` iff ``H^(x^-1) <= U``; as ``x`` runs over ``G`` so does
    ``x^-1``, and ``x in U`` iff ``x^-1 in U``.
    """
    G = c.G
    rows = conjugation_rows(G, H, np.arange(G.order))
    for U in _overgroups(c, H):
        inside = U.mask[rows].all(axis=1)
        if not U.mask[inside].all():
            return False
    return True


def suite_L1_11(c: Checker) -> None:
    G = c.G
    pron = _pronormal_bits(G)
    for H in c.subgroups():
        abn = is_abnormal(G, H)
        pro = H.bits in pron
        selfnorm = normalizer(G, H) == H
        c.check(abn == (pro and selfnorm), lambda: f"(1)<=>(4) fails for {_d(H)}")
        c.check(abn == _overgroup_condition(c, H), lambda: f"(1)<=>(2) fails for {_d(H)}")
        over_selfnorm = all(normalizer(G, U) == U for U in _overgroups(c, H))
        c.check(abn == (pro and over_selfnorm), lambda: f"(1)<=>(3) fails for {_d(H)}")


def suite_L1_12(c: Checker) -> None:
    G = c.G
    pron = _pronormal_bits(G)
    normals = c.normal_sample()
    for H in c.subgroups():
        pro = H.bits in pron
        if pro:
            for U in c.pick(_overgroups(c, H), SAMPLE_SUBGROUPS):
                c.check(is_pronormal(U, H), lambda: f"(1) {_d(H)} not pronormal in {_d(U)}")
        for N in normals:
            Q = quotient_group(G, N)
            qpro = is_pronormal(Q.group, Q.image_of(H))
            if N <= H:
                c.check(pro == qpro, lambda: f"(2) pronormality of {_d(H)} differs mod {_d(N)}")
            elif pro:
                c.check(qpro, lambda: f"(3) HN/N not pronormal: H={_d(H)}, N={_d(N)}")


# L1.13


def suite_L1_13(c: Checker) -> None:
    G = c.G
    ns = [N for N in minimal_normal_subgroups(G) if N.order < G.order and centralizer(G, N) == N]
    if not ns:
        c.skip("no self-centralizing proper minimal normal subgroup")
    pairs = _nilpotent_factorizations(G)
    if not pairs:
        c.skip("no factorization into nilpotent subgroups")
    for A, B in c.pick(pairs, 4 * SAMPLE_SUBGROUPS):
        for N in ns:
            w = lambda: f"A={_d(A)}, B={_d(B)}, N={_d(N)}"
            c.check((A & B).order == 1, lambda: f"(1) A&B != 1: {w()}")
            c.check(N <= A or N <= B, lambda: f"(2) N not in A or B: {w()}")
            for X, Y in ((A, B), (B, A)):
                if N <= X:
                    ps = prime_factors(X.order)
                    c.check(
                        len(ps) == 1 and Y.order % ps[0] != 0,
                        lambda: f"(3) N <= {_d(X)} but not p-group / p'-group split: {w()}",
                    )


# L2.1


def suite_L2_1(c: Checker) -> None:
    G = c.G
    normals = c.normal_sample()
    for H in c.subgroups():
        P = permutizer(G, H)
        # (1)
        for U in c.pick(_overgroups(c, H), SAMPLE_SUBGROUPS):
            c.check(permutizer(U, H) <= P, lambda: f"(1) P_U(H) not in P_G(H): H={_d(H)}, U={_d(U)}")
        # (2)
        for g in c.elements():
            lhs = conjugate_subgroup(P, g)
            rhs = permutizer(G, conjugate_subgroup(H, g))
            c.check(lhs == rhs, lambda: f"(2) P_G(H)^g != P_G(H^g): H={_d(H)}, g={G.elements[g]}")
        # (3)
        c.check(normalizer(G, H) <= P, lambda: f"(3) N_G(H) not in P_G(H): {_d(H)}")
        for N in normals:
            Q = quotient_group(G, N)
            image = Q.image_of(P)
            PQ = permutizer(Q.group, Q.image_of(H))
            # (4)
            c.check(image <= PQ, lambda: f"(4) P_G(H)N/N not in P_G/N(HN/N): H={_d(H)}, N={_d(N)}")
            # (5)
            if N <= H:
                c.check(image == PQ, lambda: f"(5) P_G/N(H/N) != P_G(H)/N: H={_d(H)}, N={_d(N)}")


# L2.2


def suite_L2_2(c: Checker) -> None:
    G = c.G
    normals = c.normal_sample()
    for H in c.subgroups():
        perm = is_permuteral(G, H)
        sperm = perm and _sperm(G, H)
        for N in normals:
            Q = quotient_group(G, N)
            HQ = Q.image_of(H)
            qperm = is_permuteral(Q.group, HQ)
            if perm:
                c.check(qperm, lambda: f"(1) HN/N not permuteral: H={_d(H)}, N={_d(N)}")
                c.check(is_permuteral(G, H.join(N)), lambda: f"(2) HN not permuteral: H={_d(H)}, N={_d(N)}")
            if N <= H:
                c.check(perm == qperm, lambda: f"(3) permuterality of {_d(H)} differs mod {_d(N)}")
            if sperm:
                c.check(_sperm(Q.group, HQ), lambda: f"(4) HN/N not strongly permuteral: H={_d(H)}, N={_d(N)}")


# L2.3 - L2.5


def _top_prime(c: Checker) -> int:
    if c.G.order == 1:
        c.skip("trivial group")
    return max(c.G.primes)


def suite_L2_3(c: Checker) -> None:
    G = c.G
    p = _top_prime(c)
    closed = is_p_closed(G, p)
    for H in sylow_subgroups(G, p):
        for Q in G.cyclic_subgroups:
            if H.order * Q.order == G.order * (H & Q).order:
                c.check(closed, lambda: f"G = HQ with H={_d(H)}, Q={_d(Q)} but G not {p}-closed")


def suite_L2_4(c: Checker) -> None:
    G = c.G
    p = _top_prime(c)
    closed = is_p_closed(G, p)
    for H in sylow_subgroups(G, p):
        if is_permuteral(G, H):
            c.check(closed, lambda: f"Sylow {_d(H)} permuteral but G not {p}-closed")
        else:
            c.check(True, "")


def _sylows(G: FiniteGroup) -> list[SubgroupRef]:
    return [P for p in G.primes for P in sylow_subgroups(G, p)]


def suite_L2_5(c: Checker) -> None:
    G = c.G
    if all(is_permuteral(G, P) for P in _sylows(G)):
        c.check(is_ore_dispersive(G), "all Sylow subgroups permuteral but G not Ore dispersive")
    else:
        c.check(True, "")


# L2.6 and C2.6.x


def _require_supersoluble(c: Checker) -> None:
    if not is_supersoluble(c.G):
        c.skip("not supersoluble")


def suite_L2_6(c: Checker) -> None:
    G = c.G
    _require_supersoluble(c)
    pron = _pronormal_bits(G)
    for H in c.subgroups():
        if H.bits in pron:
            c.check(_sperm(G, H), lambda: f"pronormal {_d(H)} not strongly permuteral")
        else:
            c.check(True, "")


def _all_sperm(c: Checker, subs: Iterable[SubgroupRef], label: str) -> None:
    for H in subs:
        c.check(_sperm(c.G, H), lambda: f"{label} {_d(H)} not strongly permuteral")


def suite_C2_6_1(c: Checker) -> None:
    _require_supersoluble(c)
    _all_sperm(c, _sylows(c.G), "Sylow")


def suite_C2_6_2(c: Checker) -> None:
    _require_supersoluble(c)
    _all_sperm(c, carter_subgroups(c.G), "Carter")


def suite_C2_6_3(c: Checker) -> None:
    _require_supersoluble(c)
    _all_sperm(c, [H for H in c.nodes if _is_hall(c.G, H)], "Hall")


# E2.7


def suite_E2_7(c: Checker) -> None:
    from .catalog import make_example_2_7

    if c.name != "example2.7":
        c.skip("fixture suite; applies to example2.7 only")
    G, a, b = make_example_2_7()
    G = c.G
    e = G.identity
    c.check(G.order == 16, f"order {G.order} != 16")
    for label, w in (("a^4", a**4), ("b^4", b**4), ("(ab)^2", (a * b) ** 2), ("(a^-1 b)^2", (a.inverse() * b) ** 2)):
        c.check(w == e, f"relation {label} fails")
    H = G.subgroup([b * a])
    P = permutizer(G, H)
    c.check(P.order == 8, f"|P_G(<ba>)| = {P.order}")
    c.check(P.is_abelian() and P.as_group().exponent == 2, "P_G(<ba>) not elementary abelian")
    c.check(not is_permuteral(G, H), "<ba> is permuteral")
    c.check(is_supersoluble(G), "group is not supersoluble")


# L2.8


def suite_L2_8(c: Checker) -> None:
    G = c.G
    if not is_soluble(G):
        c.skip("not soluble")
    for H in c.nodes:
        if _is_hall(G, H) and _psn(G, H):
            c.check(_sperm(G, H), lambda: f"P-subnormal Hall {_d(H)} not strongly permuteral")
        else:
            c.check(True, "")


def suite_C2_8_1(c: Checker) -> None:
    if not is_w_supersoluble(c.G):
        c.skip("not w-supersoluble")
    _all_sperm(c, _sylows(c.G), "Sylow")


# P1.6, T1.7-local, T1.8, T1.9


def suite_P1_6(c: Checker) -> None:
    G = c.G
    c.check(not is_w_supersoluble(G) or is_ore_dispersive(G), "w-supersoluble but not Ore dispersive")


def suite_T1_7_local(c: Checker) -> None:
    G = c.G
    local, direct = wU_local_check(G), is_w_supersoluble(G)
    c.check(local == direct, f"local-function test {local} != Sylow P-subnormality test {direct}")


def suite_T1_8(c: Checker) -> None:
    G = c.G
    if not is_w_supersoluble(G):
        c.skip("not w-supersoluble")
    for H in c.lattice.class_representatives():
        if len(prime_factors(H.order)) == 2:
            c.check(is_supersoluble(H.as_group()), lambda: f"biprimary {_d(H)} not supersoluble")
    if c.checks == 0:
        c.check(True, "")


def suite_T1_9(c: Checker) -> None:
    G = c.G
    for K, H in _chief_factors(G):
        ps = prime_factors(H.order // K.order)
        if len(ps) != 1:
            continue
        p = ps[0]
        act = chief_factor_action(G, K, H)
        in_class = act.abelian and (p - 1) % act.exponent == 0
        c.check(
            (H.order // K.order == p) == in_class,
            lambda: f"chief factor {_d(H)}/{_d(K)}: order {H.order // K.order}, action {act}",
        )
    if c.checks == 0:
        c.skip("no abelian chief factors")


def suite_KW(c: Checker) -> None:
    G = c.G
    pairs = _nilpotent_factorizations(G)
    if not pairs:
        c.skip("no factorization into nilpotent subgroups")
    soluble = is_soluble(G)
    for A, B in pairs:
        c.check(soluble, lambda: f"G = AB with nilpotent A={_d(A)}, B={_d(B)} but G insoluble")


# T3.x and C3.x


def suite_T3_1(c: Checker) -> None:
    G = c.G
    syl = _sylows(G) if c.exhaustive else [P for p in G.primes for P in sylow_subgroups(G, p)[:1]]
    lhs = is_w_supersoluble(G)
    rhs = all(_sperm(G, P) for P in syl)
    c.check(lhs == rhs, f"w-supersoluble={lhs} but all Sylows strongly permuteral={rhs}")


def suite_T3_2(c: Checker) -> None:
    G = c.G
    if not is_metanilpotent(G):
        c.skip("not metanilpotent")
    syl = _sylows(G)
    s1 = is_supersoluble(G)
    s3 = all(is_permuteral(G, P) for P in syl)
    s2 = s3 and all(_sperm(G, P) for P in syl)
    c.check(s1 == s2 == s3, f"supersoluble={s1}, Sylows strongly permuteral={s2}, Sylows permuteral={s3}")


def suite_T3_3(c: Checker) -> None:
    G = c.G
    pron = _pronormal_bits(G)
    pronormal = [H for H in c.nodes if H.bits in pron]
    hall = [H for H in c.nodes if _is_hall(G, H)]
    s1 = is_supersoluble(G)
    s3 = all(is_permuteral(G, H) for H in pronormal)
    s2 = s3 and all(_sperm(G, H) for H in pronormal)
    s5 = all(is_permuteral(G, H) for H in hall)
    s4 = s5 and all(_sperm(G, H) for H in hall)
    c.check(
        s1 == s2 == s3 == s4 == s5,
        f"statements (1)-(5) disagree: {[s1, s2, s3, s4, s5]}",
    )


def suite_C3_3_1(c: Checker) -> None:
    G = c.G
    if all(_psn(G, H) for H in c.nodes if _is_hall(G, H)):
        c.check(is_supersoluble(G), "every Hall subgroup P-subnormal but G not supersoluble")
    else:
        c.check(True, "")


def suite_T3_4(c: Checker) -> None:
    G = c.G
    s1 = is_supersoluble(G)
    pairs = _nilpotent_factorizations(G)
    perm = [(A, B) for A, B in pairs if is_permuteral(G, A) and is_permuteral(G, B)]
    s3 = bool(perm)
    s2 = any(_sperm(G, A) and _sperm(G, B) for A, B in perm)
    c.check(s1 == s2 == s3, f"supersoluble={s1}, strongly permuteral factorization={s2}, permuteral factorization={s3}")
    if s1:
        F = fitting(G)
        for C in carter_subgroups(G):
            c.check(F.join(C).order == G.order, lambda: f"F(G)C != G for Carter {_d(C)}")
            c.check(is_permuteral(G, F) and is_permuteral(G, C), lambda: f"F(G) or Carter {_d(C)} not permuteral")


def suite_C3_4_1(c: Checker) -> None:
    G = c.G
    if len(G.primes) != 2:
        c.skip("order not divisible by exactly two primes")
    p, q = G.primes
    s = is_supersoluble(G)
    for A in c.pick(sylow_subgroups(G, p), SAMPLE_SUBGROUPS):
        for B in c.pick(sylow_subgroups(G, q), SAMPLE_SUBGROUPS):
            both = is_permuteral(G, A) and is_permuteral(G, B)
            c.check(s == both, lambda: f"supersoluble={s} but A={_d(A)}, B={_d(B)} permuteral={both}")


def suite_C3_4_2(c: Checker) -> None:
    G = c.G
    F = fitting(G)
    rhs = any(F.join(C).order == G.order and is_permuteral(G, C) for C in carter_subgroups(G))
    lhs = is_supersoluble(G)
    c.check(lhs == rhs, f"supersoluble={lhs} but G = F(G)H with H a permuteral Carter subgroup: {rhs}")


@dataclass(frozen=True)
class Suite:
    id: str
    func: Callable[[Checker], None]
    statement: str


SUITES: dict[str, Suite] = {
    s.id: s
    for s in [
        Suite("L1.1", suite_L1_1, "chief factor H/K, p | |H/K|: F_p(G) <= C_G(H/K), O_p(G/C_G(H/K)) = 1"),
        Suite("L1.2", suite_L1_2, "(G/K)^F = G^F K/K for F nilpotent, supersoluble"),
        Suite("L1.3", suite_L1_3, "soluble G: F/Phi = C(F/Phi) = Soc(G/Phi)"),
        Suite("L1.5", suite_L1_5, "P-subnormality calculus, items (1)-(8)"),
        Suite("L1.10", suite_L1_10, "H pronormal => N_G(H) abnormal"),
        Suite("L1.11", suite_L1_11, "abnormal <=> pronormal and self-normalizing"),
        Suite("L1.12", suite_L1_12, "pronormality passes to overgroups and quotients"),
        Suite("L1.13", suite_L1_13, "G = AB nilpotent, N = C_G(N) minimal normal: A&B = 1 and N in A or B"),
        Suite("L2.1", suite_L2_1, "basic permutizer properties (1)-(5)"),
        Suite("L2.2", suite_L2_2, "permuterality under quotients and products with normal subgroups"),
        Suite("L2.3", suite_L2_3, "G = HQ, H Sylow for the largest prime, Q cyclic => p-closed"),
        Suite("L2.4", suite_L2_4, "permuteral Sylow for the largest prime => p-closed"),
        Suite("L2.5", suite_L2_5, "all Sylows permuteral => Ore dispersive"),
        Suite("L2.6", suite_L2_6, "supersoluble => pronormal subgroups strongly permuteral"),
        Suite("C2.6.1", suite_C2_6_1, "supersoluble => Sylow subgroups strongly permuteral"),
        Suite("C2.6.2", suite_C2_6_2, "supersoluble => Carter subgroups strongly permuteral"),
        Suite("C2.6.3", suite_C2_6_3, "supersoluble => Hall subgroups strongly permuteral"),
        Suite("E2.7", suite_E2_7, "order-16 fixture: P_G(<ba>) elementary abelian of order 8"),
        Suite("L2.8", suite_L2_8, "soluble, P-subnormal Hall => strongly permuteral"),
        Suite("C2.8.1", suite_C2_8_1, "w-supersoluble => Sylow subgroups strongly permuteral"),
        Suite("P1.6", suite_P1_6, "w-supersoluble => Ore dispersive"),
        Suite("T1.7-local", suite_T1_7_local, "local-function test <=> w-supersoluble"),
        Suite("T1.8", suite_T1_8, "w-supersoluble => biprimary subgroups supersoluble"),
        Suite("T1.9", suite_T1_9, "chief p-factor of order p <=> Aut_G abelian of exponent | p-1"),
        Suite("KW", suite_KW, "product of two nilpotent subgroups is soluble"),
        Suite("T3.1", suite_T3_1, "w-supersoluble <=> all Sylows strongly permuteral"),
        Suite("T3.2", suite_T3_2, "metanilpotent: supersoluble <=> Sylows strongly permuteral <=> permuteral"),
        Suite("T3.3", suite_T3_3, "supersoluble <=> pronormal / Hall subgroups (strongly) permuteral"),
        Suite("C3.3.1", suite_C3_3_1, "all Hall subgroups P-subnormal => supersoluble"),
        Suite("T3.4", suite_T3_4, "supersoluble <=> G = AB with (strongly) permuteral nilpotent A, B"),
        Suite("C3.4.1", suite_C3_4_1, "G = AB, A, B Sylow: supersoluble <=> A, B permuteral"),
        Suite("C3.4.2", suite_C3_4_2, "supersoluble <=> G = F(G)H, H a permuteral Carter subgroup"),
    ]
}

# every in-scope result that must have a suite
REQUIRED_IDS = (
    "L1.1", "L1.2", "L1.3", "L1.5", "P1.6", "T1.7-local", "T1.8", "T1.9",
    "L1.10", "L1.11", "L1.12", "L1.13",
    "L2.1", "L2.2", "L2.3", "L2.4", "L2.5", "L2.6", "C2.6.1", "C2.6.2", "C2.6.3",
    "E2.7", "L2.8", "C2.8.1", "KW",
    "T3.1", "T3.2", "T3.3", "C3.3.1", "T3.4", "C3.4.1", "C3.4.2",
)  # fmt: skip


def missing_suites() -> list[str]:
    """Required ids without a registered suite (empty when complete)."""
    return [i for i in REQUIRED_IDS if i not in SUITES]
