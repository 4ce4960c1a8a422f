"""Named groups, the group file format and corpus specs."""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Optional, Sequence

from .group import CapExceededError, FiniteGroup, closure, max_order
from .perm import Permutation, compose, format_cycles, parse_cycles

__all__ = [
    "CatalogEntry",
    "CATALOG",
    "GroupFileError",
    "make_cyclic",
    "make_dihedral",
    "make_symmetric",
    "make_alternating",
    "make_elementary_abelian",
    "make_frobenius",
    "make_quaternion",
    "make_sl23",
    "make_dicyclic12",
    "direct_product",
    "make_psl27",
    "make_example_2_7",
    "make_wu_not_u",
    "parse_group_file",
    "write_group_file",
    "build",
    "load_group",
    "corpus",
    "corpus_members",
    "CorpusMember",
    "DEFAULT_CORPUS",
]


def _perm0(img: Sequence[int]) -> Permutation:
    return Permutation(img, zero_based=True)


def _cycle(points: Sequence[int], degree: int) -> Permutation:
    img = list(range(degree))
    for i, p in enumerate(points):
        img[p] = points[(i + 1) % len(points)]
    return _perm0(img)


def make_cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("n must be positive")
    gens = [_cycle(range(n), n)] if n > 1 else []
    return closure(n, gens)


def make_dihedral(n: int) -> FiniteGroup:
    """Symmetries of the regular n-gon (order 2n), n >= 3."""
    if n < 3:
        raise ValueError("dihedral groups need n >= 3")
    rot = _cycle(range(n), n)
    refl = _perm0([(-i) % n for i in range(n)])
    return closure(n, [rot, refl])


def make_symmetric(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return closure(1, [])
    gens = [_cycle(range(n), n), _cycle([0, 1], n)] if n > 2 else [_cycle([0, 1], n)]
    return closure(n, gens)


def make_alternating(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("n must be positive")
    return closure(n, [_cycle([i, i + 1, i + 2], n) for i in range(n - 2)])


def direct_product(G1: FiniteGroup, G2: FiniteGroup) -> FiniteGroup:
    """Product acting on disjoint point sets (points of ``G2`` shifted)."""
    d1, d2 = G1.degree, G2.degree
    gens = [_perm0(g.array_form + tuple(range(d1, d1 + d2))) for g in G1.generators]
    gens += [_perm0(tuple(range(d1)) + tuple(x + d1 for x in g.array_form)) for g in G2.generators]
    return closure(d1 + d2, gens)


def make_elementary_abelian(p: int, k: int) -> FiniteGroup:
    G = make_cyclic(p)
    for _ in range(k - 1):
        G = direct_product(G, make_cyclic(p))
    return G


def make_frobenius(p: int, k: int) -> FiniteGroup:
    """Affine maps ``x -> a x + b`` of F_p with ``a`` of order ``k``."""
    if (p - 1) % k:
        raise ValueError("k must divide p - 1")
    a = next(x for x in range(1, p) if _mult_order(x, p) == k)
    return closure(p, [_perm0([(x + 1) % p for x in range(p)]), _perm0([(a * x) % p for x in range(p)])])


def _mult_order(a: int, p: int) -> int:
    k, x = 1, a % p
    while x != 1:
        x = (x * a) % p
        k += 1
    return k


# 2x2 matrices over F_q acting on vectors (x, y); point index x + q*y


def _vectors(q: int) -> list[tuple[int, int]]:
    return [(x, y) for y in range(q) for x in range(q)]


def _apply(M, v, q):
    return ((M[0][0] * v[0] + M[0][1] * v[1]) % q, (M[1][0] * v[0] + M[1][1] * v[1]) % q)


def _linear_perm(M, points: list[tuple[int, int]], q: int) -> Permutation:
    pos = {v: i for i, v in enumerate(points)}
    return _perm0([pos[_apply(M, v, q)] for v in points])


def _nonzero(q: int) -> list[tuple[int, int]]:
    return [v for v in _vectors(q) if v != (0, 0)]


def make_quaternion() -> FiniteGroup:
    """Q8 acting regularly on the nonzero vectors of F_3^2."""
    pts = _nonzero(3)
    i = ((0, -1), (1, 0))
    j = ((1, 1), (1, -1))
    return closure(8, [_linear_perm(i, pts, 3), _linear_perm(j, pts, 3)])


def make_sl23() -> FiniteGroup:
    """SL(2,3) on the 8 nonzero vectors of F_3^2."""
    pts = _nonzero(3)
    return closure(8, [_linear_perm(((1, 1), (0, 1)), pts, 3), _linear_perm(((1, 0), (1, 1)), pts, 3)])


def make_dicyclic12() -> FiniteGroup:
    """Z3 x| Z4 with the generator of Z4 inverting Z3; degree 7."""
    return closure(7, [parse_cycles("(1 2 3)", 7), parse_cycles("(2 3)(4 5 6 7)", 7)])


def make_psl27() -> FiniteGroup:
    """PSL(2,7) on the projective line: points 1..7 are 0..6, point 8 is infinity."""
    # x -> x + 1 and x -> -1/x
    return closure(8, [parse_cycles("(1 2 3 4 5 6 7)", 8), parse_cycles("(1 8)(2 7)(3 4)(5 6)", 8)])


def _order4_representatives(degree: int) -> list[Permutation]:
    reps = []
    for n4 in range(1, degree // 4 + 1):
        for n2 in range((degree - 4 * n4) // 2 + 1):
            pts = iter(range(degree))
            img = list(range(degree))
            for size in [4] * n4 + [2] * n2:
                cyc = [next(pts) for _ in range(size)]
                for i, p in enumerate(cyc):
                    img[p] = cyc[(i + 1) % size]
            reps.append(_perm0(img))
    return sorted(reps)


@lru_cache(maxsize=None)
def _example_2_7_generators() -> tuple[int, Permutation, Permutation]:
    # (ab)^2 = 1 means b = a^-1 t for an involution (or identity) t
    for degree in range(4, 9):
        ident = Permutation.identity(degree)
        perms = (_perm0(img) for img in itertools.permutations(range(degree)))
        involutions = [t for t in perms if compose(t, t) == ident]
        for a in _order4_representatives(degree):
            a_inv = a.inverse()
            hits = []
            for t in involutions:
                b = compose(a_inv, t)
                if b ** 4 != ident:
                    continue
                c = compose(a_inv, b)
                if compose(c, c) != ident:
                    continue
                try:
                    G = closure(degree, [a, b], cap=16)
                except CapExceededError:
                    continue
                if G.order == 16:
                    hits.append(b)
            if hits:
                return degree, a, min(hits)
    raise AssertionError("no permutation realisation of the order-16 presentation found")


def make_example_2_7() -> tuple[FiniteGroup, Permutation, Permutation]:
    """``<a, b | a^4 = b^4 = (ab)^2 = (a^-1 b)^2 = 1>`` of order 16.

    Returns the group and the generators ``a`` and ``b``.  The realisation
    is the first solution found by scanning degrees upward, ``a`` over the
    canonical representatives of order-4 cycle types and ``b`` in
    lexicographic order.
    """
    degree, a, b = _example_2_7_generators()
    G = closure(degree, [a, b])
    ident = G.identity
    assert a ** 4 == ident and b ** 4 == ident
    assert (a * b) ** 2 == ident and (a.inverse() * b) ** 2 == ident
    assert G.order == 16
    return G, a, b


def make_wu_not_u() -> FiniteGroup:
    """``[U]S3`` with ``U = F_7^2`` and S3 acting irreducibly; order 294.

    Degree-49 affine group ``v -> M v + u``; point index ``x + 7 y``.
    """
    q = 7
    pts = _vectors(q)
    r = ((0, q - 1), (1, q - 1))  # companion matrix of x^2 + x + 1
    s = ((0, 1), (1, 0))
    # faithful: <r, s> is nonabelian of order 6
    mats = {((1, 0), (0, 1))}
    frontier = list(mats)
    while frontier:
        M = frontier.pop()
        for g in (r, s):
            prod = tuple(tuple(sum(M[i][k] * g[k][j] for k in range(2)) % q for j in range(2)) for i in range(2))
            if prod not in mats:
                mats.add(prod)
                frontier.append(prod)
    assert len(mats) == 6
    assert _apply(r, _apply(s, (1, 0), q), q) != _apply(s, _apply(r, (1, 0), q), q)
    # irreducible: none of the 8 lines of F_7^2 is invariant under both r and s
    lines = [(1, m) for m in range(q)] + [(0, 1)]
    for d in lines:
        span = {((c * d[0]) % q, (c * d[1]) % q) for c in range(q)}
        assert not all(_apply(g, d, q) in span for g in (r, s)), f"invariant line {d}"
    pos = {v: i for i, v in enumerate(pts)}
    t1 = _perm0([pos[((x + 1) % q, y)] for x, y in pts])
    t2 = _perm0([pos[(x, (y + 1) % q)] for x, y in pts])
    G = closure(q * q, [t1, t2, _linear_perm(r, pts, q), _linear_perm(s, pts, q)])
    return G


# group files


class GroupFileError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def parse_group_file(text: str, cap: Optional[int] = None) -> FiniteGroup:
    """Parse ``degree <n>`` followed by ``gen <cycles>`` lines."""
    degree = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        keyword, _, rest = line.partition(" ")
        if keyword == "degree":
            if degree is not None:
                raise GroupFileError("duplicate degree line", lineno)
            try:
                degree = int(rest.strip())
            except ValueError:
                raise GroupFileError(f"bad degree {rest.strip()!r}", lineno) from None
            if degree < 1:
                raise GroupFileError("degree must be positive", lineno)
        elif keyword == "gen":
            if degree is None:
                raise GroupFileError("gen before degree", lineno)
            try:
                gens.append(parse_cycles(rest, degree))
            except ValueError as exc:
                raise GroupFileError(str(exc), lineno) from None
        else:
            raise GroupFileError(f"unknown keyword {keyword!r}", lineno)
    if degree is None:
        raise GroupFileError("missing degree line")
    return closure(degree, gens, cap)


def write_group_file(G: FiniteGroup) -> str:
    lines = [f"degree {G.degree}"]
    lines += [f"gen {format_cycles(g)}" for g in G.generators]
    return "\n".join(lines) + "\n"


# registry


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    builder: Callable[[], FiniteGroup]
    expected_order: int
    note: str = ""


def _e27() -> FiniteGroup:
    return make_example_2_7()[0]


_ENTRIES = [
    CatalogEntry("trivial", lambda: make_cyclic(1), 1),
    CatalogEntry("Z2", lambda: make_cyclic(2), 2),
    CatalogEntry("Z3", lambda: make_cyclic(3), 3),
    CatalogEntry("Z4", lambda: make_cyclic(4), 4),
    CatalogEntry("Z5", lambda: make_cyclic(5), 5),
    CatalogEntry("Z6", lambda: make_cyclic(6), 6),
    CatalogEntry("Z7", lambda: make_cyclic(7), 7),
    CatalogEntry("Z8", lambda: make_cyclic(8), 8),
    CatalogEntry("V4", lambda: make_elementary_abelian(2, 2), 4),
    CatalogEntry("E8", lambda: make_elementary_abelian(2, 3), 8),
    CatalogEntry("E9", lambda: make_elementary_abelian(3, 2), 9),
    CatalogEntry("S3", lambda: make_symmetric(3), 6),
    CatalogEntry("D8", lambda: make_dihedral(4), 8, "dihedral of order 8"),
    CatalogEntry("Q8", make_quaternion, 8),
    CatalogEntry("D10", lambda: make_dihedral(5), 10),
    CatalogEntry("D12", lambda: make_dihedral(6), 12),
    CatalogEntry("Dic12", make_dicyclic12, 12),
    CatalogEntry("A4", lambda: make_alternating(4), 12),
    CatalogEntry("Z3xS3", lambda: direct_product(make_cyclic(3), make_symmetric(3)), 18),
    CatalogEntry("F20", lambda: make_frobenius(5, 4), 20),
    CatalogEntry("F21", lambda: make_frobenius(7, 3), 21),
    CatalogEntry("SL23", make_sl23, 24),
    CatalogEntry("Z2xA4", lambda: direct_product(make_cyclic(2), make_alternating(4)), 24),
    CatalogEntry("S4", lambda: make_symmetric(4), 24),
    CatalogEntry("S3xS3", lambda: direct_product(make_symmetric(3), make_symmetric(3)), 36),
    CatalogEntry("A5", lambda: make_alternating(5), 60),
    CatalogEntry("S5", lambda: make_symmetric(5), 120),
    CatalogEntry("psl27", make_psl27, 168, "PSL(2,7) on the projective line over F_7"),
    CatalogEntry(
        "example2.7",
        _e27,
        16,
        "<a,b | a^4=b^4=(ab)^2=(a^-1 b)^2=1>; the presentation has order exactly 16, "
        "so every order-16 solution of the relations is the same group",
    ),
    CatalogEntry("wu-not-u", make_wu_not_u, 294, "F_7^2 x| S3, w-supersoluble but not supersoluble"),
]

CATALOG: dict[str, CatalogEntry] = {e.name: e for e in _ENTRIES}

DEFAULT_CORPUS = "catalog,subgroups-of:S4,subgroups-of:S5"


@lru_cache(maxsize=None)
def _build_cached(name: str) -> FiniteGroup:
    entry = CATALOG[name]
    G = entry.builder()
    if G.order != entry.expected_order:
        raise AssertionError(f"{name}: built order {G.order}, expected {entry.expected_order}")
    return G


def build(name: str, cap: Optional[int] = None) -> FiniteGroup:
    """Build (once) the catalog group ``name``."""
    if name not in CATALOG:
        raise KeyError(f"unknown group {name!r}")
    entry = CATALOG[name]
    cap = max_order() if cap is None else cap
    if entry.expected_order > cap:
        raise CapExceededError(f"{name} has order {entry.expected_order} > cap {cap}")
    return _build_cached(name)


def load_group(ref: str, cap: Optional[int] = None) -> FiniteGroup:
    """A catalog name or a path to a group file."""
    if ref in CATALOG:
        return build(ref, cap)
    if os.path.exists(ref):
        with open(ref, encoding="utf-8") as fh:
            return parse_group_file(fh.read(), cap=cap)
    raise KeyError(f"unknown group {ref!r} (not a catalog name or file)")


@dataclass(frozen=True)
class CorpusMember:
    """A named, not yet built corpus group.

    ``kind`` is ``"catalog"``, ``"file"`` or ``"subgroup"``; for the latter
    ``ref`` is the parent's catalog name and ``index`` the position of the
    conjugacy class of subgroups.
    """

    name: str
    kind: str
    ref: str
    index: int = 0
    order: Optional[int] = None

    def load(self, cap: Optional[int] = None) -> FiniteGroup:
        cap = max_order() if cap is None else cap
        if self.order is not None and self.order > cap:
            raise CapExceededError(f"{self.name} has order {self.order} > cap {cap}")
        if self.kind == "catalog":
            return build(self.ref, cap)
        if self.kind == "file":
            return load_group(self.ref, cap)
        return _subgroup_reps(self.ref)[self.index].as_group()


@lru_cache(maxsize=None)
def _subgroup_reps(base: str) -> tuple:
    from .subgroups import all_subgroups

    return tuple(all_subgroups(_build_cached(base)).class_representatives())


def corpus_members(spec: str) -> list[CorpusMember]:
    """Expand a comma-separated corpus spec without building anything
    beyond what the expansion itself needs.

    Tokens: a catalog name, ``catalog`` (every entry), ``default``,
    ``subgroups-of:<name>`` (one group per conjugacy class of subgroups)
    and ``file:<path>``.
    """
    out: list[CorpusMember] = []
    for token in (t.strip() for t in spec.split(",")):
        if not token:
            continue
        if token == "default":
            out.extend(corpus_members(DEFAULT_CORPUS))
        elif token == "catalog":
            out.extend(CorpusMember(n, "catalog", n, order=e.expected_order) for n, e in CATALOG.items())
        elif token.startswith("subgroups-of:"):
            base = token.split(":", 1)[1]
            if base not in CATALOG:
                raise KeyError(f"unknown group {base!r}")
            for i, H in enumerate(_subgroup_reps(base)):
                out.append(CorpusMember(f"{base}/sub{i:02d}.o{H.order}", "subgroup", base, i, H.order))
        elif token.startswith("file:"):
            path = token.split(":", 1)[1]
            if not os.path.exists(path):
                raise KeyError(f"no such group file {path!r}")
            out.append(CorpusMember(path, "file", path))
        elif token in CATALOG:
            out.append(CorpusMember(token, "catalog", token, order=CATALOG[token].expected_order))
        else:
            raise KeyError(f"unknown corpus token {token!r}")
    return out


def corpus(spec: str, cap: Optional[int] = None) -> list[tuple[str, FiniteGroup]]:
    """Expand and build a corpus spec (see :func:`corpus_members`)."""
    return [(m.name, m.load(cap)) for m in corpus_members(spec)]
