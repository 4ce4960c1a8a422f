"""Counterexample search with a small predicate algebra.

An expression combines named predicates with ``&``, ``|``, ``!`` and
parentheses, e.g. ``sylow & permuteral & !strongly-permuteral``.  If any
atom is a subgroup predicate the expression is evaluated on every
(group, conjugacy class of subgroups) pair, using one representative per
class; otherwise once per group.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd
from typing import Callable, Optional, Union

from .catalog import corpus_members
from .classify import (
    is_metanilpotent,
    is_ore_dispersive,
    is_soluble,
    is_supersoluble,
)
from .group import CapExceededError, FiniteGroup, SubgroupRef, normalizer
from .permutizer import (
    carter_subgroups,
    is_abnormal,
    is_p_subnormal,
    is_permuteral,
    is_pronormal,
    is_strongly_permuteral,
    is_w_supersoluble,
    satisfies_permutizer_condition,
)
from .subgroups import all_subgroups, is_prime

__all__ = [
    "ExpressionError",
    "GROUP_PREDICATES",
    "SUBGROUP_PREDICATES",
    "Witness",
    "parse_expression",
    "search_counterexamples",
]


class ExpressionError(ValueError):
    """Malformed predicate expression."""


def _sylow(G: FiniteGroup, H: SubgroupRef) -> bool:
    return H.order > 1 and H.is_p_group() and gcd(H.order, G.order // H.order) == 1


def _maximal(G: FiniteGroup, H: SubgroupRef) -> bool:
    L = all_subgroups(G)
    return L.index(H) in L.lower[len(L) - 1]


GROUP_PREDICATES: dict[str, Callable[[FiniteGroup], bool]] = {
    "soluble": is_soluble,
    "nilpotent-group": lambda G: G.whole.is_nilpotent(),
    "abelian-group": lambda G: G.whole.is_abelian(),
    "supersoluble": is_supersoluble,
    "w-supersoluble": is_w_supersoluble,
    "metanilpotent": is_metanilpotent,
    "ore-dispersive": is_ore_dispersive,
    "permutizer-condition": satisfies_permutizer_condition,
}

SUBGROUP_PREDICATES: dict[str, Callable[[FiniteGroup, SubgroupRef], bool]] = {
    "sylow": _sylow,
    "hall": lambda G, H: gcd(H.order, G.order // H.order) == 1,
    "permuteral": is_permuteral,
    "strongly-permuteral": lambda G, H: is_strongly_permuteral(all_subgroups(G), H),
    "p-subnormal": lambda G, H: is_p_subnormal(all_subgroups(G), H),
    "pronormal": is_pronormal,
    "abnormal": is_abnormal,
    "normal": lambda G, H: H.is_normal(),
    "carter": lambda G, H: H in carter_subgroups(G),
    "nilpotent": lambda G, H: H.is_nilpotent(),
    "abelian": lambda G, H: H.is_abelian(),
    "cyclic": lambda G, H: H.is_cyclic(),
    "self-normalizing": lambda G, H: normalizer(G, H) == H,
    "maximal": _maximal,
    "proper": lambda G, H: H.order < G.order,
    "trivial": lambda G, H: H.order == 1,
    "prime-index": lambda G, H: is_prime(G.order // H.order),
}

Node = Union[str, tuple]

_TOKEN = re.compile(r"\s*(?:([A-Za-z][A-Za-z0-9.\-]*)|(.))")


def _tokenize(text: str) -> list[str]:
    out = []
    for m in _TOKEN.finditer(text):
        name, sym = m.groups()
        if name:
            out.append(name)
        elif sym is not None and not sym.isspace():
            if sym not in "&|!()":
                raise ExpressionError(f"unexpected character {sym!r}")
            out.append(sym)
    return out


def parse_expression(text: str) -> Node:
    """Parse into nested tuples ``("and", a, b)``, ``("or", a, b)``,
    ``("not", a)`` with predicate names as leaves.  ``!`` binds tightest,
    then ``&``, then ``|``."""
    tokens = _tokenize(text)
    pos = 0

    def peek() -> Optional[str]:
        return tokens[pos] if pos < len(tokens) else None

    def take() -> str:
        nonlocal pos
        if pos >= len(tokens):
            raise ExpressionError("unexpected end of expression")
        pos += 1
        return tokens[pos - 1]

    def expr() -> Node:
        node = term()
        while peek() == "|":
            take()
            node = ("or", node, term())
        return node

    def term() -> Node:
        node = factor()
        while peek() == "&":
            take()
            node = ("and", node, factor())
        return node

    def factor() -> Node:
        tok = take()
        if tok == "!":
            return ("not", factor())
        if tok == "(":
            node = expr()
            if take() != ")":
                raise ExpressionError("expected ')'")
            return node
        if tok in "&|)":
            raise ExpressionError(f"unexpected {tok!r}")
        if tok not in GROUP_PREDICATES and tok not in SUBGROUP_PREDICATES:
            raise ExpressionError(f"unknown predicate {tok!r}")
        return tok

    if not tokens:
        raise ExpressionError("empty expression")
    node = expr()
    if pos != len(tokens):
        raise ExpressionError(f"unexpected {tokens[pos]!r}")
    return node


def _atoms(node: Node) -> set[str]:
    if isinstance(node, str):
        return {node}
    return set().union(*(_atoms(n) for n in node[1:]))


def _evaluate(node: Node, G: FiniteGroup, H: Optional[SubgroupRef]) -> bool:
    if isinstance(node, str):
        if node in GROUP_PREDICATES:
            return bool(GROUP_PREDICATES[node](G))
        return bool(SUBGROUP_PREDICATES[node](G, H))
    op = node[0]
    if op == "not":
        return not _evaluate(node[1], G, H)
    if op == "and":
        return _evaluate(node[1], G, H) and _evaluate(node[2], G, H)
    return _evaluate(node[1], G, H) or _evaluate(node[2], G, H)


@dataclass(frozen=True)
class Witness:
    group: str
    order: int
    subgroup: Optional[str] = None

    def __str__(self) -> str:
        s = f"{self.group} (order {self.order})"
        return s if self.subgroup is None else f"{s}: {self.subgroup}"


def search_counterexamples(
    expr: str, corpus: str, cap: Optional[int] = None, errors: Optional[list[str]] = None
) -> list[Witness]:
    """Every corpus group (or subgroup class) satisfying ``expr``, in corpus
    then lattice order.  Members over the cap are skipped and, if
    ``errors`` is given, noted there."""
    node = parse_expression(expr)
    per_subgroup = bool(_atoms(node) & SUBGROUP_PREDICATES.keys())
    out: list[Witness] = []
    for m in corpus_members(corpus):
        try:
            G = m.load(cap)
        except CapExceededError as exc:
            if errors is not None:
                errors.append(f"{m.name}: {exc}")
            continue
        if not per_subgroup:
            if _evaluate(node, G, None):
                out.append(Witness(m.name, G.order))
            continue
        for H in all_subgroups(G).class_representatives():
            if _evaluate(node, G, H):
                out.append(Witness(m.name, G.order, H.describe()))
    return out
