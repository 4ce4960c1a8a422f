"""Command-line interface: ``permlab <command> ...``.

Exit status: 0 on success, 1 when a suite fails or ``search --expect-none``
finds a witness, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .catalog import CATALOG, DEFAULT_CORPUS, GroupFileError, load_group
from .classify import chief_series, classify, fitting
from .group import CapExceededError, FiniteGroup, SubgroupRef, normalizer
from .perm import format_cycles, parse_cycles
from .permutizer import carter_subgroups, p_subnormal_chain, permutizer, strongly_permuteral_witness
from .search import SUBGROUP_PREDICATES, ExpressionError, search_counterexamples
from .subgroups import all_subgroups, hall_subgroups, is_prime, sylow_subgroups
from .suites import SUITES
from .verify import VerifyOptions, run_suite


class UsageError(Exception):
    pass


def parse_subgroup_spec(G: FiniteGroup, spec: str) -> SubgroupRef:
    """``sylow:<p>``, ``hall:<p1,p2,...>``, ``gens:(cycles);(cycles)``,
    ``fitting`` or ``carter:<index>``.  Sylow and Hall specs pick the
    canonically first such subgroup."""
    kind, _, arg = spec.partition(":")
    try:
        if kind == "sylow":
            p = int(arg)
            if not is_prime(p) or G.order % p:
                raise UsageError(f"{p} is not a prime divisor of |G| = {G.order}")
            return sylow_subgroups(G, p)[0]
        if kind == "hall":
            primes = [int(x) for x in arg.split(",") if x.strip()]
            if not primes or not all(is_prime(p) for p in primes):
                raise UsageError(f"bad prime list {arg!r}")
            found = hall_subgroups(G, primes)
            if not found:
                raise UsageError(f"no Hall {primes}-subgroup")
            return found[0]
        if kind == "gens":
            perms = [parse_cycles(t, G.degree) for t in arg.split(";") if t.strip()]
            for p in perms:
                if p not in G:
                    raise UsageError(f"{format_cycles(p)} is not an element of the group")
            return G.subgroup(perms)
        if kind == "fitting" and not arg:
            return fitting(G)
        if kind == "carter":
            cs = carter_subgroups(G)
            i = int(arg)
            if not 0 <= i < len(cs):
                raise UsageError(f"carter index {i} out of range (group has {len(cs)})")
            return cs[i]
    except ValueError as exc:
        raise UsageError(f"bad subgroup spec {spec!r}: {exc}") from None
    raise UsageError(f"bad subgroup spec {spec!r}")


def _load(ref: str) -> FiniteGroup:
    try:
        return load_group(ref)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None


def cmd_catalog(args) -> int:
    width = max(len(n) for n in CATALOG)
    for name, e in CATALOG.items():
        note = f"  {e.note}" if e.note else ""
        print(f"{name:<{width}}  {e.expected_order:>4}{note}")
    return 0


def cmd_show(args) -> int:
    G = _load(args.group)
    print(f"degree {G.degree}, order {G.order}")
    for g in G.generators:
        print(f"gen {format_cycles(g)}")
    for k, v in classify(G).as_dict().items():
        print(f"{k}: {v}")
    print(f"chief factors: {chief_series(G).factor_orders}")
    return 0


def cmd_subgroups(args) -> int:
    G = _load(args.group)
    L = all_subgroups(G)
    print(f"{len(L)} subgroups in {len(L.classes)} conjugacy classes")
    for i, cls in enumerate(L.classes):
        H = L.nodes[cls[0]]
        flags = "normal" if len(cls) == 1 else f"{len(cls)} conjugates"
        print(f"[{i}] {H.describe()}  {flags}")
    return 0


def cmd_permutizer(args) -> int:
    G = _load(args.group)
    H = parse_subgroup_spec(G, args.sub)
    P = permutizer(G, H)
    print(f"H = {H.describe()}")
    print(f"P_G(H) = {P.describe()}")
    print(f"N_G(H) = {normalizer(G, H).describe()}")
    print(f"permuteral: {'true' if P.order == G.order else 'false'}")
    return 0


def cmd_check(args) -> int:
    G = _load(args.group)
    H = parse_subgroup_spec(G, args.sub)
    prop = args.prop
    if prop not in SUBGROUP_PREDICATES:
        raise UsageError(f"unknown property {prop!r}; choose from {', '.join(SUBGROUP_PREDICATES)}")
    value = SUBGROUP_PREDICATES[prop](G, H)
    print("true" if value else "false")
    print(f"H = {H.describe()}")
    if prop == "strongly-permuteral" and not value:
        U = strongly_permuteral_witness(all_subgroups(G), H)
        print(f"witness U = {U.describe()}; P_U(H) = {permutizer(U, H).describe()}")
    elif prop == "p-subnormal" and value:
        print(f"chain {p_subnormal_chain(all_subgroups(G), H)}")
    return 0


def cmd_verify(args) -> int:
    if args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; known: {', '.join(SUITES)}")
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    try:
        report = run_suite(args.suite, args.corpus, VerifyOptions(args.max_order, args.jobs))
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    sys.stdout.write(report.to_json() if args.format == "json" else report.to_text(args.jobs))
    return 0 if report.passed else 1


def cmd_search(args) -> int:
    errors: list[str] = []
    try:
        found = search_counterexamples(args.expr, args.corpus, args.max_order, errors)
    except (ExpressionError, KeyError) as exc:
        raise UsageError(str(exc.args[0])) from None
    for w in found:
        print(w)
    for e in errors:
        print(f"skipped {e}", file=sys.stderr)
    print(f"{len(found)} witness(es)", file=sys.stderr)
    return 1 if args.expect_none and found else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="permlab", description="Permutizers and related subgroup properties.")
    sub = parser.add_subparsers(dest="command", required=True)

    cat = sub.add_parser("catalog", help="list the named groups")
    cat.add_argument("action", choices=["list"])
    cat.set_defaults(func=cmd_catalog)

    for name, func, helptext in (
        ("show", cmd_show, "order, generators and classification"),
        ("subgroups", cmd_subgroups, "conjugacy classes of subgroups"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("group", help="catalog name or group file")
        p.set_defaults(func=func)

    perm = sub.add_parser("permutizer", help="compute P_G(H)")
    perm.add_argument("group")
    perm.add_argument("--sub", required=True, help="sylow:p | hall:p,q | gens:(..);(..) | fitting | carter:i")
    perm.set_defaults(func=cmd_permutizer)

    chk = sub.add_parser("check", help="test a subgroup property")
    chk.add_argument("group")
    chk.add_argument("--sub", required=True)
    chk.add_argument("--prop", required=True, help=", ".join(SUBGROUP_PREDICATES))
    chk.set_defaults(func=cmd_check)

    ver = sub.add_parser("verify", help="run a property suite over a corpus")
    ver.add_argument("--suite", required=True)
    ver.add_argument("--corpus", default="default")
    ver.add_argument("--max-order", type=int, default=None)
    ver.add_argument("--jobs", type=int, default=1)
    ver.add_argument("--format", choices=["text", "json"], default="text")
    ver.set_defaults(func=cmd_verify)

    sea = sub.add_parser("search", help="find groups or subgroups satisfying a predicate expression")
    sea.add_argument("--expr", required=True)
    sea.add_argument("--corpus", default=DEFAULT_CORPUS)
    sea.add_argument("--max-order", type=int, default=None)
    sea.add_argument("--expect-none", action="store_true", help="exit 1 if anything is found")
    sea.set_defaults(func=cmd_search)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, GroupFileError, CapExceededError) as exc:
        print(f"permlab: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
