"""F_7^2 x| S3: every Sylow subgroup reaches G through prime indices, yet
the group is not supersoluble."""

from permlab.catalog import build
from permlab.classify import chief_series, is_supersoluble, wU_local_check
from permlab.permutizer import is_w_supersoluble, p_subnormal_chain
from permlab.subgroups import all_subgroups, sylow_subgroup


def main():
    G = build("wu-not-u")
    L = all_subgroups(G)
    print(f"order {G.order}, {len(L)} subgroups")
    print(f"chief factor orders: {chief_series(G).factor_orders}")
    print(f"supersoluble: {is_supersoluble(G)}")
    print(f"w-supersoluble: {is_w_supersoluble(G)} (local test agrees: {wU_local_check(G)})")
    for p in G.primes:
        print(f"  Sylow {p}: {p_subnormal_chain(L, sylow_subgroup(G, p))}")


if __name__ == "__main__":
    main()
