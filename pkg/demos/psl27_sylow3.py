"""A Sylow 3-subgroup of PSL(2,7) that is permuteral but not strongly so.

Run with ``python demos/psl27_sylow3.py``.
"""

from permlab.catalog import build
from permlab.permutizer import is_permuteral, permutizer, strongly_permuteral_witness
from permlab.subgroups import all_subgroups, intermediate_subgroups, sylow_subgroups


def main():
    G = build("psl27")
    L = all_subgroups(G)
    print(f"PSL(2,7): order {G.order}, {len(L)} subgroups in {len(L.classes)} classes")

    H = sylow_subgroups(G, 3)[0]
    print(f"H = {H.describe()}")
    print(f"P_G(H) has order {permutizer(G, H).order}, permuteral: {is_permuteral(G, H)}")

    # walk up the lattice and show where the permutizer stops growing
    for U in intermediate_subgroups(L, H):
        P = permutizer(U, H)
        mark = "" if P == U else "   <- P_U(H) is proper"
        print(f"  U of order {U.order:>3}: P_U(H) has order {P.order}{mark}")

    U = strongly_permuteral_witness(L, H)
    print(f"first witness: {U.describe()}, where P_U(H) = H")


if __name__ == "__main__":
    main()
