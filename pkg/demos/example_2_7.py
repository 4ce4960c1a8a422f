"""The 16-element group <a, b | a^4 = b^4 = (ab)^2 = (a^-1 b)^2 = 1> and the
permutizer of <ba>."""

from permlab.catalog import make_example_2_7
from permlab.classify import is_supersoluble
from permlab.perm import format_cycles
from permlab.permutizer import is_permuteral, permutizer


def main():
    G, a, b = make_example_2_7()
    print(f"degree {G.degree}, order {G.order}")
    print(f"a = {format_cycles(a)}")
    print(f"b = {format_cycles(b)}")
    H = G.subgroup([b * a])
    P = permutizer(G, H)
    print(f"<ba> has order {H.order}")
    print(f"P_G(<ba>) has order {P.order}, abelian {P.is_abelian()}, exponent {P.as_group().exponent}")
    print(f"<ba> permuteral: {is_permuteral(G, H)}; G supersoluble: {is_supersoluble(G)}")


if __name__ == "__main__":
    main()
