import pytest

from permlab.catalog import build, corpus
from permlab.classify import (
    chief_factor_action,
    chief_series,
    classify,
    derived_subgroup,
    fitting,
    fitting_series,
    frattini,
    in_A_class,
    is_chief_factor,
    is_metanilpotent,
    is_ore_dispersive,
    is_p_closed,
    is_soluble,
    is_supersoluble,
    is_supersoluble_huppert,
    nilpotent_length,
    p_nilpotent_radical,
    residual,
    socle,
    wU_local_check,
)
from permlab.perm import parse_cycles
from permlab.subgroups import normal_subgroups, sylow_subgroups


def sub(G, *cycles):
    return G.subgroup([parse_cycles(c, G.degree) for c in cycles])


@pytest.fixture(scope="module")
def everything():
    return corpus("default")


def test_characteristic_subgroups_of_s3():
    G = build("S3")
    A3 = sub(G, "(1 2 3)")
    assert fitting(G) == A3
    assert frattini(G).order == 1
    assert socle(G) == A3
    assert derived_subgroup(G) == A3
    for name in ("D8", "Q8", "E8", "Z6"):
        N = build(name)
        assert fitting(N) == N.whole


def test_frattini_of_p_groups():
    assert frattini(build("Q8")).order == 2
    assert frattini(build("Z8")).order == 4
    assert frattini(build("E8")).order == 1


def test_p_nilpotent_radical():
    G = build("S3")
    assert p_nilpotent_radical(G, 2) == G.whole
    assert p_nilpotent_radical(G, 3) == sub(G, "(1 2 3)")
    D8 = build("D8")
    assert p_nilpotent_radical(D8, 2) == D8.whole


def test_chief_series_examples():
    assert chief_series(build("S3")).factor_orders == [3, 2]
    assert chief_series(build("Z7")).factor_orders == [7]
    assert chief_series(build("A5")).factor_orders == [60]
    assert chief_series(build("S4")).factor_orders == [4, 3, 2]


def test_chief_series_invariants(everything):
    for name, G in everything:
        cs = chief_series(G)
        prod = 1
        for K, H in cs.factors():
            assert K.is_normal() and H.is_normal()
            assert is_chief_factor(G, K, H)
            prod *= H.order // K.order
        assert prod == G.order, name


def test_chief_factor_action():
    G = build("S3")
    A3 = sub(G, "(1 2 3)")
    act = chief_factor_action(G, G.trivial, A3)
    assert (act.order, act.abelian, act.exponent) == (2, True, 2)
    assert act.centralizer == A3
    top = chief_factor_action(G, A3, G.whole)
    assert top.order == 1
    Z = build("Z6")
    for K, H in chief_series(Z).factors():
        assert chief_factor_action(Z, K, H).order == 1
    with pytest.raises(ValueError):
        chief_factor_action(G, G.trivial, G.whole)


def test_supersoluble_examples():
    assert is_supersoluble(build("S3"))
    assert not is_supersoluble(build("A4"))
    for name in ("D8", "Q8", "E9", "Z8", "example2.7"):
        assert is_supersoluble(build(name))


def test_huppert_cross_check(everything):
    for name, G in everything:
        assert is_supersoluble(G) == (is_soluble(G) and is_supersoluble_huppert(G)), name


def test_ore_dispersive_examples():
    assert is_ore_dispersive(build("S3"))
    assert not is_ore_dispersive(build("A4"))
    assert is_ore_dispersive(build("D8"))
    assert is_ore_dispersive(build("F21"))


def test_p_closed():
    S3 = build("S3")
    assert is_p_closed(S3, 3) and not is_p_closed(S3, 2)
    assert is_p_closed(build("Q8"), 2)
    assert is_p_closed(build("A4"), 2)
    with pytest.raises(ValueError):
        is_p_closed(S3, 5)


def test_p_closed_matches_sylow_count(everything):
    for name, G in everything:
        for p in G.primes:
            assert is_p_closed(G, p) == (len(sylow_subgroups(G, p)) == 1), (name, p)


def test_nilpotent_length():
    assert nilpotent_length(build("trivial")) == 0
    assert nilpotent_length(build("D8")) == 1
    assert nilpotent_length(build("S3")) == 2
    assert nilpotent_length(build("S4")) == 3
    assert [F.order for F in fitting_series(build("S4"))] == [1, 4, 12, 24]
    with pytest.raises(ValueError):
        nilpotent_length(build("A5"))
    assert not is_metanilpotent(build("A5"))
    assert is_metanilpotent(build("S3")) and not is_metanilpotent(build("S4"))


def test_residuals():
    G = build("S3")
    assert residual(G, "nilpotent") == sub(G, "(1 2 3)")
    assert residual(build("D12"), "supersoluble").order == 1
    A5 = build("A5")
    assert residual(A5, "supersoluble") == A5.whole
    assert residual(build("S4"), "supersoluble").order == 4
    with pytest.raises(ValueError):
        residual(G, "abelian")


def test_in_A_class():
    assert in_A_class(build("Z2"), 3)
    assert not in_A_class(build("Z3"), 3)
    assert not in_A_class(build("S3"), 7)
    assert in_A_class(build("Z6"), 7)


def test_local_check_examples():
    assert wU_local_check(build("S3"))
    assert not wU_local_check(build("S4"))
    assert wU_local_check(build("Q8"))
    assert wU_local_check(build("wu-not-u"))


def test_classification_implications(everything):
    for name, G in everything:
        c = classify(G)
        if c.nilpotent:
            assert c.supersoluble, name
        if c.supersoluble:
            assert c.w_supersoluble, name
        if c.w_supersoluble:
            assert c.soluble and c.ore_dispersive, name
        if c.soluble:
            assert c.metanilpotent == (c.nilpotent_length <= 2), name
        else:
            assert c.nilpotent_length is None and not c.metanilpotent
        assert set(c.p_closed) == set(G.primes)


def test_classification_as_dict():
    d = classify(build("S3")).as_dict()
    assert d["p_closed"] == {"2": False, "3": True}
    assert d["nilpotent_length"] == 2
