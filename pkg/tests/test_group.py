import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from permlab.catalog import build
from permlab.group import (
    CapExceededError,
    center,
    centralizer,
    closure,
    conjugate_subgroup,
    core,
    normalizer,
    permutes,
    quotient_group,
    set_product,
)
from permlab.perm import Permutation, compose, parse_cycles
from permlab.subgroups import all_subgroups, normal_subgroups


def S3():
    return build("S3")


def sub(G, *cycles):
    return G.subgroup([parse_cycles(c, G.degree) for c in cycles])


def test_closure_examples():
    assert closure(3, [parse_cycles("(1 2 3)", 3), parse_cycles("(1 2)", 3)]).order == 6
    assert closure(4, []).order == 1
    gens = [parse_cycles("(1 2 3 4 5 6 7)", 8), parse_cycles("(1 8)(2 7)(3 4)(5 6)", 8)]
    assert closure(8, gens).order == 168


def test_closure_canonical_order():
    G = closure(3, [parse_cycles("(1 2)", 3), parse_cycles("(1 2 3)", 3)])
    imgs = [p.images for p in G.elements]
    assert imgs == sorted(imgs)
    assert G.elements[0].is_identity()
    H = closure(3, [parse_cycles("(1 3 2)", 3), parse_cycles("(2 3)", 3)])
    assert H.elements == G.elements


def test_closure_cap():
    gens = [parse_cycles("(1 2 3 4 5)", 5), parse_cycles("(1 2)", 5)]
    with pytest.raises(CapExceededError):
        closure(5, gens, cap=100)
    assert closure(5, gens, cap=120).order == 120


def test_closure_env_cap(monkeypatch):
    monkeypatch.setenv("PERMLAB_MAX_ORDER", "10")
    with pytest.raises(CapExceededError):
        closure(4, [parse_cycles("(1 2 3 4)", 4), parse_cycles("(1 2)", 4)])


def test_closure_degree_check():
    with pytest.raises(ValueError):
        closure(3, [parse_cycles("(1 2)", 4)])


def test_table_matches_compose():
    G = build("S4")
    els = G.elements
    for i in range(G.order):
        for j in range(G.order):
            assert els[G.mul[i, j]] == compose(els[i], els[j])
        assert els[G.inv[i]] == els[i].inverse()


def test_set_product_examples():
    G = S3()
    A3 = sub(G, "(1 2 3)")
    T = sub(G, "(1 2)")
    assert set_product(A3, G.trivial) == frozenset(A3.elements)
    assert set_product(A3, T) == frozenset(G.elements)
    assert set_product(T, T) == frozenset(T.elements)


def test_set_product_parent_mismatch():
    with pytest.raises(ValueError):
        set_product(S3().whole, build("Z3").whole)


def test_permutes_examples():
    G = S3()
    assert permutes(sub(G, "(1 2)"), sub(G, "(1 2)"))
    assert permutes(sub(G, "(1 2)"), sub(G, "(1 2 3)"))
    assert not permutes(sub(G, "(1 2)"), sub(G, "(1 3)"))


def test_conjugate_examples():
    G = S3()
    H = sub(G, "(1 2)")
    assert conjugate_subgroup(H, G.identity) == H
    assert conjugate_subgroup(H, parse_cycles("(1 2 3)", 3)) == sub(G, "(2 3)")
    A3 = sub(G, "(1 2 3)")
    assert all(conjugate_subgroup(A3, g) == A3 for g in G.elements)


def test_conjugate_rejects_outsider():
    G = build("A4")
    with pytest.raises(ValueError):
        conjugate_subgroup(G.trivial, parse_cycles("(1 2)", 4))


def test_normalizer_centralizer_center():
    G = S3()
    assert normalizer(G, sub(G, "(1 2)")) == sub(G, "(1 2)")
    assert centralizer(G, [parse_cycles("(1 2 3)", 3)]) == sub(G, "(1 2 3)")
    assert center(G).order == 1
    for name in ("Z6", "V4", "E8"):
        A = build(name)
        assert center(A) == A.whole
    assert center(build("Q8")).order == 2


def test_core_examples():
    G = S3()
    assert core(G, G.whole) == G.whole
    assert core(G, sub(G, "(1 2)")).order == 1
    A3 = sub(G, "(1 2 3)")
    assert core(G, A3) == A3


def _check_quotient(G, N):
    Q = quotient_group(G, N)
    assert Q.group.order * N.order == G.order
    img = Q.image
    # homomorphism: image(xy) = image(x) image(y)
    assert np.array_equal(img[G.mul], Q.group.mul[img[:, None], img[None, :]])
    assert set(np.flatnonzero(img == 0)) == set(N.indices.tolist())


@pytest.mark.parametrize("name", ["S3", "S4", "D12", "Q8", "SL23", "E8", "S3xS3"])
def test_quotient_homomorphism(name):
    G = build(name)
    for N in normal_subgroups(G):
        _check_quotient(G, N)


def test_quotient_examples():
    G = S3()
    assert quotient_group(G, G.whole).group.order == 1
    A3 = sub(G, "(1 2 3)")
    Q = quotient_group(G, A3).group
    assert Q.order == 2 and Q.whole.is_cyclic()
    T = quotient_group(G, G.trivial).group
    assert T.order == 6 and not T.whole.is_abelian()
    with pytest.raises(ValueError):
        quotient_group(G, sub(G, "(1 2)"))


def test_quotient_preimage_roundtrip():
    G = build("S4")
    N = [M for M in normal_subgroups(G) if M.order == 4][0]
    Q = quotient_group(G, N)
    for K in all_subgroups(Q.group).nodes:
        assert Q.image_of(Q.preimage(K)) == K


def _closure_order(H, K):
    gens = H.generators + K.generators
    return closure(H.parent.degree, gens).order


def test_permutes_oracle_random_pairs():
    # HK = KH iff <H, K> has order |H||K|/|H & K|, on 1000 seeded pairs
    rng = random.Random(20240917)
    names = ["S4", "S3xS3", "D12", "SL23", "A5", "example2.7", "Z2xA4", "F20"]
    lattices = {n: all_subgroups(build(n)).nodes for n in names}
    for _ in range(1000):
        nodes = lattices[rng.choice(names)]
        H, K = rng.choice(nodes), rng.choice(nodes)
        expected = _closure_order(H, K) * (H & K).order == H.order * K.order
        assert permutes(H, K) == expected
        assert permutes(H, K) == (set_product(H, K) == set_product(K, H))


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_subgroup_invariants(data):
    G = build(data.draw(st.sampled_from(["S4", "D12", "SL23", "A5", "F21"])))
    nodes = all_subgroups(G).nodes
    H = data.draw(st.sampled_from(nodes))
    g = data.draw(st.integers(0, G.order - 1))
    assert G.order % H.order == 0
    assert conjugate_subgroup(H, g).order == H.order
    assert H <= normalizer(G, H)
    S = [data.draw(st.integers(0, G.order - 1)) for _ in range(3)]
    assert center(G) <= centralizer(G, S)


def test_as_group_roundtrip():
    G = build("S4")
    for H in all_subgroups(G).nodes:
        local = H.as_group()
        assert local.order == H.order
        assert H.from_local(H.to_local(H)) == H
        for K in all_subgroups(G).nodes:
            if K <= H:
                assert H.from_local(H.to_local(K)) == K
