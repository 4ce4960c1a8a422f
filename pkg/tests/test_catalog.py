import pytest

from permlab.catalog import (
    CATALOG,
    GroupFileError,
    build,
    corpus,
    corpus_members,
    direct_product,
    load_group,
    make_alternating,
    make_cyclic,
    make_dihedral,
    make_elementary_abelian,
    make_example_2_7,
    make_psl27,
    make_symmetric,
    make_wu_not_u,
    parse_group_file,
    write_group_file,
)
from permlab.group import CapExceededError
from permlab.subgroups import all_subgroups, normal_subgroups


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_catalog_orders(name):
    assert build(name).order == CATALOG[name].expected_order


def test_family_constructors():
    assert make_symmetric(3).order == 6
    assert make_dihedral(5).order == 10
    assert make_elementary_abelian(3, 2).order == 9
    Z6, Z2xZ3 = make_cyclic(6), direct_product(make_cyclic(2), make_cyclic(3))
    for G in (Z6, Z2xZ3):
        assert G.order == 6 and G.whole.is_abelian() and G.exponent == 6
    A5 = make_alternating(5)
    assert A5.order == 60
    assert len(normal_subgroups(A5)) == 2


def test_psl27():
    G = make_psl27()
    assert G.order == 168 and G.degree == 8
    assert len(normal_subgroups(G)) == 2
    assert 168 % 3 == 0 and 168 % 9 != 0


def test_example_2_7_relations():
    G, a, b = make_example_2_7()
    e = G.identity
    assert G.order == 16
    assert a ** 4 == e and b ** 4 == e
    assert (a * b) ** 2 == e and (a.inverse() * b) ** 2 == e
    assert G.subgroup([a, b]) == G.whole


def test_wu_not_u_construction():
    G = make_wu_not_u()
    assert G.order == 294 and G.degree == 49
    # the translations form the unique minimal normal subgroup, of order 49
    minimal = [N for N in normal_subgroups(G) if N.order > 1][0]
    assert minimal.order == 49


def test_group_file_examples():
    G = parse_group_file("degree 3\ngen (1 2 3)\ngen (1 2)\n")
    assert G.order == 6
    assert parse_group_file("degree 1\n").order == 1
    with pytest.raises(GroupFileError) as err:
        parse_group_file("degree 3\ngen (1 4)")
    assert err.value.line == 2


@pytest.mark.parametrize(
    "text",
    [
        "",
        "gen (1 2)\n",
        "degree 3\ndegree 3\n",
        "degree x\n",
        "degree 3\nfoo (1 2)\n",
        "degree 0\n",
    ],
)
def test_group_file_errors(text):
    with pytest.raises(GroupFileError):
        parse_group_file(text)


def test_group_file_comments_and_blanks():
    text = "# S3\n\ndegree 3\ngen (1 2 3)  \n\n   # transposition\ngen (1 2)\n"
    assert parse_group_file(text).order == 6


def test_trailing_comment_is_an_error():
    with pytest.raises(GroupFileError):
        parse_group_file("degree 3  # points\n")


def test_group_file_cap():
    with pytest.raises(CapExceededError):
        parse_group_file("degree 5\ngen (1 2 3 4 5)\ngen (1 2)\n", cap=60)


def test_file_roundtrip_on_corpus():
    for name, G in corpus("default"):
        text = write_group_file(G)
        assert text.endswith("\n") and "\r" not in text
        H = parse_group_file(text)
        assert H.degree == G.degree
        assert list(H.elements) == list(G.elements), name


def test_load_group_from_file(tmp_path):
    path = tmp_path / "s3.grp"
    path.write_text(write_group_file(build("S3")), encoding="utf-8")
    assert load_group(str(path)).order == 6
    assert corpus(f"file:{path}")[0][1].order == 6
    with pytest.raises(KeyError):
        load_group("no-such-group")


def test_corpus_examples():
    assert [n for n, _ in corpus("S3")] == ["S3"]
    subs = corpus("subgroups-of:S4")
    assert len(subs) == 11
    assert len(corpus("subgroups-of:S5")) == 19
    named = corpus("psl27,example2.7,wu-not-u")
    assert [G.order for _, G in named] == [168, 16, 294]
    assert len(corpus_members("default")) == len(CATALOG) + 11 + 19


def test_corpus_subgroup_members_are_faithful():
    S4 = build("S4")
    reps = all_subgroups(S4).class_representatives()
    for (name, G), H in zip(corpus("subgroups-of:S4"), reps):
        assert G.order == H.order
        assert list(G.elements) == H.elements
        assert name.startswith("S4/sub")


def test_corpus_errors():
    with pytest.raises(KeyError):
        corpus("S3,nope")
    with pytest.raises(KeyError):
        corpus("subgroups-of:nope")


def test_corpus_cap_is_per_member():
    members = corpus_members("S3,psl27")
    assert members[0].load(cap=100).order == 6
    with pytest.raises(CapExceededError):
        members[1].load(cap=100)


def test_cap_env(monkeypatch):
    monkeypatch.setenv("PERMLAB_MAX_ORDER", "50")
    with pytest.raises(CapExceededError):
        build("A5")
    assert build("S4").order == 24


def test_example_2_7_presentation_order():
    # coset enumeration on the bare relations, independent of the search
    fp = pytest.importorskip("sympy.combinatorics.fp_groups")
    free = pytest.importorskip("sympy.combinatorics.free_groups")
    F, a, b = free.free_group("a b")
    P = fp.FpGroup(F, [a**4, b**4, (a * b) ** 2, (a**-1 * b) ** 2])
    assert P.order() == 16
