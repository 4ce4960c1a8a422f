import json

import pytest

from permlab.catalog import build, write_group_file
from permlab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_catalog_list(capsys):
    code, out, _ = run(capsys, "catalog", "list")
    assert code == 0
    assert any(line.split()[:2] == ["psl27", "168"] for line in out.splitlines())


def test_check_strongly_permuteral(capsys):
    code, out, _ = run(capsys, "check", "psl27", "--sub", "sylow:3", "--prop", "strongly-permuteral")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "false"
    assert "witness U = order 12" in out


def test_check_p_subnormal_chain(capsys):
    code, out, _ = run(capsys, "check", "A5", "--sub", "gens:(1 2)(3 4);(1 3)(2 4)", "--prop", "p-subnormal")
    assert code == 0 and out.startswith("true")
    assert "4 < 12 < 60 (indices [3, 5])" in out


def test_permutizer_command(capsys):
    code, out, _ = run(capsys, "permutizer", "S3", "--sub", "gens:(1 2)")
    assert code == 0
    assert "P_G(H) = order 6" in out and "permuteral: true" in out


@pytest.mark.parametrize("spec", ["sylow:2", "hall:2,3", "fitting", "carter:0", "gens:(1 2 3)"])
def test_sub_specs(capsys, spec):
    code, out, _ = run(capsys, "permutizer", "S4", "--sub", spec)
    assert code == 0


@pytest.mark.parametrize(
    "argv",
    [
        ["permutizer", "S4", "--sub", "sylow:5"],
        ["permutizer", "S4", "--sub", "carter:7"],
        ["permutizer", "A5", "--sub", "hall:2,5"],
        ["permutizer", "S4", "--sub", "bogus"],
        ["permutizer", "S3", "--sub", "gens:(1 4)"],
        ["permutizer", "nope", "--sub", "fitting"],
        ["check", "S3", "--sub", "fitting", "--prop", "nope"],
        ["verify", "--suite", "nope"],
        ["verify", "--suite", "T3.1", "--corpus", "nope"],
        ["search", "--expr", "sylow &", "--corpus", "S3"],
        ["frobnicate"],
        [],
    ],
)
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert err


def test_show_and_subgroups(capsys, tmp_path):
    code, out, _ = run(capsys, "show", "S4")
    assert code == 0 and "order 24" in out and "chief factors: [4, 3, 2]" in out
    code, out, _ = run(capsys, "subgroups", "S4")
    assert code == 0 and out.startswith("30 subgroups in 11 conjugacy classes")
    path = tmp_path / "q8.grp"
    path.write_text(write_group_file(build("Q8")), encoding="utf-8")
    code, out, _ = run(capsys, "show", str(path))
    assert code == 0 and "order 8" in out


def test_bad_group_file(capsys, tmp_path):
    path = tmp_path / "bad.grp"
    path.write_text("degree 3\ngen (1 4)\n", encoding="utf-8")
    code, _, err = run(capsys, "show", str(path))
    assert code == 2 and "line 2" in err


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "T3.1", "--corpus", "S3,S4", "--format", "json")
    assert code == 0
    d = json.loads(out)
    assert d["passed"] and d["corpus_size"] == 2


def test_verify_failure_exit_code(capsys, monkeypatch):
    from permlab import suites

    monkeypatch.setattr(suites, "is_ore_dispersive", lambda G: False)
    code, out, _ = run(capsys, "verify", "--suite", "P1.6", "--corpus", "S3")
    assert code == 1 and "FAIL" in out


def test_verify_max_order(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "P1.6", "--corpus", "S3,psl27", "--max-order", "50")
    assert code == 0 and "ERROR psl27" in out


def test_search_expect_none(capsys):
    code, out, _ = run(capsys, "search", "--expr", "sylow & !permuteral", "--corpus", "S3", "--expect-none")
    assert code == 0 and out == ""
    code, out, _ = run(capsys, "search", "--expr", "sylow & !permuteral", "--corpus", "A5", "--expect-none")
    assert code == 1 and out.count("A5") == 3
    code, out, _ = run(capsys, "search", "--expr", "sylow & !permuteral", "--corpus", "A5")
    assert code == 0


def test_env_cap(capsys, monkeypatch):
    monkeypatch.setenv("PERMLAB_MAX_ORDER", "100")
    code, _, err = run(capsys, "show", "psl27")
    assert code == 2 and "cap" in err
