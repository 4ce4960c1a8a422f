"""Collect acceptance outcomes and print one line per criterion."""

import pytest

CRITERIA = {
    1: "PSL(2,7): Sylow-3 permuteral, not strongly permuteral, witness of order 12 (< 60 s)",
    2: "example2.7: P_G(<ba>) elementary abelian of order 8, <ba> not permuteral (< 1 s)",
    3: "wu-not-u: w-supersoluble, not supersoluble, prime-index chains for every Sylow (< 120 s)",
    4: "T3.1 over the default corpus: zero failures (< 10 min)",
    5: "T3.2 and T3.3 over the default corpus: zero failures",
    6: "T3.4, C3.4.1 and C3.4.2 over the default corpus: zero failures",
    7: "lemma suites over the default corpus: zero failures",
    8: "lattice matches the subset oracle (order <= 24); permutes matches the closure oracle on 1000 pairs",
    9: "verify --jobs 1 and --jobs 8 give byte-identical JSON",
}

_outcomes: dict[int, list[str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number n")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    item.user_properties.append(("criterion", marker.args[0]))


def pytest_runtest_logreport(report):
    crit = dict(report.user_properties).get("criterion")
    if crit is None:
        return
    if report.when == "call" or report.failed:
        _outcomes.setdefault(crit, []).append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n, text in CRITERIA.items():
        got = _outcomes.get(n)
        if got is None:
            status = "NOT RUN"
        else:
            status = "PASS" if all(o == "passed" for o in got) else "FAIL"
        terminalreporter.write_line(f"criterion {n}: {status}  {text}")
