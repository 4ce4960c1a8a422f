"""Run property suites over a corpus and report the outcome."""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Optional

from .catalog import DEFAULT_CORPUS, CorpusMember, corpus_members
from .group import CapExceededError, max_order
from .suites import (
    EXHAUSTIVE_MAX_ORDER,
    SAMPLE_ELEMENTS,
    SAMPLE_NORMALS,
    SAMPLE_SUBGROUPS,
    SUITES,
    Checker,
    SkipMember,
)

__all__ = ["SCHEMA", "Issue", "MemberOutcome", "SuiteReport", "VerifyOptions", "run_suite", "run_member"]

SCHEMA = "permlab.suite-report/1"


@dataclass(frozen=True)
class Issue:
    group: str
    detail: str


@dataclass
class MemberOutcome:
    name: str
    checks: int = 0
    failures: list[str] = field(default_factory=list)
    skipped: Optional[str] = None
    error: Optional[str] = None


@dataclass
class VerifyOptions:
    max_order: Optional[int] = None
    jobs: int = 1

    def cap(self) -> int:
        return max_order() if self.max_order is None else self.max_order


@dataclass
class SuiteReport:
    suite: str
    corpus: str
    corpus_size: int
    checks_run: int
    failures: list[Issue]
    skipped: list[Issue]
    errors: list[Issue]
    elapsed: float
    config: dict

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        """Serializable form.  Elapsed time and worker count are left out so
        that the output depends only on the suite and corpus."""
        return {
            "schema": SCHEMA,
            "suite": self.suite,
            "statement": SUITES[self.suite].statement,
            "passed": self.passed,
            "corpus": self.corpus,
            "corpus_size": self.corpus_size,
            "checks_run": self.checks_run,
            "failures": [asdict(i) for i in self.failures],
            "skipped": [asdict(i) for i in self.skipped],
            "errors": [asdict(i) for i in self.errors],
            "config": self.config,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_text(self, jobs: int = 1) -> str:
        status = "PASS" if self.passed else "FAIL"
        lines = [
            f"suite {self.suite}: {status}  {SUITES[self.suite].statement}",
            f"  corpus {self.corpus!r}: {self.corpus_size} groups, {self.checks_run} checks, "
            f"{len(self.failures)} failures, {len(self.skipped)} skipped, {len(self.errors)} errors",
            f"  elapsed {self.elapsed:.2f}s with {jobs} worker(s)",
        ]
        lines += [f"  FAIL  {i.group}: {i.detail}" for i in self.failures]
        lines += [f"  ERROR {i.group}: {i.detail}" for i in self.errors]
        lines += [f"  skip  {i.group}: {i.detail}" for i in self.skipped]
        return "\n".join(lines) + "\n"


def run_member(suite_id: str, member: CorpusMember, cap: int) -> MemberOutcome:
    """Run one suite on one corpus member.  Cap violations become an error
    entry; any other exception is a failure with the exception as witness."""
    out = MemberOutcome(member.name)
    try:
        G = member.load(cap)
    except CapExceededError as exc:
        out.error = f"cap exceeded: {exc}"
        return out
    c = Checker(suite_id, member.name, G)
    try:
        SUITES[suite_id].func(c)
    except SkipMember as exc:
        out.skipped = str(exc)
    except CapExceededError as exc:
        out.error = f"cap exceeded: {exc}"
    except Exception as exc:  # a crash is a failed check, not a silent pass
        c.failures.append(f"exception {type(exc).__name__}: {exc}")
    out.checks = c.checks
    out.failures = c.failures
    return out


def _run_packed(args) -> MemberOutcome:
    return run_member(*args)


def run_suite(suite_id: str, corpus: str = DEFAULT_CORPUS, options: Optional[VerifyOptions] = None) -> SuiteReport:
    if suite_id not in SUITES:
        raise KeyError(f"unknown suite {suite_id!r}")
    options = options or VerifyOptions()
    members = corpus_members(corpus)
    if not members:
        raise ValueError("empty corpus")
    cap = options.cap()
    start = time.perf_counter()
    work = [(suite_id, m, cap) for m in members]
    if options.jobs > 1:
        with ProcessPoolExecutor(max_workers=options.jobs) as pool:
            # map yields in submission order, i.e. corpus order
            outcomes = list(pool.map(_run_packed, work))
    else:
        outcomes = [_run_packed(w) for w in work]
    elapsed = time.perf_counter() - start
    failures = [Issue(o.name, f) for o in outcomes for f in o.failures]
    skipped = [Issue(o.name, o.skipped) for o in outcomes if o.skipped is not None]
    errors = [Issue(o.name, o.error) for o in outcomes if o.error is not None]
    config = {
        "max_order": cap,
        "exhaustive_max_order": EXHAUSTIVE_MAX_ORDER,
        "sample_subgroups": SAMPLE_SUBGROUPS,
        "sample_elements": SAMPLE_ELEMENTS,
        "sample_normals": SAMPLE_NORMALS,
        "seed": "crc32('<suite>|<group>')",
    }
    return SuiteReport(
        suite=suite_id,
        corpus=corpus,
        corpus_size=len(members),
        checks_run=sum(o.checks for o in outcomes),
        failures=failures,
        skipped=skipped,
        errors=errors,
        elapsed=elapsed,
        config=config,
    )
