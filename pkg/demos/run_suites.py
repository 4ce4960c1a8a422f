"""Run every registered suite over the default corpus and print a table.

Pass ``--jobs N`` to spread corpus members over N processes.
"""

import argparse

from permlab.suites import SUITES
from permlab.verify import VerifyOptions, run_suite


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--corpus", default="default")
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()
    bad = 0
    for sid, suite in SUITES.items():
        r = run_suite(sid, args.corpus, VerifyOptions(jobs=args.jobs))
        bad += not r.passed
        status = "PASS" if r.passed else "FAIL"
        print(f"{sid:<11} {status}  {r.checks_run:>6} checks  {len(r.skipped):>2} skipped  {r.elapsed:6.2f}s  {suite.statement}")
    print(f"{len(SUITES) - bad}/{len(SUITES)} suites passed")


if __name__ == "__main__":
    main()
