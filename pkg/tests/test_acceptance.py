"""Acceptance criteria 1-8, each reported as one PASS/FAIL line.

Run alone with ``python3 tests/test_acceptance.py`` or ``pytest tests/test_acceptance.py -s``.
"""

import sys
import time

import pytest

from deg8covers.families import theorem_table
from deg8covers.verify import (
    check_construction1,
    check_fixtures,
    check_image_degrees,
    check_negative_controls,
    check_oracles,
    check_residuals,
    check_tower,
)

NS = range(2, 51)

# frozen closed forms, one entry per family in order 1..9
K2_FORMS = (
    lambda n: 16 * n - 8,
    lambda n: 16 * n - 16,
    lambda n: 16 * n - 16,
    lambda n: 16 * n - 10,
    lambda n: 16 * n,
    lambda n: 16 * n - 8,
    lambda n: 16 * n - 8,
    lambda n: 16 * n - 2,
    lambda n: 16 * n,
)
PG_FORMS = (
    lambda n: 2 * n + 1,
    lambda n: 2 * n,
    lambda n: 2 * n,
    lambda n: 2 * n,
    lambda n: 2 * n + 1,
    lambda n: 2 * n,
    lambda n: 2 * n,
    lambda n: 2 * n,
    lambda n: 2 * n,
)
Q_VALUES = (0, 0, 1, 0, 0, 0, 1, 0, 1)
BPF_VALUES = ("yes", "yes", "yes", "no", "no", "no", "no", "no", "no")


def report(capsys, num, ok, detail=""):
    line = f"criterion {num}: {'PASS' if ok else 'FAIL'}{'  ' + detail if detail else ''}"
    if capsys is None:
        print(line)
    else:
        with capsys.disabled():
            print("\n" + line)


def criterion_1():
    t0 = time.perf_counter()
    bad = []
    for n in NS:
        for i, r in enumerate(theorem_table(n)):
            want = (K2_FORMS[i](n), PG_FORMS[i](n), Q_VALUES[i], BPF_VALUES[i])
            got = (r.K2, r.pg, r.q, "yes" if r.bpf else "no")
            if got != want:
                bad.append(f"n={n} family {i + 1}: {got} != {want}")
    secs = time.perf_counter() - t0
    if secs >= 1.0:
        bad.append(f"took {secs:.2f}s")
    return not bad, f"{secs:.3f}s" + (f"; {bad[:3]}" if bad else "")


def from_check(fn):
    def run():
        res = fn(NS)
        return res.ok, f"{res.passed} checks" + (f"; {res.failures[:3]}" if res.failures else "")

    return run


CRITERIA = {
    1: criterion_1,
    2: from_check(check_construction1),
    3: from_check(check_fixtures),
    4: from_check(check_tower),
    5: from_check(check_image_degrees),
    6: from_check(check_oracles),
    7: from_check(check_residuals),
    8: from_check(check_negative_controls),
}


@pytest.mark.parametrize("num", sorted(CRITERIA))
def test_criterion(num, capsys):
    ok, detail = CRITERIA[num]()
    report(capsys, num, ok, detail)
    assert ok, detail


if __name__ == "__main__":
    results = []
    for num in sorted(CRITERIA):
        ok, detail = CRITERIA[num]()
        report(None, num, ok, detail)
        results.append(ok)
    sys.exit(0 if all(results) else 1)
