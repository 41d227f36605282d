"""The nine reproduction checks, run once per session with one summary line each.

SPECTRAL_HAM_SWEEP overrides the size of the random soundness sweep (default 10000).
"""

import os
import sys

import pytest

from spectral_ham.acceptance import CRITERIA, run_suite

SWEEP = int(os.environ.get("SPECTRAL_HAM_SWEEP", "10000"))


@pytest.fixture(scope="module")
def results():
    def report(r):
        sys.__stdout__.write(r.line() + "\n")
        sys.__stdout__.flush()

    out = run_suite(seed=0, sweep_size=SWEEP, on_result=report)
    return {r.number: r for r in out}


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(results, number):
    r = results[number]
    assert r.passed, r.line()
