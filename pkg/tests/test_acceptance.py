"""Acceptance gates: the thirteen criteria, one test and one printed
PASS/FAIL line each.

Criterion 9 includes the re-verification of the two-term ribbon
multiplication law against the expansion-route reference product; the
two disagree from total degree 3 onward (first at R_1 * R_12), so that
criterion reports FAIL with the counterexample.
"""
from __future__ import annotations

import pytest

from parkhopf import verify


@pytest.mark.parametrize("k", range(1, 14))
def test_criterion(k, capsys):
    ok, detail = verify.CRITERIA[k - 1]()
    line = f"CRITERION {k}: {'PASS' if ok else 'FAIL'}"
    if not ok:
        line += f" -- {detail}"
    with capsys.disabled():
        print(line, flush=True)
    assert ok, detail
