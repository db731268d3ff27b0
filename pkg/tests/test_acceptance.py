"""Acceptance gate: one test per verification criterion, printing a
pass/fail line each.  The same suites back the `loopforge verify` command."""

import pytest

from loopforge import verify


@pytest.mark.parametrize("name,fn", verify.CRITERIA, ids=[n for n, _ in verify.CRITERIA])
def test_criterion(name, fn, capsys):
    ok, detail = fn()
    with capsys.disabled():
        print("%s  criterion %s  (%s)" % ("PASS" if ok else "FAIL", name, detail))
    assert ok, "criterion %s failed: %s" % (name, detail)
