import json

import pytest

from fintop.errors import LimitExceeded
from fintop.suite import CHECKS, collapsed_reflection, run_suite


def test_small_suite_passes():
    report = run_suite(2)
    assert report.passed
    assert [r.name for r in report.results] == [name for name, _ in CHECKS]
    assert report.counts["labeled topologies"] == {0: 1, 1: 1, 2: 4}
    assert report.counts["homeomorphism classes"] == {0: 1, 1: 1, 2: 3}


def test_only_selected():
    report = run_suite(2, only=["kuratowski laws"])
    assert [r.name for r in report.results] == ["kuratowski laws"]


def test_fault_injection_caught():
    report = run_suite(2, reflect=collapsed_reflection)
    failed = {r.name for r in report.results if not r.passed}
    assert "universal property" in failed
    assert not report.passed
    assert json.loads(report.to_json())["passed"] is False
    assert "FAILURES PRESENT" in report.to_text()


@pytest.mark.parametrize("max_n", [-1, 5])
def test_limits(max_n):
    with pytest.raises(LimitExceeded):
        run_suite(max_n)
