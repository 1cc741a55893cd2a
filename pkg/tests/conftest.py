import os
import sys
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile(
    "default",
    deadline=None,
    max_examples=40,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


def small_rationals(max_num=6, max_den=4):
    return st.builds(Fraction, st.integers(-max_num, max_num), st.integers(1, max_den))


def nonzero_rationals(max_num=6, max_den=4):
    return small_rationals(max_num, max_den).filter(bool)


def coefficient_lists(length, max_num=6, max_den=4):
    return st.lists(small_rationals(max_num, max_den), min_size=length, max_size=length)


_CRITERIA: list[str] = []


@pytest.fixture
def criterion(request):
    """Call with (ok, label); records one PASS/FAIL line and asserts."""

    def report(ok: bool, label: str, detail: str = "") -> None:
        line = f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  [{detail}]" if detail and not ok else "")
        _CRITERIA.append(line)
        print(line)
        assert ok, line

    return report


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in _CRITERIA:
            terminalreporter.write_line(line)
