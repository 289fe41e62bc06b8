from __future__ import annotations

import os

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("thorough", max_examples=400, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

# criterion number -> (title, passed, seconds, limit)
ACCEPTANCE: dict[int, tuple[str, bool, float, float | None]] = {}


@pytest.fixture
def acceptance_record():
    def record(num: int, title: str, passed: bool, seconds: float, limit: float | None = None):
        ACCEPTANCE[num] = (title, passed, seconds, limit)
    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        title, passed, seconds, limit = ACCEPTANCE[num]
        budget = f" (limit {limit:.0f}s)" if limit is not None else ""
        terminalreporter.write_line(
            f"{'PASS' if passed else 'FAIL'}  {num:>2}. {title}  [{seconds:.2f}s{budget}]")
