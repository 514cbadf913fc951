import os
import sys

from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("thorough", max_examples=500, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    RESULTS = getattr(module, "RESULTS", None)
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        ok, line = RESULTS[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number}. {line}")
