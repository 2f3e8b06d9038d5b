import os
import sys
import time

from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

import acceptance_log  # noqa: E402

# At least 10^3 randomized cases per property.
settings.register_profile(
    "thorough",
    max_examples=1000,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.register_profile(
    "quick",
    max_examples=100,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "thorough"))

_START = time.monotonic()
# Taken at start-up, so a record always names the code that actually ran.
_SOURCE_HASH = acceptance_log.source_hash()


def pytest_collection_modifyitems(session, config, items):
    # Acceptance checks run last so they can reuse this session's outcomes.
    items.sort(key=lambda item: item.nodeid.startswith("tests/test_acceptance.py"))


def pytest_runtest_logreport(report):
    if report.when == "call" or report.outcome != "passed":
        prev = acceptance_log.OUTCOMES.get(report.nodeid)
        if prev is None or prev == "passed":
            acceptance_log.OUTCOMES[report.nodeid] = report.outcome


def pytest_sessionfinish(session, exitstatus):
    if os.environ.get("RELKANREN_FULL_SWEEP") == "1":
        counts = acceptance_log.sweep_counts(acceptance_log.OUTCOMES)
        if all(c["passed"] + c["failed"] for c in counts.values()):
            acceptance_log.write_sweep_record(
                acceptance_log.OUTCOMES, time.monotonic() - _START, _SOURCE_HASH
            )


def pytest_terminal_summary(terminalreporter):
    if not acceptance_log.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(acceptance_log.RESULTS):
        terminalreporter.write_line(acceptance_log.format_line(n))
