import os

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def pytest_addoption(parser):
    parser.addoption("--skip-slow", action="store_true", help="skip the long-running tier")


def pytest_collection_modifyitems(config, items):
    if not (config.getoption("--skip-slow") or os.environ.get("FGLDPC_SKIP_SLOW")):
        return
    skip = pytest.mark.skip(reason="slow tier disabled")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


# -- acceptance summary --------------------------------------------------
# Tests decorated with @pytest.mark.criterion(number, title) are grouped and
# reported as one PASS/FAIL line per criterion at the end of the run.

_criteria: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion membership")


def pytest_runtest_logreport(report):
    info = getattr(report, "criterion", None)
    if info is None:
        return
    number, title = info
    entry = _criteria.setdefault(number, {"title": title, "outcomes": []})
    if report.when == "call" or report.outcome != "passed":
        entry["outcomes"].append((report.nodeid.split("::")[-1], report.outcome))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        outcome.get_result().criterion = tuple(marker.args)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        entry = _criteria[number]
        states = {o for _, o in entry["outcomes"]}
        if "failed" in states:
            verdict = "FAIL"
        elif states == {"skipped"}:
            verdict = "SKIP"
        else:
            verdict = "PASS"
        detail = ", ".join(f"{name}={o}" for name, o in entry["outcomes"] if o != "passed")
        line = f"[{verdict}] criterion {number:>2}: {entry['title']}"
        terminalreporter.write_line(line + (f"  ({detail})" if detail else ""))
