"""Shared fixtures and the per-criterion summary printer."""

import os

import pytest

_criterion_results: list[tuple[str, str]] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    name = marker.args[0]
    if rep.when == "call":
        _criterion_results.append((name, rep.outcome))
    elif rep.when == "setup" and rep.outcome != "passed":
        _criterion_results.append((name, rep.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _criterion_results:
        return
    terminalreporter.section("verification gates")
    words = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIP"}
    for name, outcome in _criterion_results:
        word = words.get(outcome, outcome.upper())
        terminalreporter.write_line(f"{word}  {name}")


def pytest_collection_modifyitems(config, items):
    if os.environ.get("LATDISP_LONG_RUN") == "1":
        return
    skip = pytest.mark.skip(reason="set LATDISP_LONG_RUN=1 to run")
    for item in items:
        if "longrun" in item.keywords:
            item.add_marker(skip)
