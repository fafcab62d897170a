"""Acceptance bookkeeping.

Acceptance tests carry ``@pytest.mark.criterion(n, label)``; property tests
carry ``@pytest.mark.property_suite(letter)``.  Outcomes are collected and a
one-line verdict per criterion is printed at the end of the session.  The
acceptance module always runs last so it can reuse property outcomes that
were already produced in the same session.
"""

from __future__ import annotations

import pytest

CRITERIA: dict[int, dict] = {}
PROPERTY_OUTCOMES: dict[str, list[bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, label): acceptance criterion")
    config.addinivalue_line("markers", "property_suite(letter): randomized property family")


def pytest_collection_modifyitems(items):
    items.sort(key=lambda item: item.module.__name__.endswith("test_acceptance"))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "setup" and rep.passed:
        return
    if rep.when == "teardown" and rep.passed:
        return
    failed = rep.failed
    suite = item.get_closest_marker("property_suite")
    if suite is not None:
        PROPERTY_OUTCOMES.setdefault(suite.args[0], []).append(not failed)
    crit = item.get_closest_marker("criterion")
    if crit is not None:
        number, label = crit.args
        entry = CRITERIA.setdefault(number, {"label": label, "ok": True, "notes": []})
        if rep.skipped:
            entry["ok"] = False
            entry["notes"].append("skipped")
        elif failed:
            entry["ok"] = False
            msg = str(rep.longrepr.reprcrash.message) if hasattr(rep.longrepr, "reprcrash") else "failed"
            entry["notes"].append(msg.splitlines()[0][:160])


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(CRITERIA):
        entry = CRITERIA[number]
        verdict = "PASS" if entry["ok"] else "FAIL"
        line = f"criterion {number:>2}  {verdict}  {entry['label']}"
        if entry["notes"]:
            line += "  | " + entry["notes"][0]
        tr.write_line(line)
