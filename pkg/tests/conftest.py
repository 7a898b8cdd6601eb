import os

import pytest

LONG = os.environ.get("MATMONOID_LONG") == "1"

# (criterion, description, passed) rows collected by test_acceptance
ACCEPTANCE: list[tuple[str, str, bool]] = []


def pytest_collection_modifyitems(config, items):
    if LONG:
        return
    skip = pytest.mark.skip(reason="long tier; set MATMONOID_LONG=1")
    for item in items:
        if "long" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for crit, desc, ok in ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {crit}: {desc}")
