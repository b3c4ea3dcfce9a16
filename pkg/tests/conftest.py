import os

import pytest

ACCEPTANCE_RESULTS: list[tuple[int, str, bool, str]] = []

SLOW = os.environ.get("OCTA_SLOW_TESTS") == "1"


def pytest_collection_modifyitems(config, items):
    if SLOW:
        return
    skip = pytest.mark.skip(reason="set OCTA_SLOW_TESTS=1")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num, title, ok, detail in sorted(ACCEPTANCE_RESULTS):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {num:2d}: {title}"
        if detail:
            line += f" ({detail})"
        terminalreporter.write_line(line)
