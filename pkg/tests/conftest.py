"""Shared fixtures: a seeded corpus of small random codes and the acceptance summary."""

from __future__ import annotations

import numpy as np
import pytest

from corpus import family_corpus, random_corpus


@pytest.fixture(scope="session")
def corpus():
    return random_corpus()


@pytest.fixture(scope="session")
def families():
    return family_corpus()


_ACCEPTANCE: list[tuple[str, str]] = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _ACCEPTANCE.append((report.nodeid.split("::")[-1], "PASS" if report.passed else "FAIL"))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    grouped: dict[str, list[tuple[str, str]]] = {}
    for name, verdict in _ACCEPTANCE:
        grouped.setdefault(name.split("_")[1], []).append((name, verdict))
    for crit, items in grouped.items():
        ok = all(v == "PASS" for _, v in items)
        failed = [n for n, v in items if v != "PASS"]
        tail = "" if ok else "   failing: " + ", ".join(failed)
        terminalreporter.write_line(f"criterion {int(crit[1:]):>2}: {'PASS' if ok else 'FAIL'}{tail}")
