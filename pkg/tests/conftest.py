import os
import re
from pathlib import Path

import pytest

CORPUS = Path(__file__).parent / "corpus"

_ACCEPTANCE: dict[int, str] = {}
_NAME = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_")


@pytest.fixture
def corpus_dir() -> Path:
    return CORPUS


@pytest.fixture(autouse=True)
def _default_order(monkeypatch):
    # tests assume the documented default truncation order
    monkeypatch.delenv("STPOLY_TRUNCATION_ORDER", raising=False)


def pytest_runtest_logreport(report):
    m = _NAME.search(report.nodeid)
    if not m:
        return
    n = int(m.group(1))
    if report.failed:
        _ACCEPTANCE[n] = "FAIL"
    elif report.when == "call":
        _ACCEPTANCE.setdefault(n, "PASS")


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_ACCEPTANCE):
        terminalreporter.write_line(f"ACCEPTANCE criterion {n}: {_ACCEPTANCE[n]}")
    passed = sum(v == "PASS" for v in _ACCEPTANCE.values())
    terminalreporter.write_line(f"ACCEPTANCE {passed}/{len(_ACCEPTANCE)} criteria pass")


if os.environ.get("HYPOTHESIS_PROFILE") is None:
    from hypothesis import settings

    settings.register_profile("default", deadline=None, max_examples=50)
    settings.load_profile("default")
