from __future__ import annotations

import pytest

CRITERIA = {
    1: "degree-3 pre-Lie identities",
    2: "degree-3 pre-Jordan full rank",
    3: "degree-3 submodule lattice",
    4: "degree-5 pre-Lie generators",
    5: "degree-5 pre-Jordan generators",
    6: "degree-7 pre-Lie ranks",
    7: "degree-7 pre-Jordan ranks",
    8: "new identity for partition 31111",
    9: "property suites",
    10: "degree-5 rank/nullity warning",
}

_outcomes: dict[int, list[tuple[str, bool]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion the test belongs to")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    # an expected failure still counts as a failed criterion
    if report.when == "call" or (report.when == "setup" and not report.passed):
        ok = report.passed and not hasattr(report, "wasxfail")
        _outcomes.setdefault(marker.args[0], []).append((item.name, ok))


def summary_lines() -> list[str]:
    lines = []
    for n, title in CRITERIA.items():
        results = _outcomes.get(n)
        if not results:
            continue
        passed = sum(ok for _, ok in results)
        status = "PASS" if passed == len(results) else "FAIL"
        failed = [name for name, ok in results if not ok]
        detail = f" failing: {', '.join(failed)}" if failed else ""
        lines.append(f"criterion {n:2d}: {status}  {title} ({passed}/{len(results)} checks){detail}")
    return lines


def pytest_terminal_summary(terminalreporter):
    lines = summary_lines()
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
