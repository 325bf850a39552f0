import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

_TITLES = {
    1: "forest counts",
    2: "hook polynomial",
    3: "second hook polynomial and transformation",
    4: "Postnikov values",
    5: "Lascoux polynomials",
    6: "colored forest counts",
    7: "counts per partition and first-tree factor",
    8: "psi bijection and case coverage",
    9: "code bijection",
    10: "labellings times hooks",
    11: "CLI verify and golden fixtures",
}
_outcomes = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion covered by the test")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark:
            item.user_properties.append(("criterion", mark.args[0]))


def pytest_runtest_logreport(report):
    crit = dict(report.user_properties).get("criterion")
    if crit is None:
        return
    if report.when == "call" or report.failed or report.skipped:
        ok = report.passed and not report.skipped
        _outcomes[crit] = _outcomes.get(crit, True) and ok


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(_TITLES):
        if crit in _outcomes:
            state = "PASS" if _outcomes[crit] else "FAIL"
        else:
            state = "NOT RUN"
        terminalreporter.write_line(f"criterion {crit:2d} {_TITLES[crit]}: {state}")
