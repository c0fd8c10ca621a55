import re

_criteria: dict[str, list[str]] = {}


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)", report.nodeid)
    if not m:
        return
    if report.when == "call" or report.outcome != "passed":
        key = f"{m.group(1)}:{m.group(2)}"
        _criteria.setdefault(key, []).append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_criteria, key=lambda k: int(k.split(":")[0])):
        num, name = key.split(":")
        ok = all(o == "passed" for o in _criteria[key])
        terminalreporter.write_line(
            f"criterion {num} ({name.replace('_', ' ')}): {'PASS' if ok else 'FAIL'}"
        )
