"""Prints one PASS/FAIL line per acceptance criterion at session end."""

_results: dict[str, bool] = {}


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    name = report.nodeid.rsplit("::", 1)[-1]
    if name.startswith("test_criterion_"):
        _results[name] = report.passed


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    from test_acceptance import CRITERIA

    lines = []
    for name, passed in _results.items():
        number, label = CRITERIA.get(name, (0, name))
        lines.append((number, f"ACCEPTANCE {number} {label}: {'PASS' if passed else 'FAIL'}"))
    terminalreporter.ensure_newline()
    for _, line in sorted(lines):
        terminalreporter.write_line(line)
