import re

_acceptance = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: exit criteria")


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        m = re.match(r"test_criterion_(\d+)_(\w+?)(\[(.*)\])?$", name)
        label = f"criterion {m.group(1)}: {m.group(2).replace('_', ' ')}" if m else name
        if m and m.group(4):
            label += f" ({m.group(4).split('-')[0]})"
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {label}")
