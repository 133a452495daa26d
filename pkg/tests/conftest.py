
_criteria: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    props = dict(report.user_properties)
    n = props.get("criterion")
    if n is None:
        return
    status = "PASS" if report.passed else "FAIL"
    prev = _criteria.get(n)
    if prev and prev[0] == "FAIL":
        return
    _criteria[n] = (status, props.get("detail", ""))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        status, detail = _criteria[n]
        line = f"criterion {n:2d}: {status}"
        if detail:
            line += f"  {detail}"
        terminalreporter.write_line(line)
