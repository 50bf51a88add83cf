from hypothesis import settings

settings.register_profile("default", deadline=None)
settings.load_profile("default")

_ACCEPTANCE: dict[str, tuple[str, str, float]] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        name = report.nodeid.split("::", 1)[1]
        _ACCEPTANCE[name] = ("PASS" if report.passed else "FAIL", report.nodeid, report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, (verdict, _, duration) in sorted(_ACCEPTANCE.items(), key=lambda kv: _criterion_number(kv[0])):
        terminalreporter.write_line(f"{verdict}  {name}  ({duration:.2f}s)")


def _criterion_number(name: str) -> int:
    digits = "".join(ch for ch in name.split("_")[1] if ch.isdigit())
    return int(digits) if digits else 0
