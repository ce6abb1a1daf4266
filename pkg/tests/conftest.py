"""Collects acceptance verdicts and prints them as a block after the run."""

_VERDICTS: list[tuple[str, bool, str]] = []


def record_verdict(name: str, ok: bool, detail: str = "") -> None:
    _VERDICTS.append((name, ok, detail))
    print(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")


def pytest_terminal_summary(terminalreporter):
    if not _VERDICTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in _VERDICTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
