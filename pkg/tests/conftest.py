"""Shared pytest hooks.

Acceptance tests register their outcome in ``ACCEPTANCE``; the terminal
summary prints one line per criterion so the verdicts show up even when
output capture is on.
"""

ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        verdict, label, detail = ACCEPTANCE[num]
        terminalreporter.write_line(f"criterion {num:2d}: {verdict}  {label}  [{detail}]")
