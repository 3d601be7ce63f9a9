import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

RESULTS = []


def record(number, description, elapsed, budget, ok=True):
    RESULTS.append((number, description, elapsed, budget, ok))


def pytest_terminal_summary(terminalreporter):
    if not RESULTS:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for number, description, elapsed, budget, ok in sorted(RESULTS):
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(
            f"[criterion {number:2d}] {status} in {elapsed:6.2f}s "
            f"(budget {budget:.0f}s): {description}")
