import sys
from pathlib import Path

from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

# enumeration-backed properties vary in cost per example; the suite's total
# runtime is what matters, not a per-example deadline
settings.register_profile("exact", deadline=None)
settings.load_profile("exact")

# filled in by test_acceptance, one line per criterion
ACCEPTANCE_REPORT: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_REPORT:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_REPORT):
        terminalreporter.write_line(ACCEPTANCE_REPORT[number])
