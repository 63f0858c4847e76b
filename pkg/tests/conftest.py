import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hvassiliev.eyb import jones_operator  # noqa: E402


@pytest.fixture(scope="session")
def op():
    return jones_operator()


def pytest_terminal_summary(terminalreporter):
    import acceptance_log

    if acceptance_log.LINES:
        terminalreporter.section("acceptance criteria")
        lines = acceptance_log.LINES
        for key in sorted(lines, key=lambda k: (int(k.rstrip("abc")), k)):
            terminalreporter.write_line(lines[key])
        parts = [k for k in ("6a", "6b", "6c") if k in lines]
        if parts:
            failed = [k for k in parts if lines[k].startswith("FAIL")]
            status = "FAIL" if failed else "PASS"
            terminalreporter.write_line(f"{status} criterion 6 overall ({len(parts)} parts run, failed: {failed or 'none'})")
