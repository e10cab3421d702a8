import pytest
from hypothesis import settings

settings.register_profile("cmw", max_examples=40, deadline=None)
settings.load_profile("cmw")

_ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_report():
    """Collects one summary line per acceptance criterion."""
    def add(line):
        _ACCEPTANCE_LINES.append(line)
        print(line)
    return add


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
