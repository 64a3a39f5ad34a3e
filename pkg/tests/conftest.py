import pytest

from jobrationing import TABLE2_PARAMETERS, calibrate

ACCEPTANCE_LINES = []


@pytest.fixture
def table2():
    """Published, rounded parameter values."""
    return TABLE2_PARAMETERS


@pytest.fixture(scope="session")
def calibrated():
    """Unrounded parameters from the default targets."""
    return calibrate()


class Criterion:
    """Collects the checks behind one acceptance criterion."""

    def __init__(self, label, title):
        self.label, self.title = label, title
        self.checks = []

    def check(self, name, ok, detail=""):
        self.checks.append((name, bool(ok), detail))

    def close(self):
        failed = [f"{name} ({detail})" if detail else name for name, ok, detail in self.checks if not ok]
        status = "FAIL" if failed or not self.checks else "PASS"
        line = f"[{status}] criterion {self.label}: {self.title}"
        if failed:
            line += " | failed: " + "; ".join(failed)
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert self.checks and not failed, line


@pytest.fixture
def criterion():
    return Criterion


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
