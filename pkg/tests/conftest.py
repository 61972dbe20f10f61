import pytest

# acceptance lines collected by tests/test_acceptance.py
ACCEPTANCE = []


@pytest.fixture
def criterion():
    """Record one acceptance line: criterion(number, title, ok, elapsed, limit)."""
    def record(num, title, ok, elapsed, limit):
        line = "AC%-2d %-4s %-46s %7.2fs (limit %gs)" % (num, "PASS" if ok else "FAIL", title, elapsed, limit)
        ACCEPTANCE.append(line)
        print(line)
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda s: int(s[2:4])):
            terminalreporter.write_line(line)
