import pytest

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)


from hypothesis import settings  # noqa: E402

# exact big-number arithmetic has uneven timings; derandomize for reproducible runs
settings.register_profile("glhom", deadline=None, derandomize=True)
settings.load_profile("glhom")
