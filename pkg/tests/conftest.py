import pytest

from antiramsey.cache import ENV_VAR

# filled by test_acceptance; printed once at the end of the run
ACCEPTANCE_LINES = []


@pytest.fixture(autouse=True)
def private_cache(tmp_path, monkeypatch):
    # never touch the user's real result cache
    monkeypatch.setenv(ENV_VAR, str(tmp_path / "cache"))
    return tmp_path / "cache"


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(line)
