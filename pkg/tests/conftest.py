import pytest

PAPER_X = "p(Z,h(Z,W),f(W))"
PAPER_Y = "p(f(X),h(Y,f(a)),Y)"


def pytest_configure(config):
    config._acceptance_lines = []


@pytest.fixture
def criterion(request):
    """Record one pass/fail line per acceptance criterion."""

    def record(name, passed, detail=""):
        status = "PASS" if passed else "FAIL"
        request.config._acceptance_lines.append(f"[{status}] {name}" + (f"  ({detail})" if detail else ""))
        return passed

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_acceptance_lines", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)


from hypothesis import settings

settings.register_profile("default", deadline=None)
settings.load_profile("default")
