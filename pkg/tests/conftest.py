import pytest

from topfacering.models import BUILTINS, build_builtin

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def builtins():
    return {name: build_builtin(name) for name in BUILTINS}


@pytest.fixture(scope="session")
def bigon():
    return build_builtin("bigon").complex


@pytest.fixture(scope="session")
def triangle():
    return build_builtin("triangle").complex


@pytest.fixture(scope="session")
def csum():
    return build_builtin("connected-sum").complex


@pytest.fixture(scope="session")
def rp2():
    return build_builtin("rp2-no-boundary").complex


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
