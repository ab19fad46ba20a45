import pytest

from funstream import engine

ACCEPTANCE_MODULE = "test_acceptance.py"


@pytest.fixture
def workers3():
    with engine.override(workers=3, backend="process"):
        yield


@pytest.fixture(params=["process", "thread"])
def parallel_backend(request):
    with engine.override(workers=3, backend=request.param):
        yield request.param


@pytest.fixture
def write_file(tmp_path):
    def write(content, name="data.txt"):
        path = tmp_path / name
        path.write_bytes(content if isinstance(content, bytes) else content.encode("utf-8"))
        return path

    return write


_acceptance = []


def pytest_runtest_logreport(report):
    if ACCEPTANCE_MODULE not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _acceptance.append((report.nodeid.split("::", 1)[1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{outcome.upper():8} {name}")
