import pytest
from hypothesis import settings

from m2gamma.fields import FieldSpec

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture
def Q():
    return FieldSpec(0)


@pytest.fixture
def F3():
    return FieldSpec(3)


@pytest.fixture
def F5():
    return FieldSpec(5)


@pytest.fixture(params=["q", "fp:3", "fp:5"])
def field(request):
    return FieldSpec.parse(request.param)


_ACCEPTANCE = pytest.StashKey[dict]()


def pytest_configure(config):
    config.stash[_ACCEPTANCE] = {}


@pytest.fixture
def criterion(request):
    """Context manager recording one PASS/FAIL line per acceptance criterion."""
    results = request.config.stash[_ACCEPTANCE]

    class Record:
        def __init__(self, number, title):
            self.number, self.title = number, title

        def __enter__(self):
            return self

        def __exit__(self, exc_type, exc, tb):
            status = "PASS" if exc_type is None else "FAIL"
            line = f"{status} criterion {self.number}: {self.title}"
            results[self.number] = line
            print(line)
            return False

    return Record


def pytest_terminal_summary(terminalreporter, config):
    results = config.stash[_ACCEPTANCE]
    if results:
        terminalreporter.section("acceptance criteria")
        for number in sorted(results):
            terminalreporter.write_line(results[number])
