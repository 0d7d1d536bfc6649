import pytest

from invdec import parse_permutation


def pytest_addoption(parser):
    parser.addoption("--runlong", action="store_true", default=False,
                     help="also run the long exhaustive sweeps")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runlong"):
        return
    skip = pytest.mark.skip(reason="needs --runlong")
    for item in items:
        if "long" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def P():
    """Shorthand parser: ``P("2413")``."""
    return parse_permutation


def pytest_terminal_summary(terminalreporter):
    from tests.test_acceptance import RESULTS
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
