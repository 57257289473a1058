import pytest

ACCEPTANCE_KEY = pytest.StashKey[list]()


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="include six-box relation spaces")


def pytest_configure(config):
    config.stash[ACCEPTANCE_KEY] = []


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="six-box shapes need --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def acceptance_log(request):
    return request.config.stash[ACCEPTANCE_KEY]


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(ACCEPTANCE_KEY, [])
    if not lines:
        return
    terminalreporter.section("acceptance criteria (exact, tolerance 0)")
    for line in sorted(lines, key=lambda s: (int(s.split("[")[1].split("]")[0]), s)):
        terminalreporter.write_line(line)
