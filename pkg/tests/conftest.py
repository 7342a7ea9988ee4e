import pytest

_KEY = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_KEY] = []


@pytest.fixture
def criterion(request):
    """``criterion(cid, passed, detail)`` records one acceptance line and returns ``passed``."""
    lines = request.config.stash[_KEY]

    def record(cid: str, passed: bool, detail: str) -> bool:
        line = f"{cid:<5} {'PASS' if passed else 'FAIL'}  {detail}"
        lines.append(line)
        print(line)
        return passed

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_KEY, [])
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(lines, key=_order):
        terminalreporter.write_line(line)


def _order(line: str):
    cid = line.split()[0]
    num = "".join(ch for ch in cid if ch.isdigit())
    return int(num), cid
