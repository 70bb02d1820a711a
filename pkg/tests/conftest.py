import contextlib

import pytest

_RESULTS_KEY = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_RESULTS_KEY] = []


@pytest.fixture
def criterion(request):
    """``with criterion(n, title) as note:`` records one PASS/FAIL line.

    ``note(text)`` attaches a short detail string to the line.
    """
    results = request.config.stash[_RESULTS_KEY]

    @contextlib.contextmanager
    def run(number, title):
        details = []
        try:
            yield details.append
        except BaseException:
            results.append((number, title, False, "; ".join(details)))
            raise
        results.append((number, title, True, "; ".join(details)))

    return run


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = config.stash.get(_RESULTS_KEY, [])
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, detail in sorted(results):
        line = f"[{'PASS' if ok else 'FAIL'}] {number}. {title}"
        if detail:
            line += f" ({detail})"
        terminalreporter.write_line(line)
