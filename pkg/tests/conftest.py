import functools
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from nilsemi.bruteforce import SearchConfig, enumerate_nilpotent  # noqa: E402
from nilsemi.canon import CountMode  # noqa: E402


@functools.lru_cache(maxsize=None)
def brute_reps(n, mode=CountMode.ISO, coclass=None, gen_size=None):
    """Cached search results shared by several test modules."""
    return tuple(enumerate_nilpotent(SearchConfig(n, coclass, gen_size, mode=mode)))


@pytest.fixture(scope="session")
def small_reps():
    """Isomorphism representatives of every nilpotent semigroup of order 1..5."""
    return [t for n in range(1, 6) for t in brute_reps(n)]


# one line per acceptance criterion, echoed after the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
