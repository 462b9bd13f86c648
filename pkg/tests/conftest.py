import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from semiring_ideals.enumeration import enumerate_semirings  # noqa: E402
from semiring_ideals.models import paper_three_element  # noqa: E402


@pytest.fixture(scope="session")
def corpus4():
    return [S for n in (2, 3, 4) for S in enumerate_semirings(n)]


@pytest.fixture(scope="session")
def paper3():
    return paper_three_element().semiring


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(test_acceptance.RESULTS[n])
