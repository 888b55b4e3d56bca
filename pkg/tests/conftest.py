import math

import pytest

SQRT2 = math.sqrt(2.0)
SQRT5 = math.sqrt(5.0)


@pytest.fixture(scope="session")
def p6_golden():
    """P_6 golden coefficients, over the common denominator 4*sqrt2 + 8."""
    d = 4 * SQRT2 + 8
    return [0.0, 1.0, (9 + 8 * SQRT2) / d, (6 * SQRT2 + 10) / d, (4 * SQRT2 + 6) / d, (2 * SQRT2 + 2) / d, 1 / d]


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[number])
