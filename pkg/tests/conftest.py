import mpmath
import pytest


def mp_zeta(s, a, b, dps=40):
    """Arbitrary-precision direct sum of k**-s over a..b."""
    with mpmath.workdps(dps):
        return mpmath.fsum(mpmath.mpf(k) ** (-mpmath.mpf(s)) for k in range(a, b + 1))


@pytest.fixture
def as_like():
    from asdegree import BoundedPowerLaw

    return BoundedPowerLaw(2.25, 1, 1500)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
