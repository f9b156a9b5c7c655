import pytest

from tnv import _kernels


@pytest.fixture(params=sorted(_kernels.backends()))
def kernel(request):
    """Each importable kernel backend in turn."""
    return _kernels.backends()[request.param]


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import LINES
    except ImportError:
        return
    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in LINES:
            terminalreporter.write_line(line)
