import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from specbounds import families  # noqa: E402
from specbounds.graph6 import parse_graph6  # noqa: E402
from specbounds.harness import corpus_lines  # noqa: E402

DATA = Path(__file__).parent / "data"

_ACCEPTANCE: list[str] = []


@pytest.fixture(scope="session")
def corpus():
    """(graph6, Graph) for every graph on 0..7 vertices up to isomorphism."""
    return [(line, parse_graph6(line)) for line in corpus_lines()]


@pytest.fixture(scope="session")
def corpus6(corpus):
    return [(line, g) for line, g in corpus if g.n <= 6]


@pytest.fixture(scope="session")
def warm_kernels():
    """Compile every kernel once so timed sections measure the algorithms, not numba."""
    from specbounds import bounds, invariants, spectral

    g = families.cycle(5)
    spectral.eigenvalues_sym(g)
    invariants.invariant_report(g)
    bounds.bound_report(g)
    return True


@pytest.fixture(scope="session")
def acceptance_log():
    return _ACCEPTANCE


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
