import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from primegraphs.corpus import atlas_graphs
from primegraphs.graph import Graph

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def graphs(draw, min_order=0, max_order=8):
    n = draw(st.integers(min_order, max_order))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, k in zip(pairs, keep) if k])


@pytest.fixture(scope="session")
def atlas():
    """Every graph of order 1..7 up to isomorphism."""
    return atlas_graphs(7)


@pytest.fixture(scope="session")
def atlas6():
    return atlas_graphs(6)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
