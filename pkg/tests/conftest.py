import pytest
from hypothesis import settings
from hypothesis import strategies as st

from hyperdom.hypergraph import Hypergraph

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def hypergraphs(draw, max_n=8, max_edges=8, uniform=None, isolate_free=False):
    n = draw(st.integers(1 if uniform is None else uniform, max_n))
    size = st.just(uniform) if uniform else st.integers(1, min(n, 4))
    count = draw(st.integers(0 if not isolate_free else 1, max_edges))
    edges = []
    for _ in range(count):
        k = draw(size)
        edges.append(draw(st.lists(st.integers(0, n - 1), min_size=k, max_size=k, unique=True)))
    if isolate_free:
        covered = {v for e in edges for v in e}
        for v in range(n):
            if v not in covered:
                k = uniform or 1
                rest = [w for w in range(n) if w != v][: k - 1]
                edges.append([v, *rest])
    return Hypergraph(n, edges)


@pytest.fixture
def chain():
    """Three edges where only consecutive ones meet."""
    return Hypergraph(5, [[0, 1], [1, 2, 3], [3, 4]])
