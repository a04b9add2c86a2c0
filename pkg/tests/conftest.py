import sys
from pathlib import Path

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from domsub.generators import prufer_to_tree  # noqa: E402
from domsub.graph import Graph  # noqa: E402

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [p for p, k in zip(pairs, keep) if k])


@st.composite
def trees(draw, min_n=2, max_n=12):
    n = draw(st.integers(min_n, max_n))
    seq = draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
    return prufer_to_tree(seq, n)


@st.composite
def connected_graphs(draw, min_n=1, max_n=8):
    t = draw(trees(min_n=max(min_n, 2), max_n=max_n))
    extra = [(a, b) for a in range(t.n) for b in range(a + 1, t.n) if not t.has_edge(a, b)]
    keep = draw(st.lists(st.booleans(), min_size=len(extra), max_size=len(extra)))
    return Graph(t.n, list(t.edges) + [e for e, k in zip(extra, keep) if k])
