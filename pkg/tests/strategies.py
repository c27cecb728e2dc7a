"""Hypothesis strategies for graphs and partitions."""

from hypothesis import strategies as st

from csflab import Graph, Partition


@st.composite
def graphs(draw, min_n=0, max_n=7, p=None):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if p is None:
        chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    else:
        chosen = [e for e in pairs if draw(st.floats(0, 1)) < p]
    return Graph(n, chosen)


@st.composite
def forests(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    edges = []
    for v in range(1, n):
        parent = draw(st.integers(-1, v - 1))
        if parent >= 0:
            edges.append((parent, v))
    perm = draw(st.permutations(range(n)))
    return Graph(n, edges).relabel(perm)


@st.composite
def permutations_for(draw, g):
    return draw(st.permutations(range(g.n)))


@st.composite
def partitions(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_n, max_n))
    parts = []
    remaining = n
    while remaining:
        p = draw(st.integers(1, remaining))
        parts.append(p)
        remaining -= p
    return Partition.from_sizes(parts)
