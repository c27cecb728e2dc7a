import random

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from csflab import (
    DomainError,
    Graph,
    ResourceGuardError,
    canonical_form,
    canonical_graph,
    canonical_key,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    enumerate_graphs,
    generate_special,
    girth,
    is_isomorphic,
    isomorphism,
    part_of,
    path_graph,
    star_graph,
)
from csflab.graphs import find_triangle, graph_from_key, shortest_cycle
from oracles import FOREST_COUNTS, TREE_COUNTS, brute_isomorphic, graph_count_burnside
from strategies import graphs


def test_graph_normalises_edges_and_is_immutable():
    g = Graph(3, [(2, 1), (0, 1)])
    assert g.sorted_edges() == [(0, 1), (1, 2)]
    assert g == Graph(3, [(1, 0), (1, 2)]) and hash(g) == hash(Graph(3, [(1, 2), (0, 1)]))
    with pytest.raises(AttributeError):
        g.n = 4


@pytest.mark.parametrize("n, edges", [(2, [(0, 0)]), (2, [(0, 2)]), (-1, [])])
def test_graph_rejects_bad_input(n, edges):
    with pytest.raises(DomainError):
        Graph(n, edges)


def test_basic_queries():
    g = path_graph(4)
    assert g.neighbors(1) == [0, 2] and g.degree(0) == 1
    assert g.is_tree() and g.is_forest() and g.is_connected()
    assert not cycle_graph(4).is_forest()
    assert g.modified(remove=[(1, 2)]).components() == [[0, 1], [2, 3]]
    with pytest.raises(DomainError):
        g.modified(remove=[(0, 3)])
    assert g.induced([3, 2, 0]).sorted_edges() == [(0, 1)]


def test_part_of():
    assert part_of(disjoint_union(path_graph(3), Graph(1), complete_graph(2))) == (3, 2, 1)
    assert part_of(empty_graph(3)) == (1, 1, 1)
    assert part_of(Graph(0)) == ()


def test_special_graphs():
    assert generate_special("path", (3, 1)) == Graph(4, [(0, 1), (1, 2)])
    assert generate_special("star", (4,)) == star_graph(4)
    k22 = generate_special("complete-multipartite", (2, 2))
    assert is_isomorphic(k22, cycle_graph(4))
    assert is_isomorphic(generate_special("complete-multipartite", (1, 1, 1)), complete_graph(3))
    with pytest.raises(ValueError):
        generate_special("wheel", (3,))


@given(graphs(max_n=8))
def test_girth_matches_networkx(g):
    expected = nx.girth(nx.Graph(list(g.edges)))
    ours = girth(g)
    assert (ours if ours is not None else float("inf")) == expected
    cyc = shortest_cycle(g)
    if cyc is None:
        assert ours is None
    else:
        assert len(cyc) == ours and cyc[0] == min(cyc) and cyc[1] < cyc[-1]
        assert all(g.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))


def test_find_triangle():
    assert find_triangle(complete_graph(4)) == (0, 1, 2)
    assert find_triangle(cycle_graph(4)) is None


@given(graphs(max_n=9), st.randoms(use_true_random=False))
def test_canonical_key_is_relabelling_invariant(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = g.relabel(perm)
    assert canonical_key(g) == canonical_key(h)
    assert canonical_graph(g) == canonical_graph(h)
    phi = isomorphism(g, h)
    assert g.relabel(phi) == h


@given(graphs(max_n=7), graphs(max_n=7))
def test_canonical_key_matches_brute_isomorphism(g, h):
    assert (canonical_key(g) == canonical_key(h)) == brute_isomorphic(g, h)


def test_canonical_form_returns_a_permutation():
    g = Graph(5, [(0, 3), (3, 4), (1, 2)])
    key, perm = canonical_form(g)
    assert sorted(perm) == list(range(5))
    assert graph_from_key(key) == g.relabel(perm)


def test_isomorphism_rejects_non_isomorphic():
    with pytest.raises(DomainError):
        isomorphism(path_graph(4), star_graph(4))


@pytest.mark.parametrize("n", range(0, 9))
def test_graph_counts_match_burnside(n):
    reps = enumerate_graphs(n)
    assert len(reps) == graph_count_burnside(n)
    keys = [canonical_key(g) for g in reps]
    assert keys == sorted(keys) and len(set(keys)) == len(keys)
    assert all(canonical_graph(g) == g for g in reps)


@pytest.mark.parametrize("n", range(1, 12))
def test_tree_and_forest_counts_match_oeis(n):
    assert len(enumerate_graphs(n, "trees")) == TREE_COUNTS[n]
    assert len(enumerate_graphs(n, "forests")) == FOREST_COUNTS[n]
    assert all(t.is_tree() for t in enumerate_graphs(n, "trees"))


def test_enumeration_guards(monkeypatch):
    with pytest.raises(ResourceGuardError):
        enumerate_graphs(10)
    with pytest.raises(ResourceGuardError):
        enumerate_graphs(13, "trees")
    with pytest.raises(DomainError):
        enumerate_graphs(-1)


def test_env_override_only_raises_limits(monkeypatch):
    from csflab.errors import check_limit

    monkeypatch.setenv("CSF_LAB_MAX_N", "3")
    check_limit("x", 5, 9)  # a lower override does not tighten the guard
    monkeypatch.setenv("CSF_LAB_MAX_N", "12")
    check_limit("x", 11, 9)
    with pytest.raises(ResourceGuardError):
        check_limit("x", 13, 9)


def test_random_pairs_agree_with_brute_force():
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randint(1, 7)
        g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5])
        if rng.random() < 0.5:
            perm = list(range(n))
            rng.shuffle(perm)
            h = g.relabel(perm)
        else:
            pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
            h = Graph(n, rng.sample(pairs, g.num_edges))
        assert is_isomorphic(g, h) == brute_isomorphic(g, h)
