import random
import time

import oracles
import pytest
from conftest import connected_graphs, graphs, trees
from hypothesis import given
from hypothesis import strategies as st

from domsub.domination import (
    dominates_within,
    domination_number,
    gamma,
    gamma_bruteforce,
    gamma_forced,
    gamma_tree,
    is_dominating,
    no_gamma_set_vertices,
    tree_domination_number,
)
from domsub.errors import NotATreeError, PreconditionError, SolverTimeout
from domsub.generators import (
    complete,
    complete_bipartite,
    cycle,
    enumerate_trees,
    path,
    random_connected_graph,
    random_tree,
    star,
    wheel,
)
from domsub.graph import Graph, subdivide


@pytest.mark.parametrize(
    "g, want",
    [
        (path(1), 1),
        (path(7), 3),  # ceil(n/3)
        (cycle(7), 3),
        (complete(5), 1),
        (star(6), 1),
        (wheel(8), 1),
        (complete_bipartite(3, 3), 2),
        (Graph(4), 4),  # isolated vertices dominate themselves
    ],
)
def test_known_values(g, want):
    assert gamma(g).gamma == want
    assert gamma_bruteforce(g).gamma == want


def test_oracle_random_up_to_sixteen():
    rng = random.Random(0)
    for i in range(1000):
        n = rng.randint(2, 16)
        top = n * (n - 1) // 2 if i % 2 else min(2 * n, n * (n - 1) // 2)
        g = random_connected_graph(n, rng.randint(n - 1, top), seed=i)
        assert gamma(g).gamma == gamma_bruteforce(g).gamma


def test_petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    assert gamma(Graph(10, outer + spokes + inner)).gamma == 3


@given(graphs(max_n=9))
def test_branch_and_bound_matches_oracle(g):
    if g.n == 0:
        return
    res = gamma(g)
    assert res.gamma == oracles.gamma(g.n, g.edges)
    assert is_dominating(g, res.witness.vertices)
    assert res.witness.graph_fingerprint == g.fingerprint


@given(graphs(max_n=8))
def test_bruteforce_witness_is_lexicographically_first(g):
    if g.n == 0:
        return
    best = oracles.minimum_dominating_sets(g.n, g.edges)
    assert gamma_bruteforce(g).witness.sorted() == min(sorted(d) for d in best)


def test_bruteforce_cap():
    with pytest.raises(PreconditionError):
        gamma_bruteforce(path(21))


def test_empty_graph_rejected():
    for fn in (gamma, gamma_bruteforce):
        with pytest.raises(PreconditionError):
            fn(Graph(0))


def test_is_dominating_checks_range():
    assert is_dominating(path(3), [1])
    assert not is_dominating(path(4), [1])
    with pytest.raises(PreconditionError):
        is_dominating(path(3), [3])


@given(graphs(min_n=1, max_n=8), st.data())
def test_forced(g, data):
    v = data.draw(st.integers(0, g.n - 1))
    res = gamma_forced(g, {v})
    assert v in res.witness.vertices and is_dominating(g, res.witness.vertices)
    ref = min(len(d) for d in oracles.minimum_dominating_sets(g.n, g.edges))
    # forcing v costs one extra vertex at most
    assert res.gamma in (ref, ref + 1)
    in_some = any(v in d for d in oracles.minimum_dominating_sets(g.n, g.edges))
    assert (res.gamma == ref) == in_some


@given(graphs(min_n=1, max_n=8), st.integers(0, 8))
def test_dominates_within(g, k):
    assert dominates_within(g, k) == (oracles.gamma(g.n, g.edges) <= k)


@given(connected_graphs(min_n=2, max_n=8), st.data())
def test_subdividing_never_lowers_gamma(g, data):
    e = data.draw(st.sampled_from(g.edges))
    t = data.draw(st.integers(1, 3))
    assert gamma(subdivide(g, e, t)).gamma >= gamma(g).gamma


def test_timeout_raises():
    g = random_connected_graph(60, 200, seed=1)
    start = time.perf_counter()
    with pytest.raises(SolverTimeout):
        gamma(g, timeout=0.0)
    assert time.perf_counter() - start < 5


# --- trees ----------------------------------------------------------------------


def test_tree_dp_exhaustive_small():
    # every labelled tree up to 8 vertices (262144 of them at n = 8)
    for n in range(2, 9):
        for t in enumerate_trees(n):
            res = gamma_tree(t)
            assert res.gamma == gamma_bruteforce(t).gamma
            assert is_dominating(t, res.witness.vertices)


@given(trees(min_n=2, max_n=14))
def test_tree_dp_matches_branch_and_bound(t):
    res = gamma_tree(t)
    assert res.gamma == gamma(t).gamma == tree_domination_number(t)
    assert is_dominating(t, res.witness.vertices)


@pytest.mark.parametrize("seed", range(20))
def test_tree_dp_random_nine(seed):
    t = random_tree(9, seed=seed)
    assert gamma_tree(t).gamma == oracles.gamma(t.n, t.edges)


@given(trees(min_n=2, max_n=9), st.data())
def test_tree_dp_forced(t, data):
    forced = data.draw(st.sets(st.integers(0, t.n - 1), max_size=3))
    res = gamma_tree(t, forced)
    assert forced <= res.witness.vertices and is_dominating(t, res.witness.vertices)
    assert res.gamma == gamma_forced(t, forced).gamma == tree_domination_number(t, forced)


def test_tree_dp_large_is_fast():
    t = random_tree(5000, seed=3)
    start = time.perf_counter()
    assert gamma_tree(t).gamma == domination_number(t)
    assert time.perf_counter() - start < 5


def test_tree_dp_rejects_non_tree():
    with pytest.raises(NotATreeError):
        gamma_tree(cycle(4))
    with pytest.raises(PreconditionError):
        gamma_tree(path(3), forced={7})


@given(graphs(min_n=1, max_n=7))
def test_no_gamma_set_vertices(g):
    sets = oracles.minimum_dominating_sets(g.n, g.edges)
    want = set(g.vertices()) - set().union(*sets)
    assert no_gamma_set_vertices(g) == want


@given(trees(min_n=2, max_n=9))
def test_no_gamma_set_vertices_trees(t):
    sets = oracles.minimum_dominating_sets(t.n, t.edges)
    assert no_gamma_set_vertices(t) == set(t.vertices()) - set().union(*sets)
