from itertools import product
from math import isqrt

import pytest
from hypothesis import given, settings, strategies as st

from graphburn.burnsim import STRICT, simulate, verify_schedule
from graphburn.decompose import burn_graph, burning_bound
from graphburn.exact import BurningNumberExceeded, exact_burning_number, tree_cover_check
from graphburn.gen import all_connected_graphs, gen_complete, gen_cycle, gen_path, gen_random_connected, gen_random_tree, gen_star
from graphburn.graph import Graph, NotATreeError, bfs_distances


def brute_burning_number(g):
    """Minimum over every source sequence (any vertex each round) of the greedy completion round."""
    best = g.n
    for k in range(1, g.n + 1):
        for seq in product(range(g.n), repeat=k):
            res = simulate(g, dict(enumerate(seq, start=1)))
            if res.completion <= k:
                return k
    return best


def ceil_sqrt(n):
    r = isqrt(n)
    return r if r * r == n else r + 1


def test_path9():
    b, witness = exact_burning_number(gen_path(9))
    assert b == 3
    assert verify_schedule(gen_path(9), 3, witness, STRICT).valid


def test_trivial_graphs(k5):
    assert exact_burning_number(gen_path(1))[0] == 1
    assert exact_burning_number(k5)[0] == 2


def test_exceeded():
    with pytest.raises(BurningNumberExceeded):
        exact_burning_number(gen_path(16), max_k=3)


@pytest.mark.parametrize("n", range(1, 6))
def test_against_brute_force_all_graphs(n):
    for g in all_connected_graphs(n):
        b, witness = exact_burning_number(g)
        assert b == brute_burning_number(g)
        assert verify_schedule(g, b, witness, STRICT).valid


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 7), st.integers(0, 10**6), st.data())
def test_against_brute_force_random(n, seed, data):
    g = gen_random_connected(n, data.draw(st.integers(n - 1, n * (n - 1) // 2)), seed)
    assert exact_burning_number(g)[0] == brute_burning_number(g)


def test_known_families():
    assert exact_burning_number(gen_star(12))[0] == 2
    assert exact_burning_number(gen_complete(7))[0] == 2
    # cycles share the path value ceil(sqrt(n))
    for n in range(3, 17):
        assert exact_burning_number(gen_cycle(n))[0] == ceil_sqrt(n)


def test_tree_cover_examples():
    ok, pieces = tree_cover_check(gen_path(9), 3)
    assert ok
    covered = set()
    for c, r in pieces:
        d = bfs_distances(gen_path(9), c)
        covered |= {v for v in range(9) if d[v] <= r}
    assert covered == set(range(9))
    assert [r for _, r in pieces] == [2, 1, 0]
    assert tree_cover_check(gen_path(9), 2) == (False, None)
    assert tree_cover_check(gen_path(1), 1)[0]


def test_tree_cover_rejects_non_tree():
    with pytest.raises(NotATreeError):
        tree_cover_check(gen_cycle(4), 2)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 12), st.integers(0, 10**6))
def test_small_graph_sandwich(n, seed):
    g = gen_random_connected(n, min(n - 1 + n // 2, n * (n - 1) // 2), seed)
    b, _ = exact_burning_number(g)
    k, sched = burn_graph(g)
    completion = simulate(g, sched).completion
    assert b <= completion <= k == burning_bound(n)


def test_conjectured_sqrt_bound_on_small_trees():
    # reported, not assumed: check ceil(sqrt(n)) on a batch of random trees
    worst = max(exact_burning_number(gen_random_tree(n, s))[0] - ceil_sqrt(n) for n in range(1, 13) for s in range(20))
    assert worst <= 0
