"""Deterministic instance generators.

Random instances come from :class:`XorShift64Star`, fully specified here so
corpora can be regenerated in any language:

* seeding: ``state = splitmix64(seed)`` (one SplitMix64 step from ``seed``),
  replaced by ``0x9E3779B97F4A7C15`` if that is zero;
* step: ``x ^= x >> 12; x ^= x << 25; x ^= x >> 27`` (all mod 2**64), output
  ``x * 0x2545F4914F6CDD1D mod 2**64``;
* ``below(b)``: draw ``w`` until ``w < 2**64 - (2**64 mod b)``, return ``w mod b``.

Random trees decode a Prüfer sequence of ``n - 2`` draws ``below(n)``: at each
step the smallest current leaf is joined to the next sequence entry, and the
last two remaining vertices are joined at the end.
"""

from __future__ import annotations

import heapq
from itertools import combinations
from math import isqrt

from .graph import Graph, is_connected, is_tree

MASK64 = (1 << 64) - 1


def splitmix64(x: int) -> int:
    z = (x + 0x9E3779B97F4A7C15) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class XorShift64Star:
    def __init__(self, seed: int):
        self.state = splitmix64(seed & MASK64) or 0x9E3779B97F4A7C15

    def next(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & MASK64
        x ^= x >> 27
        self.state = x
        return (x * 0x2545F4914F6CDD1D) & MASK64

    def below(self, bound: int) -> int:
        if bound < 1:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - (1 << 64) % bound
        while True:
            w = self.next()
            if w < limit:
                return w % bound


def _need(n: int) -> None:
    if n < 1:
        raise ValueError("n must be >= 1")


def gen_path(n: int) -> Graph:
    _need(n)
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def gen_star(n: int) -> Graph:
    _need(n)
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def gen_complete(n: int) -> Graph:
    _need(n)
    return Graph.from_edges(n, combinations(range(n), 2))


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def is_spider(g: Graph) -> bool:
    return is_tree(g) and sum(1 for v in range(g.n) if g.degree(v) >= 3) <= 1


def is_caterpillar(g: Graph) -> bool:
    if not is_tree(g):
        return False
    core = [v for v in range(g.n) if g.degree(v) > 1]
    if len(core) <= 1:
        return True
    inner = set(core)
    degs = [sum(1 for y in g.adjacency[v] if y in inner) for v in core]
    # a tree's non-leaf vertices always induce a subtree; it's a path iff max degree <= 2
    return max(degs) <= 2


def gen_spider(leg_lengths: list[int]) -> Graph:
    """Center 0 with legs numbered consecutively, leg by leg."""
    if not leg_lengths:
        raise ValueError("spider needs at least one leg")
    if min(leg_lengths) < 0:
        raise ValueError("leg lengths must be non-negative")
    edges = []
    nxt = 1
    for length in leg_lengths:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    g = Graph.from_edges(nxt, edges)
    assert is_spider(g)
    return g


def gen_caterpillar(spine: int, legs_per_spine: list[int]) -> Graph:
    """Spine ``0..spine-1`` as a path, then the leaves of each spine vertex in order."""
    if spine < 1:
        raise ValueError("spine must be >= 1")
    if len(legs_per_spine) != spine:
        raise ValueError("need one leg count per spine vertex")
    if min(legs_per_spine) < 0:
        raise ValueError("leg counts must be non-negative")
    edges = [(i, i + 1) for i in range(spine - 1)]
    nxt = spine
    for i, legs in enumerate(legs_per_spine):
        for _ in range(legs):
            edges.append((i, nxt))
            nxt += 1
    g = Graph.from_edges(nxt, edges)
    assert is_caterpillar(g)
    return g


def prufer_decode(seq: list[int], n: int) -> list[tuple[int, int]]:
    if n == 1:
        return []
    if len(seq) != n - 2:
        raise ValueError("Prüfer sequence must have length n - 2")
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    a, b = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((a, b))
    return edges


def gen_random_tree(n: int, seed: int) -> Graph:
    _need(n)
    rng = XorShift64Star(seed)
    seq = [rng.below(n) for _ in range(n - 2)] if n > 2 else []
    return Graph.from_edges(n, prufer_decode(seq, n))


def gen_random_connected(n: int, m: int, seed: int) -> Graph:
    """Random tree (same stream as :func:`gen_random_tree`) plus ``m - n + 1`` extra edges.

    Extra edges are drawn as random pairs with rejection while they are at most
    half of the non-edges; otherwise the non-edges are enumerated and
    partially Fisher-Yates shuffled.
    """
    _need(n)
    if m < n - 1:
        raise ValueError("a connected graph needs m >= n - 1")
    if m > n * (n - 1) // 2:
        raise ValueError("m exceeds n(n-1)/2")
    rng = XorShift64Star(seed)
    seq = [rng.below(n) for _ in range(n - 2)] if n > 2 else []
    edges = {(min(u, v), max(u, v)) for u, v in prufer_decode(seq, n)}
    extra = m - (n - 1)
    free = n * (n - 1) // 2 - (n - 1)
    if 2 * extra <= free:
        while len(edges) < m:
            u, v = rng.below(n), rng.below(n)
            if u != v:
                edges.add((min(u, v), max(u, v)))
    else:
        pool = [e for e in combinations(range(n), 2) if e not in edges]
        for i in range(extra):
            j = i + rng.below(len(pool) - i)
            pool[i], pool[j] = pool[j], pool[i]
        edges.update(pool[:extra])
    g = Graph.from_edges(n, sorted(edges))
    assert is_connected(g)
    return g


def family_graph(family: str, n: int, seed: int = 0) -> Graph:
    """Order-``n`` member of a named family (seed only matters for random ones).

    Spiders get ``isqrt(n-1)`` legs of near-equal length; caterpillars a spine of
    ``ceil(n/2)`` with the remaining vertices dealt out round-robin as leaves.
    """
    _need(n)
    if family == "path":
        return gen_path(n)
    if family == "star":
        return gen_star(n)
    if family == "complete":
        return gen_complete(n)
    if family == "spider":
        if n == 1:
            return gen_path(1)
        legs = max(1, isqrt(n - 1))
        q, r = divmod(n - 1, legs)
        return gen_spider([q + (i < r) for i in range(legs)])
    if family == "caterpillar":
        spine = (n + 1) // 2
        leaves = n - spine
        q, r = divmod(leaves, spine)
        return gen_caterpillar(spine, [q + (i < r) for i in range(spine)])
    if family == "random-tree":
        return gen_random_tree(n, seed)
    if family == "random-connected":
        return gen_random_connected(n, min(n - 1 + n // 2, n * (n - 1) // 2), seed)
    raise ValueError(f"unknown family {family!r}")


FAMILIES = ("path", "star", "complete", "spider", "caterpillar", "random-tree", "random-connected")


def all_connected_graphs(n: int):
    """Every connected labelled graph on ``n`` vertices, in edge-subset bitmask order."""
    _need(n)
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        if mask.bit_count() < n - 1:
            continue
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        g = Graph.from_edges(n, edges)
        if is_connected(g):
            yield g
