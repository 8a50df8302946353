"""Exhaustive ground truth for small instances.

Vertex sets are Python ints used as bitmasks; intended for n up to ~20.
"""

from __future__ import annotations

from functools import lru_cache

from .decompose import BurnSchedule
from .graph import Graph, NotATreeError, UNREACHABLE, bfs_distances, is_connected, is_tree, DisconnectedGraphError


class BurningNumberExceeded(Exception):
    def __init__(self, max_k: int):
        super().__init__(f"no burning schedule with at most {max_k} rounds")
        self.max_k = max_k


def _neighbor_masks(g: Graph) -> list[int]:
    masks = []
    for nbrs in g.adjacency:
        m = 0
        for y in nbrs:
            m |= 1 << y
        masks.append(m)
    return masks


def _ball_masks(g: Graph, max_radius: int) -> list[list[int]]:
    """``balls[v][r]`` = bitmask of vertices within distance ``r`` of ``v``."""
    balls = []
    for v in range(g.n):
        dist = bfs_distances(g, v)
        row = []
        for r in range(max_radius + 1):
            m = 0
            for x, d in enumerate(dist):
                if d != UNREACHABLE and d <= r:
                    m |= 1 << x
            row.append(m)
        balls.append(row)
    return balls


def _spread(mask: int, nbr: list[int]) -> int:
    out = mask
    x = mask
    while x:
        low = x & -x
        out |= nbr[low.bit_length() - 1]
        x ^= low
    return out


def burns_within(g: Graph, k: int) -> dict[int, int] | None:
    """A source map burning ``g`` in at most ``k`` rounds, or None.

    Depth-first over the source lit each round (always an unburned vertex,
    after that round's spread), with failed ``(burned set, round)`` states
    memoized.  A branch is cut when the vertices the current fire cannot
    reach by round ``k`` outnumber the largest balls the remaining sources
    could still cover.
    """
    n = g.n
    full = (1 << n) - 1
    nbr = _neighbor_masks(g)
    max_r = max(k - 1, 0)
    balls = _ball_masks(g, max_r)
    max_ball = [max(balls[v][r].bit_count() for v in range(n)) for r in range(max_r + 1)]
    # capacity[i] = room in balls of radius 0..i-1
    capacity = [0]
    for r in range(max_r + 1):
        capacity.append(capacity[-1] + max_ball[r])
    failed: set[tuple[int, int]] = set()
    chosen: dict[int, int] = {}

    def reach(mask: int, rounds: int) -> int:
        for _ in range(rounds):
            nxt = _spread(mask, nbr)
            if nxt == mask:
                break
            mask = nxt
        return mask

    def search(burned: int, t: int) -> bool:
        # ``t`` rounds are done; ``burned`` is the state after round t
        if burned == full:
            return True
        if t == k:
            return False
        key = (burned, t)
        if key in failed:
            return False
        cur = _spread(burned, nbr) if burned else 0
        if cur == full:
            return True
        left = k - t  # rounds t+1..k; sources lit in them have radii left-1..0
        uncovered = full & ~reach(cur, left - 1)
        if not uncovered:
            return True
        if uncovered.bit_count() > capacity[left]:
            failed.add(key)
            return False
        free = full & ~cur
        x = free
        while x:
            low = x & -x
            v = low.bit_length() - 1
            x ^= low
            # a source whose ball misses every uncovered vertex can be swapped with
            # the first useful later source, so it never needs to be tried first
            if balls[v][left - 1] & uncovered == 0:
                continue
            chosen[t + 1] = v
            if search(cur | low, t + 1):
                return True
            del chosen[t + 1]
        failed.add(key)
        return False

    if search(0, 0):
        return dict(sorted(chosen.items()))
    return None


def exact_burning_number(g: Graph, max_k: int | None = None) -> tuple[int, BurnSchedule]:
    """Least ``k`` admitting a complete burn, with one witness schedule."""
    if not is_connected(g):
        raise DisconnectedGraphError("exact search needs a connected graph")
    if max_k is None:
        max_k = g.n
    for k in range(1, max_k + 1):
        sources = burns_within(g, k)
        if sources is not None:
            return k, BurnSchedule(k, sources)
    raise BurningNumberExceeded(max_k)


def tree_cover_check(tree: Graph, k: int) -> tuple[bool, list[tuple[int, int]] | None]:
    """Can balls of radii ``k-1, ..., 0`` (centers anywhere) cover the tree?

    Returns ``(found, pieces)`` where ``pieces`` lists ``(center, radius)``
    pairs of a witness cover.  Branches on which unused radius, and which
    center, covers the smallest uncovered vertex.
    """
    if not is_tree(tree):
        raise NotATreeError("tree_cover_check needs a tree")
    if k < 1:
        return False, None
    n = tree.n
    full = (1 << n) - 1
    balls = _ball_masks(tree, k - 1)
    all_radii = (1 << k) - 1

    @lru_cache(maxsize=None)
    def search(covered: int, used: int) -> tuple[tuple[int, int], ...] | None:
        if covered == full:
            return ()
        free_radii = [r for r in range(k) if not used >> r & 1]
        uncovered = full & ~covered
        if sum(max(b[r].bit_count() for b in balls) for r in free_radii) < uncovered.bit_count():
            return None
        x = (uncovered & -uncovered).bit_length() - 1
        for r in reversed(free_radii):
            for c in range(n):
                if balls[c][r] >> x & 1:
                    rest = search(covered | balls[c][r], used | 1 << r)
                    if rest is not None:
                        return ((c, r),) + rest
        return None

    found = search(0, 0)
    search.cache_clear()
    if found is None:
        return False, None
    return True, sorted(found, key=lambda cr: -cr[1])
