"""Graph and rooted-tree primitives.

Vertices are dense integers ``0..n-1``.  A :class:`Graph` is immutable once
built; a :class:`RootedTree` supports the subtree surgery the decomposition
drives (deepest-vertex lookup, ancestor walks, detaching whole subtrees).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

UNREACHABLE = -1


class GraphFormatError(ValueError):
    """Raised for malformed edge-list input or invalid edge sets."""


class DisconnectedGraphError(ValueError):
    """Raised when an operation needs a connected graph."""


class NotATreeError(ValueError):
    """Raised when an operation needs a tree."""


@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 1:
            raise GraphFormatError(f"vertex count must be >= 1, got {n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"edge ({u}, {v}) has a vertex outside 0..{n - 1}")
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}")
            if v in nbrs[u]:
                raise GraphFormatError(f"duplicate edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])


@dataclass(frozen=True)
class Metrics:
    eccentricity: tuple[int, ...]
    radius: int
    diameter: int
    center: int


def load_edge_list(text: str | bytes) -> Graph:
    """Parse the ``n m`` header + ``u v`` lines edge-list format.

    Blank lines and lines starting with ``#`` are skipped; CRLF is accepted.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line.split()))
    if not rows:
        raise GraphFormatError("missing 'n m' header")

    def ints(lineno: int, parts: list[str]) -> tuple[int, int]:
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected two integers, got {' '.join(parts)!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer token in {' '.join(parts)!r}") from None
        if a < 0 or b < 0:
            raise GraphFormatError(f"line {lineno}: negative value")
        return a, b

    n, m = ints(*rows[0])
    body = rows[1:]
    if len(body) != m:
        raise GraphFormatError(f"header declares {m} edges but {len(body)} edge lines follow")
    edges = [ints(lineno, parts) for lineno, parts in body]
    return Graph.from_edges(n, edges)


def dump_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def bfs_distances(g: Graph, s: int) -> list[int]:
    """Hop distances from ``s``; unreachable vertices get ``UNREACHABLE`` (-1)."""
    if not 0 <= s < g.n:
        raise ValueError(f"source {s} out of range")
    dist = [UNREACHABLE] * g.n
    dist[s] = 0
    queue = deque([s])
    adj = g.adjacency
    while queue:
        x = queue.popleft()
        dx = dist[x] + 1
        for y in adj[x]:
            if dist[y] == UNREACHABLE:
                dist[y] = dx
                queue.append(y)
    return dist


def is_connected(g: Graph) -> bool:
    return UNREACHABLE not in bfs_distances(g, 0)


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1 and is_connected(g)


def metrics(g: Graph) -> Metrics:
    """Eccentricities by all-source BFS; the center is the smallest-id vertex of minimum eccentricity."""
    ecc = []
    for s in range(g.n):
        d = bfs_distances(g, s)
        if UNREACHABLE in d:
            raise DisconnectedGraphError("metrics need a connected graph")
        ecc.append(max(d))
    radius = min(ecc)
    return Metrics(tuple(ecc), radius, max(ecc), ecc.index(radius))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``vertices``, relabelled densely in ascending order.

    Returns the subgraph and the list mapping new ids to original ids.
    """
    keep = sorted(set(vertices))
    index = {v: i for i, v in enumerate(keep)}
    edges = [(index[u], index[v]) for u in keep for v in g.adjacency[u] if v in index and u < v]
    return Graph.from_edges(len(keep), edges), keep


class RootedTree:
    """A tree rooted at ``root``, built by BFS with ascending-id neighbor order.

    Detached vertices are flagged dead; depths are never recomputed since only
    whole subtrees are ever removed.
    """

    def __init__(self, g: Graph, root: int = 0):
        if not 0 <= root < g.n:
            raise ValueError(f"root {root} out of range")
        n = g.n
        self.root = root
        self.parent: list[int | None] = [None] * n
        self.children: list[list[int]] = [[] for _ in range(n)]
        self.depth = [UNREACHABLE] * n
        self.depth[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in g.adjacency[x]:
                if self.depth[y] == UNREACHABLE:
                    self.depth[y] = self.depth[x] + 1
                    self.parent[y] = x
                    self.children[x].append(y)
                    queue.append(y)
        if UNREACHABLE in self.depth:
            raise DisconnectedGraphError("cannot root a disconnected graph")
        self.alive = [True] * n
        self.n_alive = n
        # deepest-first, ties by id; vertices only ever die, so a cursor suffices
        self._order = sorted(range(n), key=lambda v: (-self.depth[v], v))
        self._cursor = 0

    def __len__(self) -> int:
        return self.n_alive

    def edges(self) -> list[tuple[int, int]]:
        return sorted((min(v, p), max(v, p)) for v, p in enumerate(self.parent) if p is not None)

    def deepest_vertex(self) -> int:
        order, alive = self._order, self.alive
        while self._cursor < len(order) and not alive[order[self._cursor]]:
            self._cursor += 1
        if self._cursor == len(order):
            raise ValueError("tree is empty")
        return order[self._cursor]

    def ancestor_at(self, u: int, dist: int) -> int | None:
        x: int | None = u
        for _ in range(dist):
            x = self.parent[x]
            if x is None:
                return None
        return x

    def subtree_vertices(self, p: int) -> list[int]:
        """Alive descendants of ``p`` (including ``p``) in DFS preorder."""
        if not self.alive[p]:
            raise ValueError(f"vertex {p} is not alive")
        out = []
        stack = [p]
        children = self.children
        while stack:
            x = stack.pop()
            out.append(x)
            stack.extend(reversed(children[x]))
        return out

    def detach_subtree(self, p: int) -> list[int]:
        piece = self.subtree_vertices(p)
        for x in piece:
            self.alive[x] = False
        self.n_alive -= len(piece)
        par = self.parent[p]
        if par is not None:
            self.children[par].remove(p)
        return piece

    def piece_center(self, piece: Sequence[int]) -> tuple[int, int]:
        """Center of a detached piece and its eccentricity within the piece.

        Double BFS finds a diametral path; of its middle vertices the one with the
        smaller id is taken.  The eccentricity is then measured by a fresh BFS.
        """
        members = set(piece)

        def nbrs(x: int) -> list[int]:
            p = self.parent[x]
            out = list(self.children[x])
            if p is not None and p in members:
                out.append(p)
            return out

        def bfs(s: int) -> tuple[dict[int, int], dict[int, int | None]]:
            dist = {s: 0}
            prev: dict[int, int | None] = {s: None}
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in nbrs(x):
                    if y not in dist:
                        dist[y] = dist[x] + 1
                        prev[y] = x
                        queue.append(y)
            return dist, prev

        d0, _ = bfs(piece[0])
        a = max(d0, key=lambda v: (d0[v], -v))
        da, prev = bfs(a)
        b = max(da, key=lambda v: (da[v], -v))
        path = [b]
        while prev[path[-1]] is not None:
            path.append(prev[path[-1]])
        diam = len(path) - 1
        mids = {path[diam // 2], path[(diam + 1) // 2]}
        center = min(mids)
        dc, _ = bfs(center)
        if len(dc) != len(members):
            raise DisconnectedGraphError("piece is not connected")
        return center, max(dc.values())


def spanning_tree(g: Graph, root: int = 0) -> tuple[Graph, RootedTree]:
    """BFS spanning tree of ``g`` rooted at ``root`` (neighbors visited in ascending id)."""
    if not is_connected(g):
        raise DisconnectedGraphError("spanning tree needs a connected graph")
    rt = RootedTree(g, root)
    if g.m == g.n - 1:
        return g, rt
    return Graph.from_edges(g.n, rt.edges()), rt
