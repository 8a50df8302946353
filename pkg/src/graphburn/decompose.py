"""Tree decomposition into subtrees of distinct bounded radii, and the burning
schedule it yields.

With ``k = burning_bound(n)`` rounds, iteration ``j`` (counting down from
``k - 1`` to 0) removes from the tree a rooted subtree whose radius is at most
a radius ``r*`` drawn from the remaining set ``R``, and whose order is at
least ``r* + floor(j/2) - 3``.  Summed over all iterations that is enough to
exhaust any tree of order ``n``.  Each piece is then burned by a source placed
at its center in round ``k - r*``.

All case tests use doubled-integer arithmetic; nothing here touches floats.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt
from typing import NamedTuple

from .graph import Graph, NotATreeError, RootedTree, is_tree, spanning_tree

WHOLE_TREE = "WHOLE_TREE"
CASE1 = "CASE1"
CASE2A = "CASE2A"
CASE2B = "CASE2B"
ELEMENTARY = "ELEMENTARY"


class AlgorithmError(AssertionError):
    """A per-iteration guarantee failed; carries the offending extraction."""

    def __init__(self, message: str, extraction: "Extraction | None" = None):
        if extraction is not None:
            message = f"{message}: {extraction.trace_line()}"
        super().__init__(message)
        self.extraction = extraction


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _ceil_sqrt(x: int) -> int:
    r = isqrt(x)
    return r if r * r == x else r + 1


def burning_bound_closed_form(n: int) -> int:
    """``ceil((sqrt(12n + 64) + 8) / 3)`` in exact integer arithmetic.

    For integer ``k``, ``(s + 8)/3 <= k`` iff ``s <= 3k - 8`` iff
    ``ceil(s) <= 3k - 8``, so the answer is ``ceil((ceil_sqrt(12n+64) + 8) / 3)``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    return _ceil_div(_ceil_sqrt(12 * n + 64) + 8, 3)


def burning_bound(n: int) -> int:
    """Smallest ``k >= 1`` with ``3k^2 - 16k >= 4n``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    # integer estimate from below, then walk up
    k = max(1, (isqrt(12 * n + 64) + 8) // 3 - 1)
    while k > 1 and 3 * (k - 1) ** 2 - 16 * (k - 1) >= 4 * n:
        k -= 1
    while 3 * k * k - 16 * k < 4 * n:
        k += 1
    return k


def land_lu_bound(n: int) -> int:
    """``ceil((sqrt(24n + 33) - 3) / 4)``, exact."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return _ceil_div(_ceil_sqrt(24 * n + 33) - 3, 4)


def elementary_bound(n: int) -> int:
    """``ceil((sqrt(8n + 1) + 1) / 2)``, exact: rounds the one-radius-per-step scheme needs."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return _ceil_div(_ceil_sqrt(8 * n + 1) + 1, 2)


def reference_bounds(n: int) -> dict[str, int]:
    if n < 1:
        raise ValueError("n must be >= 1")
    return {"land_lu": land_lu_bound(n), "ceil_sqrt": _ceil_sqrt(n)}


class RadiusSet:
    """Remaining radii, kept sorted ascending."""

    def __init__(self, values):
        vals = sorted(values)
        if any(a == b for a, b in zip(vals, vals[1:])) or (vals and vals[0] < 0):
            raise ValueError("radii must be distinct non-negative integers")
        self.values = vals

    @classmethod
    def full(cls, k: int) -> "RadiusSet":
        return cls(range(k))

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __repr__(self) -> str:
        return f"RadiusSet({self.values})"

    def max(self) -> int:
        return self.values[-1]

    def consume(self, r: int) -> None:
        self.values.remove(r)


def admissible_radii(R: RadiusSet, j: int, m: int) -> list[int]:
    """Elements ``r`` of ``R`` with ``j + 2m <= 2r <= 2 max(R) - j + 2m + 6``."""
    lo = j + 2 * m
    hi = 2 * R.max() - j + 2 * m + 6
    return [r for r in R if lo <= 2 * r <= hi]


def select_radius(R: RadiusSet, j: int, m: int) -> int:
    """Pick the smallest radius in the window ``[(j/2 + m), max(R) - (j/2 - m) + 3]``.

    ``m`` is how far the candidate subtree's order exceeds ``max(R)``.
    """
    if not len(R):
        raise ValueError("radius set is empty")
    if not (1 <= m and 2 * m < j):
        raise ValueError(f"need 1 <= m and 2m < j, got m={m}, j={j}")
    if len(R) < j:
        raise ValueError(f"need |R| >= j, got |R|={len(R)}, j={j}")
    lo = j + 2 * m
    hi = 2 * R.max() - j + 2 * m + 6
    for r in R:
        if lo <= 2 * r <= hi:
            return r
    raise AlgorithmError(f"no admissible radius in {R} for j={j}, m={m}")


@dataclass
class Extraction:
    j: int
    case_tag: str
    r_star: int
    p: int
    center: int
    piece: list[int]
    measured_radius: int
    m: int | None = None

    @property
    def terminal(self) -> bool:
        return self.case_tag == WHOLE_TREE

    def size_floor(self) -> int:
        """Guaranteed minimum order for a non-terminal piece."""
        if self.case_tag == ELEMENTARY:
            return self.r_star + 1
        return self.r_star + self.j // 2 - 3

    def trace_line(self) -> str:
        return (
            f"j={self.j} case={self.case_tag} r*={self.r_star} p={self.p} "
            f"center={self.center} size={len(self.piece)} radius={self.measured_radius}"
        )

    def check(self) -> None:
        if self.measured_radius > self.r_star:
            raise AlgorithmError("piece radius exceeds r*", self)
        if not self.terminal and len(self.piece) < self.size_floor():
            raise AlgorithmError("piece smaller than guaranteed order", self)


@dataclass
class Decomposition:
    k: int
    n: int
    extractions: list[Extraction] = field(default_factory=list)

    @property
    def covered(self) -> int:
        return sum(len(e.piece) for e in self.extractions)

    @property
    def complete(self) -> bool:
        return self.covered == self.n

    @property
    def full_length(self) -> bool:
        """All ``k`` iterations ran and none was a whole-tree fallback."""
        return len(self.extractions) == self.k and not any(e.terminal for e in self.extractions)

    def trace(self) -> str:
        return "".join(e.trace_line() + "\n" for e in self.extractions)


@dataclass
class BurnSchedule:
    k: int
    sources: dict[int, int]

    def rounds(self) -> list[int]:
        return sorted(self.sources)


def _extract(t: RootedTree, j: int, tag: str, r_star: int, p: int, m: int | None = None) -> Extraction:
    piece = t.detach_subtree(p)
    center, ecc = t.piece_center(piece)
    return Extraction(j, tag, r_star, p, center, piece, ecc, m)


def extract_step(t: RootedTree, R: RadiusSet, j: int) -> Extraction:
    """Remove one piece from ``t`` and consume its radius from ``R``."""
    if not len(t):
        raise ValueError("tree is empty")
    if not len(R):
        raise ValueError("radius set is empty")
    u = t.deepest_vertex()
    r_max = R.max()
    half = j // 2
    v = t.ancestor_at(u, r_max)
    if v is None:
        ex = _extract(t, j, WHOLE_TREE, r_max, t.root)
    else:
        size_v = len(t.subtree_vertices(v))
        if size_v >= r_max + half:
            ex = _extract(t, j, CASE1, r_max, v)
        else:
            m = size_v - r_max
            if j < 2:
                raise AlgorithmError(f"case 2 reached with j={j} (|T_v|={size_v}, r_max={r_max})")
            r_star = select_radius(R, j, m)
            if 2 * r_star > 2 * r_max - j:
                ex = _extract(t, j, CASE2A, r_star, v, m)
            else:
                p = t.ancestor_at(u, r_star + half)
                if p is None:
                    raise AlgorithmError(f"ancestor at {r_star + half} of {u} missing")
                ex = _extract(t, j, CASE2B, r_star, p, m)
    ex.check()
    R.consume(ex.r_star)
    return ex


def decompose_tree(t: RootedTree, k: int) -> Decomposition:
    """Run iterations ``j = k-1 .. 0`` until the tree is empty.

    With ``k >= burning_bound(n)`` the pieces are guaranteed to cover the tree;
    with smaller ``k`` the result may be partial (``Decomposition.complete`` is False).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    n = len(t)
    d = Decomposition(k, n)
    R = RadiusSet.full(k)
    for j in range(k - 1, -1, -1):
        if not len(t):
            break
        d.extractions.append(extract_step(t, R, j))
    if len(t) and k >= burning_bound(n):
        raise AlgorithmError(f"{len(t)} vertices left after {k} iterations with k >= burning_bound({n})")
    return d


def elementary_decompose(t: RootedTree, k: int) -> Decomposition:
    """Baseline: always take the largest radius ``r`` and the subtree at the ``r``-th
    ancestor of the deepest vertex (the whole tree if there is none)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    n = len(t)
    d = Decomposition(k, n)
    for j in range(k - 1, -1, -1):
        if not len(t):
            break
        u = t.deepest_vertex()
        p = t.ancestor_at(u, j)
        ex = _extract(t, j, WHOLE_TREE if p is None else ELEMENTARY, j, t.root if p is None else p)
        ex.check()
        d.extractions.append(ex)
    if len(t) and k >= elementary_bound(n):
        raise AlgorithmError(f"{len(t)} vertices left after {k} elementary iterations")
    return d


def schedule_from(d: Decomposition) -> BurnSchedule:
    """Source of each piece is its center, lit in round ``k - r*``."""
    sources: dict[int, int] = {}
    for ex in d.extractions:
        rnd = d.k - ex.r_star
        if rnd in sources:
            raise AlgorithmError(f"round {rnd} assigned twice", ex)
        sources[rnd] = ex.center
    return BurnSchedule(d.k, dict(sorted(sources.items())))


class TreeBurn(NamedTuple):
    k: int
    decomposition: Decomposition
    schedule: BurnSchedule


def burn_tree(tree: Graph, root: int = 0) -> TreeBurn:
    if not is_tree(tree):
        raise NotATreeError("input is not a tree")
    k = burning_bound(tree.n)
    d = decompose_tree(RootedTree(tree, root), k)
    return TreeBurn(k, d, schedule_from(d))


def burn_graph(g: Graph, root: int = 0) -> tuple[int, BurnSchedule]:
    """Burn ``g`` by burning a BFS spanning tree of it."""
    tree, _ = spanning_tree(g, root)
    k, _, schedule = burn_tree(tree, root)
    return k, schedule
