"""Round-by-round simulation of the burning process.

Each round first spreads fire from every vertex burned in an earlier round to
its unburned neighbors, then lights that round's source.  A vertex lit in
round ``t`` therefore starts spreading in round ``t + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .decompose import BurnSchedule
from .graph import Graph

STRICT = "strict"
GREEDY = "greedy"

NOT_BURNED = 0


class ScheduleError(ValueError):
    pass


class SourceCollision(ScheduleError):
    """A scheduled source was already burned (strict mode only)."""


@dataclass
class BurnState:
    burned: list[bool]
    round: int = 0
    history: list[int] = field(default_factory=list)  # round each vertex burned, 0 = never


@dataclass
class SimResult:
    completion: int | None  # None if the fire never reaches every vertex
    history: list[int]
    substitutions: list[tuple[int, int | None, int]]  # (round, scheduled source or None, vertex lit)


def _sources_of(schedule: BurnSchedule | Mapping[int, int]) -> Mapping[int, int]:
    return schedule.sources if isinstance(schedule, BurnSchedule) else schedule


def simulate(g: Graph, schedule: BurnSchedule | Mapping[int, int], fill_policy: str = GREEDY) -> SimResult:
    """Run the process until every vertex burns.

    Under ``strict`` a scheduled source that is already burned is an error and
    rounds without a scheduled source light nothing.  Under ``greedy`` both
    situations light the smallest-id unburned vertex instead.
    """
    if fill_policy not in (STRICT, GREEDY):
        raise ValueError(f"unknown fill policy {fill_policy!r}")
    sources = _sources_of(schedule)
    for rnd, v in sources.items():
        if rnd < 1:
            raise ScheduleError(f"round {rnd} is not positive")
        if not 0 <= v < g.n:
            raise ScheduleError(f"source {v} in round {rnd} is not a vertex")

    n, adj = g.n, g.adjacency
    state = BurnState([False] * n, 0, [NOT_BURNED] * n)
    burned, history = state.burned, state.history
    remaining = n
    frontier: list[int] = []
    subs: list[tuple[int, int | None, int]] = []
    last_round = max(sources, default=0)
    cursor = 0  # every id below cursor is burned

    def smallest_unburned() -> int:
        nonlocal cursor
        while burned[cursor]:
            cursor += 1
        return cursor

    while remaining:
        state.round += 1
        t = state.round
        nxt = []
        for x in frontier:
            for y in adj[x]:
                if not burned[y]:
                    burned[y] = True
                    history[y] = t
                    nxt.append(y)
        remaining -= len(nxt)
        if remaining:
            s = sources.get(t)
            lit = None
            if s is not None and not burned[s]:
                lit = s
            elif s is not None:
                if fill_policy == STRICT:
                    raise SourceCollision(f"round {t}: source {s} is already burned")
                lit = smallest_unburned()
                subs.append((t, s, lit))
            elif fill_policy == GREEDY:
                lit = smallest_unburned()
                subs.append((t, None, lit))
            if lit is not None:
                burned[lit] = True
                history[lit] = t
                nxt.append(lit)
                remaining -= 1
        frontier = nxt
        if remaining and not frontier and t >= last_round:
            return SimResult(None, history, subs)
    return SimResult(state.round, history, subs)


@dataclass
class Verification:
    valid: bool
    k: int
    completion: int | None
    substitutions: list[tuple[int, int | None, int]]

    def report(self) -> str:
        lines = [f"k={self.k}", f"completion={self.completion}", f"valid: {str(self.valid).lower()}"]
        lines.extend(
            f"substitution round={t} scheduled={'-' if s is None else s} lit={v}" for t, s, v in self.substitutions
        )
        return "\n".join(lines)


def verify_schedule(g: Graph, k: int, schedule: BurnSchedule | Mapping[int, int], fill_policy: str = GREEDY) -> Verification:
    """True iff the schedule burns ``g`` by round ``k``.

    A strict-mode collision is reported as invalid rather than raised.
    """
    try:
        res = simulate(g, schedule, fill_policy)
    except SourceCollision:
        return Verification(False, k, None, [])
    ok = res.completion is not None and res.completion <= k
    return Verification(ok, k, res.completion, res.substitutions)


def load_schedule(text: str | bytes) -> BurnSchedule:
    """Parse ``round vertex`` lines (1-based rounds, ascending, ``#`` comments)."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    sources: dict[int, int] = {}
    prev = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ScheduleError(f"line {lineno}: expected 'round vertex'")
        try:
            rnd, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ScheduleError(f"line {lineno}: non-integer token") from None
        if rnd <= prev:
            raise ScheduleError(f"line {lineno}: rounds must be positive and strictly ascending")
        if v < 0:
            raise ScheduleError(f"line {lineno}: negative vertex")
        sources[rnd] = v
        prev = rnd
    return BurnSchedule(max(sources, default=0), sources)


def dump_schedule(schedule: BurnSchedule) -> str:
    return "".join(f"{t} {schedule.sources[t]}\n" for t in sorted(schedule.sources))
