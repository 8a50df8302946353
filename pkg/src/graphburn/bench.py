"""Benchmark rows comparing the constructive schedule against reference bounds."""

from __future__ import annotations

import csv
import io
from dataclasses import astuple, dataclass, fields

from .burnsim import verify_schedule
from .decompose import burn_graph, burning_bound, land_lu_bound, reference_bounds
from .gen import family_graph

SEEDED = {"random-tree", "random-connected"}


@dataclass
class BenchRow:
    n: int
    seed: int
    family: str
    k_bound_new: int
    completion_round: int
    bound_landlu: int
    ceil_sqrt_n: int
    valid: bool


def run_instance(family: str, n: int, seed: int) -> BenchRow:
    g = family_graph(family, n, seed)
    k, schedule = burn_graph(g)
    check = verify_schedule(g, k, schedule)
    ref = reference_bounds(n)
    return BenchRow(n, seed, family, k, check.completion, ref["land_lu"], ref["ceil_sqrt"], check.valid)


def run_bench(family: str, sizes: list[int], seeds: list[int]) -> list[BenchRow]:
    return [run_instance(family, n, seed) for n in sizes for seed in seeds]


def rows_to_csv(rows: list[BenchRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([f.name for f in fields(BenchRow)])
    for row in rows:
        w.writerow(["true" if x is True else "false" if x is False else x for x in astuple(row)])
    return buf.getvalue()


def crossover(limit: int, other) -> int:
    """Smallest ``n0`` with ``burning_bound(n) <= other(n)`` for every ``n0 <= n <= limit``."""
    last_bad = 0
    for n in range(1, limit + 1):
        if burning_bound(n) > other(n):
            last_bad = n
    return last_bad + 1


def landlu_crossover(limit: int = 10**6) -> int:
    return crossover(limit, land_lu_bound)
