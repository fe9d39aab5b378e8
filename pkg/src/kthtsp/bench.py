"""Runtime growth in K on a fixed seeded instance."""

from __future__ import annotations

import csv
import io
from dataclasses import astuple, dataclass, fields
from time import perf_counter

from .engines import EngineStats, iter_greedy, iter_pool
from .errors import InvalidParameter
from .hamilton import HamiltonSystem
from .heldkarp import DEFAULT_LIMIT
from .instance import random_instance
from .oracles import TOUR_LIMIT, brute_force_kbest_tours

ENGINES = ("pool", "greedy", "oracle")


@dataclass(frozen=True)
class BenchRecord:
    n: int
    k: int
    engine: str
    elapsed_ms: int
    pool_size_max: int
    neighborhoods_expanded: int


def k_schedule(k_max: int, step: int) -> list[int]:
    if k_max < 1 or step < 1:
        raise InvalidParameter("k_max and step must be positive")
    return list(range(1, k_max + 1, step))


def bench(
    n: int,
    k_max: int,
    step: int,
    engine: str = "pool",
    seed: int = 0,
    timings: bool = True,
    limit: int = DEFAULT_LIMIT,
) -> list[BenchRecord]:
    """One record per K in ``1, 1+step, ...``.

    Exchange engines are incremental, so a single run up to the largest K
    is sampled at each checkpoint; elapsed time includes the best-tour solve.
    """
    if engine not in ENGINES:
        raise InvalidParameter(f"engine must be one of {ENGINES}")
    inst = random_instance(n, 1, 100, seed)
    ks = k_schedule(k_max, step)
    records = []
    if engine == "oracle":
        for k in ks:
            t0 = perf_counter()
            brute_force_kbest_tours(inst, k, limit=TOUR_LIMIT)
            ms = int((perf_counter() - t0) * 1000) if timings else 0
            records.append(BenchRecord(n, k, engine, ms, 0, 0))
        return records
    system = HamiltonSystem(inst, limit)
    stats = EngineStats()
    run = (iter_pool if engine == "pool" else iter_greedy)(system, "min", stats)
    pending = iter(ks)
    target = next(pending)
    reached = 0
    for entry in run:
        reached = entry.rank
        while target is not None and target <= reached:
            records.append(_record(n, target, engine, stats, timings))
            target = next(pending, None)
        if target is None:
            break
    run.close()
    # an exhausted run keeps its final counters for the remaining cells
    while target is not None:
        records.append(_record(n, target, engine, stats, timings))
        target = next(pending, None)
    return records


def _record(n: int, k: int, engine: str, stats: EngineStats, timings: bool) -> BenchRecord:
    return BenchRecord(
        n,
        k,
        engine,
        stats.elapsed_ms if timings else 0,
        stats.pool_size_max,
        stats.neighborhoods_expanded,
    )


def to_csv(records: list[BenchRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([f.name for f in fields(BenchRecord)])
    for rec in records:
        writer.writerow(astuple(rec))
    return buf.getvalue()
