"""K-best enumeration engines over a generic exchange system.

``kbest_pool`` keeps every unchosen neighbor of every chosen solution in a
priority pool and repeatedly extracts the best one. It is the reference
engine. ``kbest_greedy`` only looks at the neighbors of the most recent
solution and takes the best non-improving exchange; it is experimental and
is checked against the brute-force oracles rather than trusted.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from itertools import islice
from time import perf_counter
from typing import Any, Hashable, Iterable, Iterator, Protocol

from .errors import InvalidParameter
from .exchange import ExchangePair
from .instance import Edge

OBJECTIVES = ("min", "max")


class ExchangeSystem(Protocol):
    alpha: int
    rank: int

    def best_solution(self, objective: str = "min") -> Any: ...

    def neighborhood(self, x: Any) -> list[tuple[Any, ExchangePair, int]]: ...

    def neighbor_candidates(self, x: Any, weight: int) -> Iterable[tuple[Hashable, int]]: ...

    def canonical(self, x: Any) -> Hashable: ...

    def from_key(self, key: Hashable) -> Any: ...

    def weight(self, x: Any) -> int: ...

    def uses_artificial(self, x: Any) -> bool: ...

    def is_member(self, edges: Iterable[Edge]) -> bool: ...


@dataclass
class EngineStats:
    pool_size_max: int = 0
    neighborhoods_expanded: int = 0
    exchanges_evaluated: int = 0
    elapsed: float = 0.0
    best_solve_elapsed: float = 0.0

    @property
    def elapsed_ms(self) -> int:
        return int(self.elapsed * 1000)


@dataclass(frozen=True)
class RankedEntry:
    rank: int
    solution: Any
    weight: int
    uses_artificial: bool


@dataclass
class RankedList:
    entries: list[RankedEntry]
    objective: str
    exhausted: bool
    engine: str
    k_requested: int

    @property
    def weights(self) -> list[int]:
        return [e.weight for e in self.entries]

    @property
    def solutions(self) -> list[Any]:
        return [e.solution for e in self.entries]

    def __len__(self):
        return len(self.entries)


def _sign(objective: str) -> int:
    if objective not in OBJECTIVES:
        raise InvalidParameter(f"objective must be one of {OBJECTIVES}, got {objective!r}")
    return 1 if objective == "min" else -1


def iter_pool(
    sys: ExchangeSystem, objective: str = "min", stats: EngineStats | None = None
) -> Iterator[RankedEntry]:
    """Yield solutions best-first; the next one is expanded only on demand."""
    sign = _sign(objective)
    stats = stats if stats is not None else EngineStats()
    t0 = perf_counter()
    current = sys.best_solution(objective)
    stats.best_solve_elapsed = perf_counter() - t0
    weight = sys.weight(current)
    seen = {sys.canonical(current)}
    pool: list[tuple[int, Hashable]] = []
    rank = 1
    while True:
        stats.elapsed += perf_counter() - t0
        yield RankedEntry(rank, current, weight, sys.uses_artificial(current))
        t0 = perf_counter()
        stats.neighborhoods_expanded += 1
        for key, w in sys.neighbor_candidates(current, weight):
            stats.exchanges_evaluated += 1
            if key not in seen:
                seen.add(key)
                heapq.heappush(pool, (sign * w, key))
        stats.pool_size_max = max(stats.pool_size_max, len(pool))
        if not pool:
            stats.elapsed += perf_counter() - t0
            return
        signed, key = heapq.heappop(pool)
        current, weight = sys.from_key(key), sign * signed
        rank += 1


def iter_greedy(
    sys: ExchangeSystem, objective: str = "min", stats: EngineStats | None = None
) -> Iterator[RankedEntry]:
    """Walk from the optimum along the best non-improving unvisited exchange."""
    sign = _sign(objective)
    stats = stats if stats is not None else EngineStats()
    t0 = perf_counter()
    current = sys.best_solution(objective)
    stats.best_solve_elapsed = perf_counter() - t0
    weight = sys.weight(current)
    chosen = {sys.canonical(current)}
    rank = 1
    while True:
        stats.elapsed += perf_counter() - t0
        yield RankedEntry(rank, current, weight, sys.uses_artificial(current))
        t0 = perf_counter()
        stats.neighborhoods_expanded += 1
        pick: tuple[int, Hashable] | None = None
        admissible = 0
        for key, w in sys.neighbor_candidates(current, weight):
            stats.exchanges_evaluated += 1
            # gain c(F) - c(F') must be <= 0 in the objective's direction
            if sign * (w - weight) < 0 or key in chosen:
                continue
            admissible += 1
            if pick is None or (sign * w, key) < pick:
                pick = (sign * w, key)
        stats.pool_size_max = max(stats.pool_size_max, admissible)
        if pick is None:
            stats.elapsed += perf_counter() - t0
            return
        chosen.add(pick[1])
        current, weight = sys.from_key(pick[1]), sign * pick[0]
        rank += 1


def _collect(gen: Iterator[RankedEntry], k: int, stats: EngineStats, objective: str, engine: str):
    if k < 1:
        raise InvalidParameter(f"K must be at least 1, got {k}")
    entries = list(islice(gen, k))
    gen.close()
    return RankedList(entries, objective, len(entries) < k, engine, k), stats


def kbest_pool(sys: ExchangeSystem, k: int, objective: str = "min") -> tuple[RankedList, EngineStats]:
    stats = EngineStats()
    return _collect(iter_pool(sys, objective, stats), k, stats, objective, "pool")


def kbest_greedy(sys: ExchangeSystem, k: int, objective: str = "min") -> tuple[RankedList, EngineStats]:
    stats = EngineStats()
    return _collect(iter_greedy(sys, objective, stats), k, stats, objective, "greedy")
