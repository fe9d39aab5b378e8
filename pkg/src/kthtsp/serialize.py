"""JSON rendering of ranked lists. Output is byte-stable for a fixed input."""

from __future__ import annotations

import json
from typing import Any

from .engines import EngineStats, RankedList
from .instance import format_weight
from .tours import Tour


def solution_to_dict(solution) -> dict[str, Any]:
    if isinstance(solution, Tour):
        return {"tour": list(solution.order)}
    return {"tree": [list(e) for e in solution.edges]}


def stats_to_dict(stats: EngineStats | None, timings: bool = True) -> dict[str, int]:
    stats = stats or EngineStats()
    return {
        "pool_size_max": stats.pool_size_max,
        "neighborhoods_expanded": stats.neighborhoods_expanded,
        "exchanges_evaluated": stats.exchanges_evaluated,
        "elapsed_ms": stats.elapsed_ms if timings else 0,
    }


def ranked_to_dict(
    ranked: RankedList, stats: EngineStats | None = None, timings: bool = True
) -> dict[str, Any]:
    solutions = []
    for e in ranked.entries:
        item: dict[str, Any] = {"rank": e.rank, "weight": format_weight(e.weight)}
        item.update(solution_to_dict(e.solution))
        item["uses_artificial"] = e.uses_artificial
        solutions.append(item)
    return {
        "engine": ranked.engine,
        "objective": ranked.objective,
        "k_requested": ranked.k_requested,
        "k_returned": len(ranked.entries),
        "exhausted": ranked.exhausted,
        "solutions": solutions,
        "stats": stats_to_dict(stats, timings),
    }


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2) + "\n"
