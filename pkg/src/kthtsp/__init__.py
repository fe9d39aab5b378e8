"""Exchange-based K-best enumeration for tours and spanning trees."""

from .compare import ComparisonReport, compare_engines
from .engines import EngineStats, RankedEntry, RankedList, kbest_greedy, kbest_pool
from .exchange import ExchangePair
from .hamilton import (
    HamiltonSystem,
    apply_exchange,
    decompose_difference,
    enumerate_2exchanges,
    enumerate_3exchanges,
    neighborhood,
)
from .heldkarp import solve_best_tour
from .instance import (
    SCALE,
    WeightedInstance,
    embed_complete,
    format_instance,
    format_weight,
    parse_instance,
    random_instance,
    solution_weight,
)
from .oracles import brute_force_kbest_tours, brute_force_kbest_trees
from .tours import Tour, canonicalize
from .trees import SpanningTree, SpanningTreeSystem, best_spanning_tree, enumerate_1exchanges

__all__ = [
    "SCALE",
    "ComparisonReport",
    "EngineStats",
    "ExchangePair",
    "HamiltonSystem",
    "RankedEntry",
    "RankedList",
    "SpanningTree",
    "SpanningTreeSystem",
    "Tour",
    "WeightedInstance",
    "apply_exchange",
    "best_spanning_tree",
    "brute_force_kbest_tours",
    "brute_force_kbest_trees",
    "canonicalize",
    "compare_engines",
    "decompose_difference",
    "embed_complete",
    "enumerate_1exchanges",
    "enumerate_2exchanges",
    "enumerate_3exchanges",
    "format_instance",
    "format_weight",
    "kbest_greedy",
    "kbest_pool",
    "neighborhood",
    "parse_instance",
    "random_instance",
    "solution_weight",
    "solve_best_tour",
]
