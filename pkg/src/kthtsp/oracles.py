"""Brute-force K-best oracles. Deliberately independent of the exchange code."""

from __future__ import annotations

from itertools import combinations, permutations

from .errors import DisconnectedGraph, IncompleteInstance, InstanceTooLarge, InvalidParameter
from .engines import RankedEntry, RankedList
from .instance import WeightedInstance
from .tours import Tour
from .trees import SpanningTree, is_spanning_tree

TOUR_LIMIT = 9
TREE_LIMIT = 7


def _ranked(scored, k: int, objective: str, inst: WeightedInstance) -> RankedList:
    if k < 1:
        raise InvalidParameter(f"K must be at least 1, got {k}")
    sign = 1 if objective == "min" else -1
    scored.sort(key=lambda ws: (sign * ws[0], ws[1]))
    entries = [
        RankedEntry(rank, sol, w, not inst.artificial.isdisjoint(sol_edges))
        for rank, (w, sol, sol_edges) in enumerate(scored[:k], start=1)
    ]
    return RankedList(entries, objective, len(entries) < k, "oracle", k)


def brute_force_kbest_tours(
    inst: WeightedInstance, k: int, objective: str = "min", limit: int = TOUR_LIMIT
) -> RankedList:
    n = inst.n
    if n > limit:
        raise InstanceTooLarge(f"n = {n} exceeds the brute-force limit {limit}")
    if n < 3:
        raise InvalidParameter("tours need at least 3 vertices")
    if not inst.is_complete:
        raise IncompleteInstance("instance is not complete; embed it first")
    w = inst.matrix
    scored = []
    for perm in permutations(range(1, n)):
        if perm[0] > perm[-1]:
            continue
        order = (0,) + perm
        total = sum(w[order[i]][order[i - 1]] for i in range(n))
        edges = [(min(order[i], order[i - 1]), max(order[i], order[i - 1])) for i in range(n)]
        scored.append((total, order, edges))
    scored = [(total, Tour(order), edges) for total, order, edges in scored]
    return _ranked(scored, k, objective, inst)


def brute_force_kbest_trees(
    inst: WeightedInstance, k: int, objective: str = "min", limit: int = TREE_LIMIT
) -> RankedList:
    n = inst.n
    if n > limit:
        raise InstanceTooLarge(f"n = {n} exceeds the brute-force limit {limit}")
    scored = []
    for subset in combinations(inst.weights, n - 1):
        if is_spanning_tree(n, subset):
            scored.append((sum(inst.weights[e] for e in subset), SpanningTree(subset), subset))
    if not scored:
        raise DisconnectedGraph("graph is not connected; no spanning tree exists")
    return _ranked(scored, k, objective, inst)
