"""Exact best-tour oracle: Held-Karp subset dynamic programming."""

from __future__ import annotations

import numpy as np

from .errors import IncompleteInstance, InstanceTooLarge, WeightOverflow
from .instance import WeightedInstance
from .tours import Tour

DEFAULT_LIMIT = 18

_INF = np.int64(2**62)


def _path_table(dist: np.ndarray) -> np.ndarray:
    """table[mask, j]: cheapest path 0 -> (vertices in mask) ending at j.

    Bit ``j`` of ``mask`` stands for vertex ``j + 1``.
    """
    m = dist.shape[0] - 1
    inner = dist[1:, 1:]
    size = 1 << m
    table = np.full((size, m), _INF, dtype=np.int64)
    for j in range(m):
        table[1 << j, j] = dist[0, j + 1]
    masks = np.arange(size, dtype=np.int64)
    popcount = np.zeros(size, dtype=np.int64)
    for j in range(m):
        popcount += (masks >> j) & 1
    for s in range(2, m + 1):
        layer = masks[popcount == s]
        for j in range(m):
            sel = layer[(layer >> j) & 1 == 1]
            prev = sel ^ (1 << j)
            best = (table[prev] + inner[:, j]).min(axis=1)
            table[sel, j] = np.minimum(best, _INF)
    return table


def solve_best_tour(
    inst: WeightedInstance, objective: str = "min", limit: int = DEFAULT_LIMIT
) -> Tour:
    """Optimal tour; among ties, the lexicographically least canonical order."""
    n = inst.n
    if n < 3:
        raise InstanceTooLarge(f"tours need at least 3 vertices, got {n}")
    if n > limit:
        raise InstanceTooLarge(f"n = {n} exceeds the exact-solver limit {limit}")
    if not inst.is_complete:
        raise IncompleteInstance("instance is not complete; embed it first")
    sign = 1 if objective == "min" else -1
    biggest = max(abs(w) for w in inst.weights.values())
    if biggest * n >= 2**62:
        raise WeightOverflow("weights too large for the exact solver")
    dist = np.zeros((n, n), dtype=np.int64)
    for (u, v), w in inst.weights.items():
        dist[u, v] = dist[v, u] = sign * w
    table = _path_table(dist)
    m = n - 1
    full = (1 << m) - 1
    closing = table[full] + dist[1:, 0]
    optimum = int(closing.min())

    def completion(visited: int, j: int) -> int:
        # cheapest j -> unvisited -> 0, read off the reversed forward path
        return int(table[(full ^ visited) | (1 << j), j])

    order = [0]
    cur, cost, visited = 0, 0, 0
    for _ in range(m):
        for j in range(m):
            bit = 1 << j
            if visited & bit:
                continue
            step = int(dist[cur, j + 1])
            if cost + step + completion(visited | bit, j) == optimum:
                order.append(j + 1)
                cur, cost, visited = j + 1, cost + step, visited | bit
                break
    return Tour(tuple(order))
