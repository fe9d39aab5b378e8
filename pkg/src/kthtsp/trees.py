"""Spanning trees as the bases of a graphic matroid (the 1-bases system)."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import DisconnectedGraph, InvalidExchange, InvalidParameter
from .exchange import ExchangePair, swap_edges
from .instance import Edge, WeightedInstance, edge, solution_weight


class DisjointSet:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[max(ra, rb)] = min(ra, rb)
        return True


def is_spanning_tree(n: int, edges: Iterable[Edge]) -> bool:
    edges = list(edges)
    if len(edges) != n - 1 or len(set(edges)) != len(edges):
        return False
    ds = DisjointSet(n)
    return all(0 <= u < n and 0 <= v < n and ds.union(u, v) for u, v in edges)


@dataclass(frozen=True, order=True)
class SpanningTree:
    """Sorted edge tuple; ordering doubles as the tie-break order."""

    edges: tuple[Edge, ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(sorted(edge(*e) for e in self.edges)))

    def weight(self, inst: WeightedInstance) -> int:
        return solution_weight(inst, self.edges)

    def uses_artificial(self, inst: WeightedInstance) -> bool:
        return not inst.artificial.isdisjoint(self.edges)


def best_spanning_tree(inst: WeightedInstance, objective: str = "min") -> SpanningTree:
    """Kruskal; equal weights are taken in edge-id order."""
    sign = 1 if objective == "min" else -1
    ds = DisjointSet(inst.n)
    chosen = []
    for e in sorted(inst.weights, key=lambda e: (sign * inst.weights[e], e)):
        if ds.union(*e):
            chosen.append(e)
    if len(chosen) != inst.n - 1:
        raise DisconnectedGraph("graph is not connected; no spanning tree exists")
    return SpanningTree(tuple(chosen))


def _tree_path(n: int, edges: Iterable[Edge], src: int, dst: int) -> list[Edge]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    parent = [-1] * n
    parent[src] = src
    queue = deque([src])
    while queue:
        x = queue.popleft()
        if x == dst:
            break
        for y in adj[x]:
            if parent[y] == -1:
                parent[y] = x
                queue.append(y)
    path = []
    x = dst
    while x != src:
        path.append(edge(x, parent[x]))
        x = parent[x]
    return path


def _swaps(t: SpanningTree, inst: WeightedInstance) -> Iterator[tuple[Edge, Edge]]:
    in_tree = set(t.edges)
    for e in inst.weights:
        if e in in_tree:
            continue
        for f in sorted(_tree_path(inst.n, t.edges, *e)):
            yield f, e


def enumerate_1exchanges(t: SpanningTree, inst: WeightedInstance) -> list[ExchangePair]:
    """All ({f}, {e}) with e outside the tree and f on the tree cycle closed by e."""
    return [ExchangePair((f,), (e,)) for f, e in _swaps(t, inst)]


def apply_tree_exchange(t: SpanningTree, p: ExchangePair, n: int) -> SpanningTree:
    if p.size not in (1, 2):
        raise InvalidExchange(f"tree exchanges swap 1 or 2 edges, not {p.size}")
    edges = swap_edges(t.edges, p)
    if not is_spanning_tree(n, edges):
        raise InvalidExchange(f"{p} does not yield a spanning tree")
    return SpanningTree(tuple(edges))


class SpanningTreeSystem:
    """Spanning trees of a connected instance (alpha = 1, r = n - 1)."""

    alpha = 1

    def __init__(self, inst: WeightedInstance):
        if inst.n < 2:
            raise InvalidParameter("spanning trees need at least 2 vertices")
        self.inst = inst
        self.rank = inst.n - 1

    def best_solution(self, objective: str = "min") -> SpanningTree:
        return best_spanning_tree(self.inst, objective)

    def canonical(self, t: SpanningTree):
        return t.edges

    def from_key(self, key) -> SpanningTree:
        return SpanningTree(key)

    def weight(self, t: SpanningTree) -> int:
        return t.weight(self.inst)

    def uses_artificial(self, t: SpanningTree) -> bool:
        return t.uses_artificial(self.inst)

    def is_member(self, edges: Iterable[Edge]) -> bool:
        edges = list(edges)
        return set(edges) <= self.inst.weights.keys() and is_spanning_tree(self.inst.n, edges)

    def neighborhood(self, t: SpanningTree) -> list[tuple[SpanningTree, ExchangePair, int]]:
        out = []
        for p in enumerate_1exchanges(t, self.inst):
            out.append((apply_tree_exchange(t, p, self.inst.n), p, p.gain(self.inst)))
        return sorted(out, key=lambda item: item[0])

    def neighbor_candidates(self, t: SpanningTree, weight: int) -> Iterator[tuple[object, int]]:
        w = self.inst.weights
        base = set(t.edges)
        for f, e in _swaps(t, self.inst):
            yield tuple(sorted((base - {f}) | {e})), weight - w[f] + w[e]
