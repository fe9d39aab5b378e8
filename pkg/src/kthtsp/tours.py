"""Hamilton cycles as canonical vertex orders."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import InvalidTour
from .instance import Edge, WeightedInstance, edge, solution_weight


def canonicalize(order: Sequence[int]) -> tuple[int, ...]:
    """Rotate to start at 0 and pick the direction with the smaller second vertex."""
    p = order.index(0)
    rot = tuple(order[p:]) + tuple(order[:p])
    if len(rot) > 2 and rot[1] > rot[-1]:
        rot = (0,) + rot[:0:-1]
    return rot


def cycle_edges(order: Sequence[int]) -> frozenset[Edge]:
    n = len(order)
    return frozenset(edge(order[i], order[(i + 1) % n]) for i in range(n))


def order_from_edges(n: int, edges: Iterable[Edge]) -> tuple[int, ...] | None:
    """Vertex order of the Hamilton cycle formed by ``edges``, or None."""
    adj: list[list[int]] = [[] for _ in range(n)]
    count = 0
    for u, v in edges:
        if u == v or not (0 <= u < n and 0 <= v < n):
            return None
        adj[u].append(v)
        adj[v].append(u)
        count += 1
    if count != n or any(len(a) != 2 or a[0] == a[1] for a in adj):
        return None
    order = [0]
    prev, cur = -1, 0
    while True:
        a, b = adj[cur]
        nxt = b if a == prev else a
        if nxt == 0:
            break
        order.append(nxt)
        prev, cur = cur, nxt
        if len(order) > n:
            return None
    if len(order) != n:
        return None
    return tuple(order)


def is_hamilton_cycle(n: int, edges: Iterable[Edge]) -> bool:
    return n >= 3 and order_from_edges(n, edges) is not None


@dataclass(frozen=True, order=True)
class Tour:
    """A Hamilton cycle on vertices ``0..n-1``.

    ``order`` is always stored canonically, so equal edge sets compare equal
    and the dataclass ordering is the lexicographic tie-break order.
    """

    order: tuple[int, ...]

    def __post_init__(self):
        order = tuple(self.order)
        n = len(order)
        if n < 3 or sorted(order) != list(range(n)):
            raise InvalidTour(f"{list(order)} is not a permutation of 0..{n - 1} (n >= 3)")
        object.__setattr__(self, "order", canonicalize(order))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> Tour:
        order = order_from_edges(n, edges)
        if order is None or n < 3:
            raise InvalidTour("edge set is not a Hamilton cycle")
        return cls(order)

    @property
    def n(self) -> int:
        return len(self.order)

    @cached_property
    def edges(self) -> frozenset[Edge]:
        return cycle_edges(self.order)

    def weight(self, inst: WeightedInstance) -> int:
        return solution_weight(inst, self.edges)

    def uses_artificial(self, inst: WeightedInstance) -> bool:
        return not self.edges.isdisjoint(inst.artificial)

    def __repr__(self):
        return f"Tour({list(self.order)})"
