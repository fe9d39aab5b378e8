"""The 2-bases system of Hamilton cycles.

Neighbors of a tour are reached by pure 2-exchanges (two non-adjacent tour
edges swapped for the unique other reconnection) and pure 3-exchanges
(three tour edges, possibly adjacent, swapped for three edges outside the
tour).
"""

from __future__ import annotations

from itertools import combinations, permutations
from typing import Iterable, Iterator, Sequence

from .errors import (
    DecompositionFailure,
    IncompleteInstance,
    InvalidExchange,
    InvalidParameter,
    InvalidTour,
)
from .exchange import ExchangePair, swap_edges
from .heldkarp import DEFAULT_LIMIT, solve_best_tour
from .instance import Edge, WeightedInstance, edge
from .tours import Tour, canonicalize, cycle_edges, is_hamilton_cycle

Move = tuple[tuple[Edge, ...], tuple[Edge, ...], tuple[int, ...]]


def _positions(order: Sequence[int]) -> list[int]:
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    return pos


def _two_moves(order: Sequence[int], removable: frozenset[Edge] | None = None) -> Iterator[Move]:
    n = len(order)
    for i in range(n - 2):
        a, b = order[i], order[i + 1]
        if removable is not None and edge(a, b) not in removable:
            continue
        for j in range(i + 2, n if i > 0 else n - 1):
            c, d = order[j], order[(j + 1) % n]
            if removable is not None and edge(c, d) not in removable:
                continue
            new_order = tuple(order[: i + 1]) + tuple(order[j:i:-1]) + tuple(order[j + 1 :])
            yield (edge(a, b), edge(c, d)), (edge(a, c), edge(b, d)), new_order


def _three_moves(order: Sequence[int], removable: frozenset[Edge] | None = None) -> Iterator[Move]:
    n = len(order)
    order = tuple(order)
    pos = _positions(order)

    def in_tour(u: int, v: int) -> bool:
        return (pos[u] - pos[v]) % n in (1, n - 1)

    tour_edges = [edge(order[i], order[(i + 1) % n]) for i in range(n)]
    candidates = [i for i in range(n) if removable is None or tour_edges[i] in removable]
    for i, j, k in combinations(candidates, 3):
        head = order[k + 1 :] + order[: i + 1]
        mid, tail = order[i + 1 : j + 1], order[j + 1 : k + 1]
        removed = tuple(sorted((tour_edges[i], tour_edges[j], tour_edges[k])))
        seen: set[frozenset[Edge]] = set()
        for x, y in (
            (mid, tail[::-1]),
            (mid[::-1], tail),
            (mid[::-1], tail[::-1]),
            (tail, mid),
            (tail, mid[::-1]),
            (tail[::-1], mid),
            (tail[::-1], mid[::-1]),
        ):
            links = ((head[-1], x[0]), (x[-1], y[0]), (y[-1], head[0]))
            if any(in_tour(u, v) for u, v in links):
                continue
            added = frozenset(edge(u, v) for u, v in links)
            if added in seen:
                continue
            seen.add(added)
            yield removed, tuple(sorted(added)), head + x + y


def enumerate_2exchanges(t: Tour) -> list[ExchangePair]:
    """All n(n-3)/2 pure 2-exchanges of ``t``, in canonical position order."""
    return [ExchangePair(r, a) for r, a, _ in _two_moves(t.order)]


def enumerate_3exchanges(t: Tour) -> list[ExchangePair]:
    return [ExchangePair(r, a) for r, a, _ in _three_moves(t.order)]


def apply_exchange(t: Tour, p: ExchangePair) -> Tour:
    if p.size not in (2, 3):
        raise InvalidExchange(f"tour exchanges swap 2 or 3 edges, not {p.size}")
    edges = swap_edges(t.edges, p)
    try:
        return Tour.from_edges(t.n, edges)
    except InvalidTour:
        raise InvalidExchange(f"{p} does not yield a Hamilton cycle") from None


def neighborhood(t: Tour, inst: WeightedInstance) -> list[tuple[Tour, ExchangePair, int]]:
    """Every tour one 2- or 3-exchange away, with the generating pair and gain.

    Sorted by neighbor order. A neighbor determines its pair (F = t \\ t',
    F' = t' \\ t), so deduplication only guards against repeated moves.
    """
    best: dict[Tour, tuple[ExchangePair, int]] = {}
    for moves in (_two_moves(t.order), _three_moves(t.order)):
        for removed, added, new_order in moves:
            pair = ExchangePair(removed, added)
            gain = pair.gain(inst)
            nb = Tour(new_order)
            if nb == t:
                continue
            prev = best.get(nb)
            if prev is None or (-gain, pair) < (-prev[1], prev[0]):
                best[nb] = (pair, gain)
    return [(nb, pair, gain) for nb, (pair, gain) in sorted(best.items())]


def decompose_difference(h: Tour, h2: Tour) -> list[ExchangePair]:
    """Exchange pairs turning ``h`` into ``h2`` with a valid tour after every step.

    Depth-first search preferring 2-exchanges; each step removes edges of
    ``h \\ h2`` and adds edges of ``h2 \\ h`` only, so the distance strictly
    shrinks. Raises :class:`DecompositionFailure` when no sequence exists.
    """
    if h.n != h2.n:
        raise InvalidParameter("tours live on different vertex counts")
    if h == h2:
        raise InvalidParameter("tours are identical; nothing to decompose")
    target = h2.edges
    dead: set[tuple[int, ...]] = set()

    def search(order: tuple[int, ...]) -> list[ExchangePair] | None:
        current = cycle_edges(order)
        if current == target:
            return []
        key = canonicalize(order)
        if key in dead:
            return None
        removable = current - target
        for moves in (_two_moves(order, removable), _three_moves(order, removable)):
            for removed, added, new_order in moves:
                if not target.issuperset(added):
                    continue
                rest = search(new_order)
                if rest is not None:
                    return [ExchangePair(removed, added)] + rest
        dead.add(key)
        return None

    pairs = search(h.order)
    if pairs is None:
        raise DecompositionFailure(h, h2)
    return pairs


def subset_failures(h: Tour, pairs: Sequence[ExchangePair]) -> list[tuple[int, ...]]:
    """Index subsets of ``pairs`` whose joint application to ``h`` is not a tour."""
    bad = []
    for size in range(1, len(pairs) + 1):
        for subset in combinations(range(len(pairs)), size):
            edges = set(h.edges)
            for i in subset:
                edges -= set(pairs[i].removed)
                edges |= set(pairs[i].added)
            if not is_hamilton_cycle(h.n, edges):
                bad.append(subset)
    return bad


def all_tours(n: int) -> Iterable[Tour]:
    """Every Hamilton cycle of K_n once, in canonical order."""
    for perm in permutations(range(1, n)):
        if perm[0] < perm[-1]:
            yield Tour((0,) + perm)


class HamiltonSystem:
    """Tours of a complete instance as an exchange system (alpha = 2, r = n)."""

    alpha = 2

    def __init__(self, inst: WeightedInstance, limit: int = DEFAULT_LIMIT):
        if not inst.is_complete:
            raise IncompleteInstance("tour system needs a complete instance; embed it first")
        if inst.n < 3:
            raise InvalidParameter("tours need at least 3 vertices")
        self.inst = inst
        self.limit = limit
        self.rank = inst.n
        self._key = bytes if inst.n <= 256 else tuple

    def best_solution(self, objective: str = "min") -> Tour:
        return solve_best_tour(self.inst, objective, self.limit)

    def canonical(self, t: Tour):
        return self._key(t.order)

    def from_key(self, key) -> Tour:
        return Tour(tuple(key))

    def weight(self, t: Tour) -> int:
        return t.weight(self.inst)

    def uses_artificial(self, t: Tour) -> bool:
        return t.uses_artificial(self.inst)

    def is_member(self, edges: Iterable[Edge]) -> bool:
        edges = set(edges)
        return edges <= self.inst.weights.keys() and is_hamilton_cycle(self.inst.n, edges)

    def neighborhood(self, t: Tour) -> list[tuple[Tour, ExchangePair, int]]:
        return neighborhood(t, self.inst)

    def neighbor_candidates(self, t: Tour, weight: int) -> Iterator[tuple[object, int]]:
        """Lean ``(key, weight)`` stream over the same neighbors as :meth:`neighborhood`."""
        w = self.inst.matrix
        key = self._key
        for moves in (_two_moves(t.order), _three_moves(t.order)):
            for removed, added, new_order in moves:
                delta = 0
                for u, v in added:
                    delta += w[u][v]
                for u, v in removed:
                    delta -= w[u][v]
                yield key(canonicalize(new_order)), weight + delta
