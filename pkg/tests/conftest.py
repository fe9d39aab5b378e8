from collections import deque
from itertools import permutations

import pytest
from hypothesis import settings

from kthtsp.instance import WeightedInstance, scaled

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def make_instance(n, weights):
    """Instance from {(u, v): whole-number weight}."""
    return WeightedInstance(n, {e: scaled(w) for e, w in weights.items()})


@pytest.fixture
def k4():
    # w(0,1)=1, w(0,2)=2, w(0,3)=4, w(1,2)=8, w(1,3)=16, w(2,3)=32
    return make_instance(
        4, {(0, 1): 1, (0, 2): 2, (0, 3): 4, (1, 2): 8, (1, 3): 16, (2, 3): 32}
    )


def valid_cycle(n, edges):
    """Independent Hamilton check: degree two everywhere plus one connected cycle."""
    edges = [tuple(sorted(e)) for e in edges]
    if len(edges) != n or len(set(edges)) != n:
        return False
    adj = {v: [] for v in range(n)}
    for u, v in edges:
        if u == v:
            return False
        adj[u].append(v)
        adj[v].append(u)
    if any(len(a) != 2 for a in adj.values()):
        return False
    seen = {0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return len(seen) == n


def order_edges(order):
    return {tuple(sorted((order[i - 1], order[i]))) for i in range(len(order))}


def every_tour(n):
    """Every Hamilton cycle of K_n as an edge set, by raw permutation."""
    found = {}
    for perm in permutations(range(1, n)):
        order = (0,) + perm
        found.setdefault(frozenset(order_edges(order)), order)
    return found


def tour_weights(inst):
    """Sorted list of all tour weights, computed without the library."""
    return sorted(sum(inst.weights[e] for e in edges) for edges in every_tour(inst.n))
