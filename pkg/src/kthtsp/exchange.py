"""Exchangeable pairs (F, F') shared by the tour and tree systems."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import InvalidExchange
from .instance import Edge, WeightedInstance, edge


@dataclass(frozen=True, order=True)
class ExchangePair:
    """Remove the edges ``removed`` and insert the edges ``added``."""

    removed: tuple[Edge, ...]
    added: tuple[Edge, ...]

    def __post_init__(self):
        removed = tuple(sorted(edge(*e) for e in self.removed))
        added = tuple(sorted(edge(*e) for e in self.added))
        if len(set(removed)) != len(removed) or len(set(added)) != len(added):
            raise InvalidExchange("exchange sides must not repeat edges")
        if len(removed) != len(added):
            raise InvalidExchange(f"unequal exchange sizes {len(removed)} != {len(added)}")
        if not set(removed).isdisjoint(added):
            raise InvalidExchange("removed and added edges overlap")
        object.__setattr__(self, "removed", removed)
        object.__setattr__(self, "added", added)

    @property
    def size(self) -> int:
        return len(self.removed)

    def reversed(self) -> ExchangePair:
        return ExchangePair(self.added, self.removed)

    def gain(self, inst: WeightedInstance) -> int:
        """c(F) - c(F'); applying the pair lowers the weight by this much."""
        return sum(inst.weight(*e) for e in self.removed) - sum(
            inst.weight(*e) for e in self.added
        )


def swap_edges(edges: Iterable[Edge], pair: ExchangePair) -> frozenset[Edge]:
    current = frozenset(edges)
    if not current.issuperset(pair.removed):
        raise InvalidExchange(f"removed edges {pair.removed} not all in solution")
    if not current.isdisjoint(pair.added):
        raise InvalidExchange(f"added edges {pair.added} already in solution")
    return (current - set(pair.removed)) | set(pair.added)
