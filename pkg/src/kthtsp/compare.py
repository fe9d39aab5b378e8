"""Engine-versus-oracle comparisons and counterexample archiving."""

from __future__ import annotations

import hashlib
import json
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Iterable, Sequence

from .engines import EngineStats, RankedList, kbest_greedy, kbest_pool
from .hamilton import HamiltonSystem
from .heldkarp import DEFAULT_LIMIT
from .instance import WeightedInstance, format_instance, format_weight, parse_instance
from .oracles import TOUR_LIMIT, TREE_LIMIT, brute_force_kbest_tours, brute_force_kbest_trees
from .serialize import dumps, solution_to_dict, stats_to_dict
from .tours import Tour, is_hamilton_cycle
from .trees import SpanningTreeSystem


def first_divergence(a: Sequence[int], b: Sequence[int]) -> int | None:
    """1-based rank where two weight sequences first differ (length counts)."""
    for i, (x, y) in enumerate(zip(a, b), start=1):
        if x != y:
            return i
    if len(a) != len(b):
        return min(len(a), len(b)) + 1
    return None


def instance_digest(inst: WeightedInstance) -> str:
    return hashlib.sha256(format_instance(inst).encode()).hexdigest()[:12]


def _listing(ranked: RankedList) -> list[dict[str, Any]]:
    return [
        {"rank": e.rank, "weight": format_weight(e.weight), **solution_to_dict(e.solution)}
        for e in ranked.entries
    ]


def write_counterexample(
    directory: Path, kind: str, inst: WeightedInstance, payload: dict[str, Any]
) -> Path:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / f"{kind}-n{inst.n}-{instance_digest(inst)}.json"
    doc = {"kind": kind, "instance": format_instance(inst), **payload}
    path.write_text(dumps(doc))
    return path


@dataclass
class ComparisonReport:
    inst: WeightedInstance
    k: int
    objective: str
    trees: bool
    oracle: RankedList
    pool: RankedList
    greedy: RankedList
    pool_stats: EngineStats
    greedy_stats: EngineStats
    counterexample: Path | None = None

    @property
    def pool_divergence(self) -> int | None:
        return first_divergence(self.pool.weights, self.oracle.weights)

    @property
    def greedy_divergence(self) -> int | None:
        return first_divergence(self.greedy.weights, self.oracle.weights)

    @property
    def pool_matches_oracle(self) -> bool:
        """Same weight at every rank."""
        return self.pool_divergence is None

    @property
    def pool_multiset_matches(self) -> bool:
        """Same weights regardless of order; weaker than :attr:`pool_matches_oracle`."""
        return Counter(self.pool.weights) == Counter(self.oracle.weights)

    def to_dict(self, timings: bool = True) -> dict[str, Any]:
        return {
            "n": self.inst.n,
            "system": "trees" if self.trees else "tours",
            "objective": self.objective,
            "k": self.k,
            "instance_digest": instance_digest(self.inst),
            "oracle_weights": [format_weight(w) for w in self.oracle.weights],
            "pool_weights": [format_weight(w) for w in self.pool.weights],
            "greedy_weights": [format_weight(w) for w in self.greedy.weights],
            "pool_matches_oracle": self.pool_matches_oracle,
            "pool_multiset_matches": self.pool_multiset_matches,
            "pool_first_divergence": self.pool_divergence,
            "greedy_first_divergence": self.greedy_divergence,
            "pool_stats": stats_to_dict(self.pool_stats, timings),
            "greedy_stats": stats_to_dict(self.greedy_stats, timings),
            "counterexample": self.counterexample.name if self.counterexample else None,
        }


def compare_engines(
    inst: WeightedInstance,
    k: int,
    objective: str = "min",
    trees: bool = False,
    counterexample_dir: Path | None = None,
    limit: int = DEFAULT_LIMIT,
) -> ComparisonReport:
    """Run pool, greedy and the brute-force oracle on one instance.

    Any rank where pool and oracle weights differ is written to
    ``counterexample_dir``; this includes every weight-multiset mismatch.
    """
    if trees:
        system = SpanningTreeSystem(inst)
        oracle = brute_force_kbest_trees(inst, k, objective, TREE_LIMIT)
    else:
        system = HamiltonSystem(inst, limit)
        oracle = brute_force_kbest_tours(inst, k, objective, TOUR_LIMIT)
    pool, pool_stats = kbest_pool(system, k, objective)
    greedy, greedy_stats = kbest_greedy(system, k, objective)
    report = ComparisonReport(inst, k, objective, trees, oracle, pool, greedy, pool_stats, greedy_stats)
    if counterexample_dir is not None and not report.pool_matches_oracle:
        report.counterexample = write_counterexample(
            counterexample_dir,
            "pool-mismatch",
            inst,
            {
                "objective": objective,
                "k": k,
                "system": "trees" if trees else "tours",
                "divergence_rank": report.pool_divergence,
                "oracle": _listing(oracle),
                "engine": _listing(pool),
            },
        )
    return report


def greedy_agreement_report(
    instances: Iterable[WeightedInstance],
    k: int = 5,
    objective: str = "min",
    witness_dir: Path | None = None,
) -> dict[str, Any]:
    """Fraction of tour instances where greedy reproduces the oracle's top ``k`` weights."""
    total = agree = 0
    witnesses = []
    for inst in instances:
        system = HamiltonSystem(inst)
        oracle = brute_force_kbest_tours(inst, k, objective)
        greedy, _ = kbest_greedy(system, k, objective)
        total += 1
        rank = first_divergence(greedy.weights, oracle.weights)
        if rank is None:
            agree += 1
        elif witness_dir is not None:
            path = write_counterexample(
                witness_dir,
                "greedy-divergence",
                inst,
                {
                    "objective": objective,
                    "k": k,
                    "divergence_rank": rank,
                    "oracle": _listing(oracle),
                    "engine": _listing(greedy),
                },
            )
            witnesses.append(path.name)
    return {
        "instances": total,
        "k": k,
        "agree": agree,
        "fraction": agree / total if total else 0.0,
        "witnesses": witnesses,
    }


def revalidate_witness(path: Path) -> bool:
    """Recompute a tour divergence witness from scratch.

    Checks that every listed tour is a Hamilton cycle whose stored weight
    matches the instance, that the oracle listing is the true brute-force
    top-k, and that the engine listing really departs from it at the
    recorded rank.
    """
    doc = json.loads(Path(path).read_text())
    inst = parse_instance(doc["instance"])
    objective = doc["objective"]

    def recomputed(listing):
        weights = []
        for item in listing:
            tour = item["tour"]
            edges = [(tour[i - 1], tour[i]) for i in range(len(tour))]
            edges = [(min(e), max(e)) for e in edges]
            if not is_hamilton_cycle(inst.n, edges):
                return None
            w = sum(inst.weights[e] for e in edges)
            if format_weight(w) != item["weight"]:
                return None
            weights.append(w)
        return weights

    oracle_w = recomputed(doc["oracle"])
    engine_w = recomputed(doc["engine"])
    if oracle_w is None or engine_w is None:
        return False
    truth = brute_force_kbest_tours(inst, len(oracle_w), objective).weights
    if truth != oracle_w:
        return False
    return first_divergence(engine_w, oracle_w) == doc["divergence_rank"] is not None


def tour_from_listing(item: dict[str, Any]) -> Tour:
    return Tour(tuple(item["tour"]))
