import pytest

from kthtsp.errors import DisconnectedGraph, IncompleteInstance, InstanceTooLarge
from kthtsp.instance import SCALE, random_instance
from kthtsp.oracles import brute_force_kbest_tours, brute_force_kbest_trees

from .conftest import make_instance, tour_weights


@pytest.mark.parametrize("n, count", [(3, 1), (4, 3), (5, 12), (6, 60), (7, 360)])
def test_tour_counts(n, count):
    ranked = brute_force_kbest_tours(random_instance(n, 1, 50, seed=n), 10**6)
    assert len(ranked) == count
    assert ranked.exhausted


def test_k4_ranking(k4):
    ranked = brute_force_kbest_tours(k4, 3)
    assert ranked.weights == [30 * SCALE, 45 * SCALE, 51 * SCALE]
    assert [e.solution.order for e in ranked.entries] == [(0, 2, 1, 3), (0, 1, 2, 3), (0, 1, 3, 2)]
    assert not ranked.exhausted
    assert [e.rank for e in ranked.entries] == [1, 2, 3]


def test_exact_k_is_not_exhausted():
    ranked = brute_force_kbest_tours(random_instance(5, 1, 50, seed=1), 12)
    assert len(ranked) == 12 and not ranked.exhausted
    assert brute_force_kbest_tours(random_instance(5, 1, 50, seed=1), 20).exhausted


@pytest.mark.parametrize("seed", range(5))
def test_weights_match_independent_enumeration(seed):
    inst = random_instance(6, -10, 30, seed)
    assert brute_force_kbest_tours(inst, 60).weights == tour_weights(inst)
    assert brute_force_kbest_tours(inst, 60, "max").weights == tour_weights(inst)[::-1]


def test_ties_ordered_canonically():
    ranked = brute_force_kbest_tours(random_instance(5, 2, 2, seed=0), 12)
    orders = [e.solution.order for e in ranked.entries]
    assert orders == sorted(orders)


def test_tour_limits():
    with pytest.raises(InstanceTooLarge):
        brute_force_kbest_tours(random_instance(10, 1, 5, 0), 1)
    with pytest.raises(IncompleteInstance):
        brute_force_kbest_tours(random_instance(5, 1, 5, 0, density=0.5), 1)


def test_tree_oracle_errors():
    with pytest.raises(InstanceTooLarge):
        brute_force_kbest_trees(random_instance(8, 1, 5, 0), 1)
    with pytest.raises(DisconnectedGraph):
        brute_force_kbest_trees(make_instance(4, {(0, 1): 1, (2, 3): 1}), 1)
