"""The Steiner oracle against an independent connected-subset brute force."""

import random
from collections import deque
from itertools import combinations, product

import numpy as np
import pytest

from latdisp.lattice import Model, neighbors, pairwise_distance
from latdisp.steiner import DistanceWindow, WindowBudgetError, steiner_tree_length

ALL_MODELS = list(Model)


def brute_force_steiner(model, terminals, margin):
    """Smallest connected node superset of the terminals, by full enumeration.

    Any tree on a node set S has |S| - 1 edges, so the minimal tree length is
    the minimum of |S| - 1 over subsets S whose induced subgraph is connected
    and contains every terminal.  Only viable for windows of ~16 nodes.
    """
    lows = [min(t[i] for t in terminals) - margin for i in range(len(terminals[0]))]
    highs = [max(t[i] for t in terminals) + margin for i in range(len(terminals[0]))]
    window = [tuple(p) for p in product(*(range(lo, hi + 1)
                                          for lo, hi in zip(lows, highs)))]
    steiner_candidates = [p for p in window if p not in set(terminals)]
    base = set(terminals)
    best = None
    for extra in range(len(window) - len(base) + 1):
        if best is not None:
            break
        for added in combinations(steiner_candidates, extra):
            nodes = base | set(added)
            seen = {next(iter(nodes))}
            queue = deque(seen)
            while queue:
                p = queue.popleft()
                for q in neighbors(model, p):
                    if q in nodes and q not in seen:
                        seen.add(q)
                        queue.append(q)
            if seen == nodes:
                best = len(nodes) - 1
                break
    return best


@pytest.mark.parametrize("model", ALL_MODELS)
def test_two_terminals_recover_pairwise_distance(model, rng=random.Random(7)):
    for _ in range(30):
        p = tuple(rng.randint(-5, 5) for _ in range(model.dim))
        q = tuple(rng.randint(-5, 5) for _ in range(model.dim))
        assert steiner_tree_length(model, [p, q]) == pairwise_distance(model, p, q)


@pytest.mark.parametrize("model", ALL_MODELS)
def test_dp_matches_subset_brute_force(model):
    rng = random.Random(hash(model.value) & 0xFFFF)
    for r in (3, 4):
        for _ in range(8):
            if model.dim == 2:
                terms = [(rng.randint(0, 2), rng.randint(0, 2)) for _ in range(r)]
            else:
                terms = [(rng.randint(0, 1), rng.randint(0, 1), rng.randint(0, 1))
                         for _ in range(r)]
            terms = list(dict.fromkeys(terms))
            expected = brute_force_steiner(model, terms, margin=1)
            assert steiner_tree_length(model, terms, margin=1) == expected


def test_known_small_values():
    assert steiner_tree_length(Model.GRID2, [(0, 0), (2, 0), (0, 2)]) == 4
    assert steiner_tree_length(Model.GRID2, [(0, 0), (1, 0), (0, 1), (1, 1)]) == 3
    assert steiner_tree_length(Model.INF2, [(0, 0), (2, 0), (0, 2)]) == 3
    assert steiner_tree_length(Model.HEX2, [(0, 0), (1, 0), (0, 1)]) == 2
    assert steiner_tree_length(Model.GRID3, [(0, 0, 0), (1, 1, 0), (0, 1, 1)]) == 3
    assert steiner_tree_length(Model.GRID3, [(0, 0, 0), (2, 1, 0), (0, 1, 2)]) == 5
    assert steiner_tree_length(Model.GRID2, [(3, 3)]) == 0
    assert steiner_tree_length(Model.GRID2, [(0, 0), (0, 0), (1, 1)]) == 2


def test_wider_margin_never_increases_length():
    rng = random.Random(11)
    for model in ALL_MODELS:
        for _ in range(10):
            terms = [tuple(rng.randint(0, 3) for _ in range(model.dim))
                     for _ in range(3)]
            lengths = [steiner_tree_length(model, terms, margin=m)
                       for m in (1, 2, 3)]
            assert lengths[0] >= lengths[1] >= lengths[2]


def test_node_budget_enforced():
    with pytest.raises(WindowBudgetError):
        steiner_tree_length(Model.GRID2, [(0, 0), (300, 300)], node_budget=20000)
    with pytest.raises(WindowBudgetError):
        DistanceWindow(Model.GRID3, [(0, 0, 0), (40, 40, 40)], node_budget=20000)


@pytest.mark.parametrize("model", ALL_MODELS)
def test_bulk_reductions_match_dp(model):
    rng = random.Random(hash(model.value) & 0xFFF)
    if model.dim == 2:
        hull = [(0, 0), (4, 4)]
        pool = [(x, y) for x in range(5) for y in range(5)]
    else:
        hull = [(0, 0, 0), (3, 3, 3)]
        pool = [p for p in product(range(4), repeat=3)]
    win = DistanceWindow(model, hull, margin=2)

    triples = [tuple(rng.sample(pool, 3)) for _ in range(25)]
    got3 = win.steiner3_bulk(np.array([win.idx(t) for t in triples]))
    for t, g in zip(triples, got3):
        assert g == steiner_tree_length(model, t, margin=2)

    quads = [tuple(rng.sample(pool, 4)) for _ in range(15)]
    got4 = win.steiner4_bulk(np.array([win.idx(q) for q in quads]))
    for q, g in zip(quads, got4):
        assert g == steiner_tree_length(model, q, margin=2)
