"""Interleaving bounds and Go locus behavior."""

from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from latdisp.anticodes import AnticodeKind, AnticodeSpec, optimal_anticode
from latdisp.apps import GobanState, go_locus, interleaving_lower_bound
from latdisp.dispersion import quadristance_bulk, tristance_bulk
from latdisp.lattice import DomainError, Model

BOARD = np.array([(x, y) for x in range(19) for y in range(19)],
                 dtype=np.int64)


def test_bound_examples():
    assert interleaving_lower_bound(Model.GRID2, 8, 2).value == 11
    assert interleaving_lower_bound(Model.HEX2, 6, 2).value == 7
    assert interleaving_lower_bound(Model.GRID2, 9, 3).value == 6


def test_bound_reports_anticode_size():
    bound = interleaving_lower_bound(Model.GRID2, 8, 2)
    assert bound.anticode_size == 21
    assert bound.value == -(-bound.anticode_size // 2)


@pytest.mark.parametrize("t", range(2, 31))
def test_bound_closed_forms(t):
    assert interleaving_lower_bound(Model.GRID2, t, 2).value == \
        -(-t * (t + 1) // 7)
    assert interleaving_lower_bound(Model.HEX2, t, 2).value == \
        -(-t * (t + 1) // 6)
    assert interleaving_lower_bound(Model.INF2, t, 2).value == \
        -(-(2 * t * t - 1) // 7)
    assert interleaving_lower_bound(Model.GRID2, t, 3).value == \
        -(-t * (t + 2) // 18)


def test_bound_matches_constructed_anticode():
    for t in (2, 5, 11, 24):
        built = optimal_anticode(
            AnticodeSpec(Model.GRID2, AnticodeKind.TRISTANCE, t - 1))
        assert interleaving_lower_bound(Model.GRID2, t, 2).value == \
            -(-built.region.size // 2)


def test_bound_rejects_unsupported_combinations():
    with pytest.raises(DomainError):
        interleaving_lower_bound(Model.GRID2, 1, 2)
    with pytest.raises(DomainError):
        interleaving_lower_bound(Model.GRID2, 8, 4)
    with pytest.raises(DomainError):
        interleaving_lower_bound(Model.HEX2, 8, 3)
    with pytest.raises(DomainError):
        interleaving_lower_bound(Model.GRID3, 8, 2)


def test_goban_state_validation():
    with pytest.raises(DomainError):
        GobanState(stones=((1, 1), (1, 1)), k=0)
    with pytest.raises(DomainError):
        GobanState(stones=((19, 3),), k=0)
    with pytest.raises(DomainError):
        GobanState(stones=((0, 0), (1, 0), (2, 0), (3, 0)), k=0)
    with pytest.raises(DomainError):
        GobanState(stones=(), k=-1)


def test_single_stone_example():
    region = go_locus(GobanState(stones=((9, 9),), k=2))
    assert region.size == 13
    assert all(abs(x - 9) + abs(y - 9) <= 2 for x, y in region.points)


def test_two_stone_corner_clip_example():
    region = go_locus(GobanState(stones=((0, 0), (1, 0)), k=0))
    assert set(region.points) == {(0, 0), (1, 0), (2, 0), (0, 1), (1, 1)}


def test_zero_stone_example():
    region = go_locus(GobanState(stones=(), k=5))
    assert region.size == 21
    xs = [p[0] for p in region.points]
    ys = [p[1] for p in region.points]
    assert abs(min(xs) + max(xs) - 18) <= 1
    assert abs(min(ys) + max(ys) - 18) <= 1


def test_two_stone_locus_pointwise_on_8x8():
    cells = [(x, y) for x in range(8) for y in range(8)]
    for z1, z2 in combinations(cells, 2):
        for k in range(4):
            locus = set(go_locus(GobanState(stones=(z1, z2), k=k)).points)
            triples = np.empty((len(BOARD), 3, 2), dtype=np.int64)
            triples[:, 0] = z1
            triples[:, 1] = z2
            triples[:, 2] = BOARD
            brute = BOARD[tristance_bulk(Model.GRID2, triples) <= k + 2]
            assert locus == {tuple(p) for p in brute}, (z1, z2, k)


def test_three_stone_locus_pointwise_samples():
    for stones in [((9, 9), (11, 9), (10, 11)), ((0, 0), (3, 1), (1, 4)),
                   ((16, 2), (18, 0), (15, 5))]:
        for k in range(3):
            locus = set(go_locus(GobanState(stones=stones, k=k)).points)
            quads = np.empty((len(BOARD), 4, 2), dtype=np.int64)
            quads[:, 0], quads[:, 1], quads[:, 2] = stones
            quads[:, 3] = BOARD
            brute = BOARD[quadristance_bulk(quads) <= k + 3]
            assert locus == {tuple(p) for p in brute}, (stones, k)


stone_strat = st.tuples(st.integers(0, 18), st.integers(0, 18))


@settings(max_examples=40, deadline=None)
@given(st.lists(stone_strat, min_size=1, max_size=3, unique=True),
       st.integers(0, 5))
def test_locus_monotone_in_k_with_stones(stones, k):
    smaller = set(go_locus(GobanState(stones=tuple(stones), k=k)).points)
    larger = set(go_locus(GobanState(stones=tuple(stones), k=k + 1)).points)
    assert smaller <= larger


def test_locus_stone_cells_belong_when_contained():
    region = go_locus(GobanState(stones=((9, 9),), k=2))
    assert (9, 9) in set(region.points)
