"""Interleaving-degree lower bounds and Go connectivity-locus queries.

Both applications ride on the anticode constructors.  The interleaving
bound converts an optimal-anticode size into a floor on the number of
labels any valid interleaving needs.  The Go locus answers "where can a
stone be played so the group connects within k extra moves" by clipping
the matching centered anticode to the board.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .anticodes import (
    AnticodeKind,
    AnticodeSpec,
    Region,
    centered_anticode_1pt,
    centered_anticode_2pt,
    centered_quadristance_anticode_3pt,
    optimal_anticode,
    optimal_size_formula,
)
from .lattice import DomainError, Model, Point2

__all__ = ["GobanState", "InterleavingBound", "go_locus",
           "interleaving_lower_bound"]


class InterleavingBound(NamedTuple):
    """Label-count floor together with the anticode size it came from."""

    value: int
    anticode_size: int


def interleaving_lower_bound(model: Model, t: int, r: int) -> InterleavingBound:
    """Fewest labels usable when no label may repeat more than ``r`` times
    in any connected subgraph on ``t`` vertices.

    Any ``r + 1`` points of an optimal anticode of diameter ``t - 1`` span
    a connected subgraph on at most ``t`` vertices, so each label covers at
    most ``r`` anticode points; dividing the anticode size by ``r`` floors
    the label count.
    """
    if t < 2:
        raise DomainError("interleaving bound needs t >= 2")
    if r not in (2, 3):
        raise DomainError("supported repeat limits are r=2 and r=3")
    if r == 3 and model is not Model.GRID2:
        raise DomainError("the r=3 bound is known for grid2 only")
    if model is Model.GRID3:
        raise DomainError("interleaving bounds cover the planar models only")
    kind = AnticodeKind.TRISTANCE if r == 2 else AnticodeKind.QUADRISTANCE
    size = optimal_size_formula(model, kind, t - 1)
    return InterleavingBound(value=-(-size // r), anticode_size=size)


@dataclass(frozen=True)
class GobanState:
    """Stones on a square Go board plus an allowed number of extra moves."""

    stones: tuple[Point2, ...] = ()
    k: int = 0
    board_size: int = 19

    def __post_init__(self):
        object.__setattr__(self, "stones", tuple(
            (int(x), int(y)) for x, y in self.stones))
        if self.board_size < 1:
            raise DomainError("board size must be positive")
        if self.k < 0:
            raise DomainError("extra-move count k must be nonnegative")
        if len(self.stones) > 3:
            raise DomainError("occupied-board analysis beyond 3 stones is "
                              "out of scope")
        if len(set(self.stones)) != len(self.stones):
            raise DomainError("stones must be distinct")
        for x, y in self.stones:
            if not (0 <= x < self.board_size and 0 <= y < self.board_size):
                raise DomainError(f"stone ({x},{y}) is off the board")


def _clip(region: Region, board_size: int) -> Region:
    kept = [p for p in region.points
            if 0 <= p[0] < board_size and 0 <= p[1] < board_size]
    return Region(model=region.model, points=tuple(kept))


def _center_on_board(region: Region, board_size: int) -> Region:
    if not region.points:
        return region
    shifts = []
    for axis in range(2):
        lo = min(p[axis] for p in region.points)
        hi = max(p[axis] for p in region.points)
        shifts.append((board_size - 1 - lo - hi) // 2)
    moved = sorted((p[0] + shifts[0], p[1] + shifts[1])
                   for p in region.points)
    return Region(model=region.model, points=tuple(moved))


def go_locus(state: GobanState) -> Region:
    """Board cells where the next stone keeps everything k-connectable.

    With no stones the answer is only defined up to translation, so the
    optimal anticode is centered on the board by bounding box.  Stones
    count as ordinary cells of the locus when the underlying set contains
    them; edge effects are handled by plain clipping, never by
    recomputing the region against the board boundary.
    """
    d = state.k + 2
    if not state.stones:
        sol = optimal_anticode(
            AnticodeSpec(Model.GRID2, AnticodeKind.TRISTANCE, d))
        return _clip(_center_on_board(sol.region, state.board_size),
                     state.board_size)
    if len(state.stones) == 1:
        region = centered_anticode_1pt(state.stones[0], d)
    elif len(state.stones) == 2:
        region = centered_anticode_2pt(Model.GRID2, state.stones[0],
                                       state.stones[1], d)
    else:
        region = centered_quadristance_anticode_3pt(*state.stones, d + 1)
    return _clip(region, state.board_size)
