"""Exhaustive maximum-anticode search with pruning and canonical forms.

The search grows point sets depth-first inside the window ``[0, d]`` per
coordinate.  That window is complete because every pair inside an anticode
of diameter ``d`` is at pairwise distance at most ``d`` (pairs are
degenerate tuples), so the bounding box of any anticode fits after
translation.

Feasibility is tracked as Python-int bitmasks over the window.  Adding a
point intersects the candidate mask with precomputed masks recording which
window points keep every new tuple within the diameter: a ball mask for
the new point alone, one mask per existing point for triples, and one mask
per existing pair for quadruples.  Two further prunes keep the tree small:
branches that can no longer touch a zero wall on some axis are translates
of branches that can, and branches whose candidate count cannot reach the
best size are hopeless.

The search is single-threaded and visits candidates in lexicographic
order, so reports are deterministic.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations, product

import numpy as np

from .anticodes import AnticodeKind, Region
from .dispersion import quadristance_bulk, tristance_bulk
from .lattice import DomainError, Model, Point, apply_map, symmetry_maps

__all__ = ["SearchBudget", "SearchReport", "canonicalize", "max_anticode"]


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = 50_000_000
    max_seconds: float = 600.0


@dataclass(frozen=True)
class SearchReport:
    model: Model
    kind: AnticodeKind
    diameter: int
    max_size: int
    witnesses: tuple[Region, ...]
    nodes_explored: int
    wall_budget_hit: bool


def canonicalize(region: Region) -> Region:
    """Lexicographically least image under model symmetries and translation."""
    if not region.points:
        return region
    dim = region.model.dim
    best: tuple[Point, ...] | None = None
    for mat in symmetry_maps(region.model):
        mapped = [apply_map(mat, p) for p in region.points]
        lows = [min(p[i] for p in mapped) for i in range(dim)]
        shifted = sorted(tuple(p[i] - lows[i] for i in range(dim)) for p in mapped)
        key = tuple(shifted)
        if best is None or key < best:
            best = key
    return Region(model=region.model, points=best)


class _Budget(Exception):
    pass


def _pack_rows(rows: np.ndarray) -> list[int]:
    """Boolean matrix rows to little-endian Python-int bitmasks."""
    packed = np.packbits(rows, axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


def _ball_masks(model: Model, arr: np.ndarray, d: int) -> list[int]:
    diff = arr[:, None, :] - arr[None, :, :]
    if model in (Model.GRID2, Model.GRID3):
        dist = np.abs(diff).sum(axis=2)
    elif model is Model.INF2:
        dist = np.abs(diff).max(axis=2)
    else:
        u, v = diff[:, :, 0], diff[:, :, 1]
        z = np.zeros_like(u)
        dist = (np.maximum(np.maximum(u, v), z)
                - np.minimum(np.minimum(u, v), z))
    return _pack_rows(dist <= d)


def _triple_masks(model: Model, arr: np.ndarray, d: int) -> list[list[int]]:
    """``masks[i][j]`` holds the window points w with tristance(i, j, w) <= d."""
    n = len(arr)
    pair_idx = np.array(list(combinations(range(n), 2)), dtype=np.intp)
    a = np.repeat(arr[pair_idx[:, 0]], n, axis=0)
    b = np.repeat(arr[pair_idx[:, 1]], n, axis=0)
    w = np.tile(arr, (len(pair_idx), 1))
    vals = tristance_bulk(model, np.stack([a, b, w], axis=1))
    ok = (vals <= d).reshape(len(pair_idx), n)
    packed = _pack_rows(ok)
    masks = [[0] * n for _ in range(n)]
    for (i, j), mask in zip(pair_idx, packed):
        masks[i][j] = masks[j][i] = mask
    return masks


class _QuadMasks:
    """Memoized masks of window points keeping a quadruple within ``d``."""

    def __init__(self, arr: np.ndarray, d: int):
        self.arr = arr
        self.d = d
        self.cache: dict[tuple[int, int, int], int] = {}

    def get(self, i: int, j: int, k: int) -> int:
        key = tuple(sorted((i, j, k)))
        mask = self.cache.get(key)
        if mask is None:
            n = len(self.arr)
            quads = np.empty((n, 4, 2), dtype=np.int64)
            quads[:, 0] = self.arr[key[0]]
            quads[:, 1] = self.arr[key[1]]
            quads[:, 2] = self.arr[key[2]]
            quads[:, 3] = self.arr
            ok = quadristance_bulk(quads) <= self.d
            mask = _pack_rows(ok.reshape(1, -1))[0]
            self.cache[key] = mask
        return mask


def max_anticode(
    model: Model,
    kind: AnticodeKind,
    d: int,
    budget: SearchBudget = SearchBudget(),
    collect_witnesses: bool = True,
) -> SearchReport:
    """Exact maximum anticode size in the model, with canonical witnesses.

    On budget exhaustion the report carries ``wall_budget_hit=True`` and its
    ``max_size`` is only a lower bound.
    """
    if d < 1:
        raise DomainError("search needs diameter >= 1")
    if kind is AnticodeKind.QUADRISTANCE and model is not Model.GRID2:
        raise DomainError("quadristance anticodes exist for grid2 only")

    dim = model.dim
    window = sorted(product(range(d + 1), repeat=dim))
    n = len(window)
    arr = np.array(window, dtype=np.int64)
    full = (1 << n) - 1

    ball = _ball_masks(model, arr, d)
    r = kind.tuple_size
    tri = _triple_masks(model, arr, d) if r >= 3 else None
    quad = _QuadMasks(arr, d) if r == 4 else None

    wall_masks = []
    for axis in range(dim):
        mask = 0
        for idx, p in enumerate(window):
            if p[axis] == 0:
                mask |= 1 << idx
        wall_masks.append(mask)

    deadline = time.monotonic() + budget.max_seconds
    nodes = 0
    best = 0
    hit = False
    found: list[tuple[Point, ...]] = []
    chosen: list[int] = []

    def extend(cand: int, walls_left: int):
        nonlocal nodes, best
        nodes += 1
        if nodes > budget.max_nodes or (
                nodes % 4096 == 0 and time.monotonic() > deadline):
            raise _Budget
        size = len(chosen)
        if size > best:
            best = size
            found.clear()
        if collect_witnesses and size == best:
            found.append(tuple(window[i] for i in chosen))
        while cand:
            # Candidate count can no longer reach (or beat) the best: stop.
            room = size + cand.bit_count()
            if room < best or (not collect_witnesses and room == best):
                return
            k = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            new_walls = walls_left
            for axis in range(dim):
                if new_walls >> axis & 1 and window[k][axis] == 0:
                    new_walls &= ~(1 << axis)
            nxt = cand & ball[k]
            if r >= 3:
                if r == 3 or len(chosen) == 1:
                    for i in chosen:
                        nxt &= tri[i][k]
                elif len(chosen) >= 2:
                    for i, j in combinations(chosen, 2):
                        nxt &= quad.get(i, j, k)
            ok_walls = True
            probe = new_walls
            while probe:
                axis = (probe & -probe).bit_length() - 1
                probe &= probe - 1
                if nxt & wall_masks[axis] == 0:
                    ok_walls = False
                    break
            if ok_walls or new_walls == 0:
                chosen.append(k)
                extend(nxt, new_walls)
                chosen.pop()

    try:
        extend(full, (1 << dim) - 1)
    except _Budget:
        hit = True

    keep = (pts for pts in found if len(pts) == best)
    regions = sorted({canonicalize(Region.of(model, pts)) for pts in keep},
                     key=lambda reg: reg.points)
    return SearchReport(
        model=model, kind=kind, diameter=d,
        max_size=best,
        witnesses=tuple(regions),
        nodes_explored=nodes,
        wall_budget_hit=hit,
    )
