"""Closed-form tristance and quadristance, plus the Steiner oracle wrapper.

Tristance and quadristance are the edge counts of Steiner minimal trees on
three and four points.  Each model has an exact closed form:

* ``grid2``/``grid3``: the sum of per-coordinate spreads (max minus min).
* ``inf2``: half the ``grid2`` tristance of the rotated images under
  ``phi``, rounded up.
* ``hex2``: per-point truncated spans measured from the coordinatewise
  middle point.
* quadristance (``grid2`` only): the spread sum, plus the smaller middle
  gap unless some pair of stable coordinate sortings agree up to the
  order-8 group generated by swapping within or across the two sorted
  halves.

Scalar functions take tuples; ``*_bulk`` variants take integer ndarrays and
are used by the exhaustive acceptance sweeps.  Both routes are implemented
independently and tested against each other and the Steiner oracle.
"""

from __future__ import annotations

from itertools import combinations, islice, permutations
from typing import Iterable, Sequence

import numpy as np

from .lattice import DomainError, Model, Point, Point2, pairwise_distance, phi
from .steiner import DEFAULT_NODE_BUDGET, steiner_tree_length

__all__ = [
    "tristance",
    "tristance_bulk",
    "quadristance",
    "quadristance_bulk",
    "dispersion_oracle",
    "dispersion_diameter",
    "pair_partition_group",
]


def _mid(a: int, b: int, c: int) -> int:
    return a + b + c - max(a, b, c) - min(a, b, c)


def _hmax(a: int, b: int) -> int:
    return max(a, b, 0)


def _hmin(a: int, b: int) -> int:
    return min(a, b, 0)


def tristance(model: Model, z1: Point, z2: Point, z3: Point) -> int:
    """Edge count of a Steiner minimal tree on three points of the model."""
    pts = (z1, z2, z3)
    if model is Model.GRID2 or model is Model.GRID3:
        return sum(max(p[i] for p in pts) - min(p[i] for p in pts)
                   for i in range(model.dim))
    if model is Model.INF2:
        a, b, c = (phi(p) for p in pts)
        return -(-tristance(Model.GRID2, a, b, c) // 2)
    xm = _mid(z1[0], z2[0], z3[0])
    ym = _mid(z1[1], z2[1], z3[1])
    return sum(_hmax(p[0] - xm, p[1] - ym) - _hmin(p[0] - xm, p[1] - ym)
               for p in pts)


def _perm_closure(generators: Sequence[tuple[int, ...]]) -> frozenset[tuple[int, ...]]:
    seen = set(generators)
    frontier = list(seen)
    while frontier:
        g = frontier.pop()
        for h in list(seen):
            for comp in (tuple(g[i] for i in h), tuple(h[i] for i in g)):
                if comp not in seen:
                    seen.add(comp)
                    frontier.append(comp)
    return frozenset(seen)


# Swaps within the low pair, within the high pair, and of the two pairs.
_GAMMA = _perm_closure([(1, 0, 2, 3), (0, 1, 3, 2), (2, 3, 0, 1)])


def pair_partition_group() -> frozenset[tuple[int, ...]]:
    """The order-8 permutation group preserving the split {1st,2nd}|{3rd,4th}."""
    return _GAMMA


def _stable_sorts(vals: Sequence[int]) -> list[tuple[int, ...]]:
    return [p for p in permutations(range(4))
            if vals[p[0]] <= vals[p[1]] <= vals[p[2]] <= vals[p[3]]]


def quadristance(z1: Point2, z2: Point2, z3: Point2, z4: Point2) -> int:
    """Edge count of a Steiner minimal tree on four points of ``grid2``."""
    xs = (z1[0], z2[0], z3[0], z4[0])
    ys = (z1[1], z2[1], z3[1], z4[1])
    spread = max(xs) - min(xs) + max(ys) - min(ys)
    x_sorts = _stable_sorts(xs)
    y_sorts = _stable_sorts(ys)
    for sigma in x_sorts:
        inv = [0] * 4
        for pos, idx in enumerate(sigma):
            inv[idx] = pos
        for tau in y_sorts:
            if tuple(inv[i] for i in tau) in _GAMMA:
                return spread
    xq = sorted(xs)
    yq = sorted(ys)
    return spread + min(xq[2] - xq[1], yq[2] - yq[1])


def tristance_bulk(model: Model, triples: np.ndarray) -> np.ndarray:
    """Vectorized tristance for an ``(n, 3, dim)`` integer array."""
    a = np.asarray(triples, dtype=np.int64)
    if model is Model.GRID2 or model is Model.GRID3:
        return (a.max(axis=1) - a.min(axis=1)).sum(axis=1)
    if model is Model.INF2:
        u = a[:, :, 0] - a[:, :, 1]
        v = a[:, :, 0] + a[:, :, 1]
        total = (u.max(axis=1) - u.min(axis=1)) + (v.max(axis=1) - v.min(axis=1))
        return (total + 1) // 2
    x = a[:, :, 0]
    y = a[:, :, 1]
    xm = np.median(x, axis=1).astype(np.int64)[:, None]
    ym = np.median(y, axis=1).astype(np.int64)[:, None]
    dx = x - xm
    dy = y - ym
    zero = np.zeros_like(dx)
    spans = np.maximum(np.maximum(dx, dy), zero) - np.minimum(np.minimum(dx, dy), zero)
    return spans.sum(axis=1)


_PAIR_SPLITS = (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2)))


def quadristance_bulk(quads: np.ndarray) -> np.ndarray:
    """Vectorized ``grid2`` quadristance for an ``(n, 4, 2)`` integer array.

    A pair of stable sortings related by the pair-partition group exists
    exactly when some split of the four points into two pairs separates the
    values in both coordinates, which avoids enumerating permutations.
    """
    a = np.asarray(quads, dtype=np.int64)
    x = a[:, :, 0]
    y = a[:, :, 1]
    spread = np.ptp(x, axis=1) + np.ptp(y, axis=1)

    ok = np.zeros(len(a), dtype=bool)
    for lo, hi in _PAIR_SPLITS:
        sep = None
        for vals in (x, y):
            va = vals[:, lo]
            vb = vals[:, hi]
            s = (va.max(axis=1) <= vb.min(axis=1)) | (vb.max(axis=1) <= va.min(axis=1))
            sep = s if sep is None else (sep & s)
        ok |= sep

    xs = np.sort(x, axis=1)
    ys = np.sort(y, axis=1)
    extra = np.minimum(xs[:, 2] - xs[:, 1], ys[:, 2] - ys[:, 1])
    return spread + np.where(ok, 0, extra)


def dispersion_oracle(
    model: Model,
    points: Sequence[Point],
    margin: int = 2,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> int:
    """Exact Steiner minimal tree edge count for 2 to 5 points of the model."""
    pts = [tuple(p) for p in points]
    if not 2 <= len(pts) <= 5:
        raise DomainError(f"expected 2 to 5 points, got {len(pts)}")
    if margin < 0:
        raise DomainError("margin must be nonnegative")
    return steiner_tree_length(model, pts, margin=margin, node_budget=node_budget)


def _closed_form(model: Model, tup: Sequence[Point]) -> int:
    if len(tup) == 2:
        return pairwise_distance(model, tup[0], tup[1])
    if len(tup) == 3:
        return tristance(model, *tup)
    return quadristance(*tup)


def dispersion_diameter(
    model: Model,
    r: int,
    points: Iterable[Point],
    chunk: int = 200_000,
) -> int:
    """Maximum r-point dispersion over all r-multisets of a finite region."""
    if r not in (2, 3, 4):
        raise DomainError(f"r must be 2, 3, or 4, not {r}")
    if r == 4 and model is not Model.GRID2:
        raise DomainError("quadristance is defined for grid2 only")
    pts = list(dict.fromkeys(tuple(p) for p in points))
    if not pts:
        raise DomainError("empty region has no dispersion diameter")
    n = len(pts)
    if n < r:
        # Repeats fill the tuple; duplicates never change the Steiner tree.
        return _closed_form(model, _pad(pts, r))
    arr = np.array(pts, dtype=np.int64)

    if r == 2:
        best = 0
        for i in range(n - 1):
            diff = arr[i + 1:] - arr[i]
            if model is Model.GRID2 or model is Model.GRID3:
                cand = np.abs(diff).sum(axis=1).max()
            elif model is Model.INF2:
                cand = np.abs(diff).max(axis=1).max()
            else:
                u = diff[:, 0]
                v = diff[:, 1]
                z = np.zeros_like(u)
                cand = (np.maximum(np.maximum(u, v), z)
                        - np.minimum(np.minimum(u, v), z)).max()
            best = max(best, int(cand))
        return best

    best = 0
    combo = combinations(range(n), r)
    while True:
        block = list(islice(combo, chunk))
        if not block:
            break
        idx = np.array(block, dtype=np.intp)
        tuples = arr[idx]
        vals = tristance_bulk(model, tuples) if r == 3 else quadristance_bulk(tuples)
        best = max(best, int(vals.max()))
    return best


def _pad(pts: list[Point], r: int) -> list[Point]:
    out = list(pts)
    while len(out) < r:
        out.append(pts[0])
    return out
