"""Exact Steiner tree length oracles on finite lattice windows.

The scalar path is the classic terminal-subset dynamic program: ``f[s][v]`` is
the cheapest tree spanning terminal subset ``s`` plus node ``v``, filled by
merging complementary submasks and then relaxing along unit edges.  It is
deliberately independent of every closed formula in this package so it can
serve as a trusted reference.

The bulk path precomputes all-pairs hop distances on one shared window and
evaluates many queries at once:

* three terminals: a minimal tree is a star, so the length is the minimum
  over hub nodes of the summed hub distances;
* four terminals: a minimal tree has at most two branch nodes, so the length
  is the minimum over the three pair partitions and two hubs ``u``, ``v`` of
  ``d(a,u) + d(b,u) + d(u,v) + d(c,v) + d(d,v)``.

Both reductions are exact on any graph (degenerate hubs cover the path and
star topologies) and are cross-checked against the dynamic program in tests.
"""

from __future__ import annotations

from collections import deque
from heapq import heapify, heappop, heappush
from itertools import product
from math import prod
from typing import Iterable, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .lattice import DomainError, Model, Point, bounding_box, neighbor_offsets

__all__ = ["WindowBudgetError", "DistanceWindow", "steiner_tree_length"]

DEFAULT_NODE_BUDGET = 20000

_INF = 1 << 30


class WindowBudgetError(DomainError):
    """The dilated search window exceeds the configured node budget."""


def _window_ranges(points: Sequence[Point], margin: int) -> list[range]:
    lows, highs = bounding_box(points)
    return [range(lo - margin, hi + margin + 1) for lo, hi in zip(lows, highs)]


def _check_budget(ranges: Sequence[range], budget: int) -> None:
    count = prod(len(r) for r in ranges)
    if count > budget:
        raise WindowBudgetError(
            f"window of {count} nodes exceeds the budget of {budget}")


def _adjacency(model: Model, index: dict[Point, int]) -> list[list[int]]:
    offsets = neighbor_offsets(model)
    adj: list[list[int]] = []
    for p in index:
        row = []
        for off in offsets:
            q = tuple(a + b for a, b in zip(p, off))
            j = index.get(q)
            if j is not None:
                row.append(j)
        adj.append(row)
    return adj


def _bfs_all(adj: list[list[int]], source: int) -> list[int]:
    dist = [_INF] * len(adj)
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if dist[w] == _INF:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def steiner_tree_length(
    model: Model,
    terminals: Iterable[Point],
    margin: int = 2,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> int:
    """Length of a minimal tree connecting ``terminals`` inside a dilated window.

    The window is the bounding box of the terminals grown by ``margin`` in
    every coordinate.  Raises :class:`WindowBudgetError` when that window
    holds more than ``node_budget`` nodes.
    """
    terms = list(dict.fromkeys(tuple(t) for t in terminals))
    if not terms:
        raise DomainError("no terminals given")
    if margin < 0:
        raise DomainError("margin must be nonnegative")
    if len(terms) == 1:
        return 0

    ranges = _window_ranges(terms, margin)
    _check_budget(ranges, node_budget)
    index = {p: i for i, p in enumerate(product(*ranges))}
    adj = _adjacency(model, index)
    n = len(adj)
    r = len(terms)
    full = (1 << r) - 1

    f = [[_INF] * n for _ in range(full + 1)]
    for i, t in enumerate(terms):
        f[1 << i] = _bfs_all(adj, index[t])

    for mask in range(1, full + 1):
        if mask & (mask - 1) == 0:
            continue
        cur = f[mask]
        ss = (mask - 1) & mask
        while ss:
            rest = mask ^ ss
            if ss <= rest:  # each unordered split once
                fs, fr = f[ss], f[rest]
                for v in range(n):
                    c = fs[v] + fr[v]
                    if c < cur[v]:
                        cur[v] = c
            ss = (ss - 1) & mask
        heap = [(c, v) for v, c in enumerate(cur) if c < _INF]
        heapify(heap)
        while heap:
            c, v = heappop(heap)
            if c > cur[v]:
                continue
            for w in adj[v]:
                if c + 1 < cur[w]:
                    cur[w] = c + 1
                    heappush(heap, (c + 1, w))

    return min(f[full])


_PAIRINGS = ((0, 1, 2, 3), (0, 2, 1, 3), (0, 3, 1, 2))


class DistanceWindow:
    """All-pairs hop distances on one dilated window, for bulk Steiner queries."""

    def __init__(
        self,
        model: Model,
        hull: Sequence[Point],
        margin: int = 2,
        node_budget: int = DEFAULT_NODE_BUDGET,
    ):
        ranges = _window_ranges(list(hull), margin)
        _check_budget(ranges, node_budget)
        self.model = model
        self.points: list[Point] = [tuple(p) for p in product(*ranges)]
        self.index = {p: i for i, p in enumerate(self.points)}
        adj = _adjacency(model, self.index)
        rows = [i for i, nbrs in enumerate(adj) for _ in nbrs]
        cols = [j for nbrs in adj for j in nbrs]
        n = len(self.points)
        graph = csr_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)),
                           shape=(n, n))
        self.dmat = shortest_path(graph, method="D", unweighted=True).astype(np.int64)

    def idx(self, points: Iterable[Point]) -> np.ndarray:
        return np.array([self.index[tuple(p)] for p in points], dtype=np.intp)

    def steiner3_bulk(self, triples: np.ndarray) -> np.ndarray:
        """Minimal tree lengths for index triples, via the best-hub reduction."""
        D = self.dmat
        costs = D[triples[:, 0]] + D[triples[:, 1]] + D[triples[:, 2]]
        return costs.min(axis=1)

    def steiner4_bulk(self, quads: np.ndarray, chunk: int = 512) -> np.ndarray:
        """Minimal tree lengths for index quadruples, via the two-hub reduction."""
        D = self.dmat
        best = np.full(len(quads), np.iinfo(np.int64).max)
        for a, b, c, d in _PAIRINGS:
            m1 = D[quads[:, a]] + D[quads[:, b]]
            m2 = D[quads[:, c]] + D[quads[:, d]]
            for lo in range(0, len(quads), chunk):
                hi = min(lo + chunk, len(quads))
                # t[n, u] = min_v (m2[n, v] + d(u, v))
                t = (m2[lo:hi, None, :] + D[None, :, :]).min(axis=2)
                np.minimum(best[lo:hi], (m1[lo:hi] + t).min(axis=1),
                           out=best[lo:hi])
        return best
