"""Anticode constructions: centered families, optimal families, validity.

An anticode of diameter ``d`` is a point set whose every pair (or triple, or
quadruple) has dispersion at most ``d``.  This module builds:

* centered anticodes: the largest set whose tuples through one, two, or
  three fixed centers stay within ``d``;
* optimal anticodes: the largest set outright, from the classified shape
  families (spheres and squares for pairwise distance; octagons, hexagons,
  and icosihexahedra for tristance; equally cut octagons for quadristance);
* :func:`is_anticode`, a direct checker that also produces a violating
  tuple on failure.

Optimal constructions carry an exactness flag.  The planar families are
proven extremal; the 3-D family is conjectured extremal; the quadristance
family is a best-known lower-bound construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations, islice
from math import ceil, floor, sqrt
from typing import Iterable, Sequence

import numpy as np

from .dispersion import (
    dispersion_diameter,
    quadristance_bulk,
    tristance,
    tristance_bulk,
)
from .lattice import (
    DomainError,
    Model,
    Point,
    Point2,
    pairwise_distance,
    phi,
    phi_inverse,
)
from .shapes import (
    Hexagon,
    Icosihexahedron,
    Octagon,
    OctagonBounds,
    QuadOctagon,
    hexagon_size_and_diameter,
    icosihexahedron_volume,
    octagon_bounds,
    octagon_size,
    quad_octagon_size,
    shape_enumerate,
)

__all__ = [
    "AnticodeKind",
    "AnticodeSpec",
    "Exactness",
    "OptimalAnticode",
    "Region",
    "best_quad_octagons",
    "centered_anticode_1pt",
    "centered_anticode_2pt",
    "centered_quadristance_anticode_3pt",
    "is_anticode",
    "l1_sphere",
    "optimal_anticode",
    "optimal_anticode_solutions",
    "optimal_distance_anticode",
    "optimal_size_formula",
]

HEX_ODD_OFFSETS: tuple[tuple[Fraction, Fraction], ...] = tuple(
    (Fraction(a, 3), Fraction(b, 3))
    for a, b in ((1, -1), (2, 1), (1, 2), (-1, 1), (-2, -1), (-1, -2))
)

ODD_SPHERE_OFFSETS: tuple[tuple[Fraction, Fraction], ...] = (
    (Fraction(1, 2), Fraction(0)), (Fraction(-1, 2), Fraction(0)),
    (Fraction(0), Fraction(1, 2)), (Fraction(0), Fraction(-1, 2)),
)


class AnticodeKind(str, Enum):
    DISTANCE = "distance"
    TRISTANCE = "tristance"
    QUADRISTANCE = "quadristance"

    @classmethod
    def parse(cls, tag: str) -> "AnticodeKind":
        try:
            return cls(tag)
        except ValueError:
            raise DomainError(f"unknown anticode kind {tag!r}") from None

    @property
    def tuple_size(self) -> int:
        return {"distance": 2, "tristance": 3, "quadristance": 4}[self.value]


class Exactness(str, Enum):
    EXACT = "EXACT"
    CONJECTURAL = "CONJECTURAL"
    LOWER_BOUND = "LOWER-BOUND-CONSTRUCTION"


@dataclass(frozen=True)
class Region:
    """A finite, deduplicated, lexicographically sorted point set of a model."""

    model: Model
    points: tuple[Point, ...]

    @classmethod
    def of(cls, model: Model, points: Iterable[Point]) -> "Region":
        pts = sorted({tuple(p) for p in points})
        for p in pts:
            if len(p) != model.dim:
                raise DomainError(f"point {p} does not fit model {model.value}")
        return cls(model=model, points=tuple(pts))

    @property
    def size(self) -> int:
        return len(self.points)

    def __contains__(self, p: Point) -> bool:
        return tuple(p) in set(self.points)


@dataclass(frozen=True)
class AnticodeSpec:
    model: Model
    kind: AnticodeKind
    diameter: int

    def validate(self) -> None:
        if self.kind is AnticodeKind.QUADRISTANCE and self.model is not Model.GRID2:
            raise DomainError("quadristance anticodes exist for grid2 only")
        min_d = 0 if self.kind is AnticodeKind.DISTANCE else 1
        if self.diameter < min_d:
            raise DomainError(
                f"{self.kind.value} anticodes need diameter >= {min_d}")


@dataclass(frozen=True)
class OptimalAnticode:
    region: Region
    shape: object | None
    params: dict = field(compare=False)
    exactness: Exactness


# ---------------------------------------------------------------------------
# Spheres and centered families
# ---------------------------------------------------------------------------

def _as_half(value) -> Fraction:
    f = Fraction(value)
    if f.denominator not in (1, 2):
        raise DomainError(f"{value} is not an integer or half-integer")
    return f


def l1_sphere(center: Sequence, radius) -> Region:
    """All lattice points within L1 distance ``radius`` of ``center``.

    The center may have exactly one half-integral coordinate, in which case
    the radius must be half-integral too; an integral center needs an
    integral radius.
    """
    cx, cy = (_as_half(c) for c in center)
    r = _as_half(radius)
    if r < 0:
        raise DomainError("radius must be nonnegative")
    halves = (cx.denominator == 2) + (cy.denominator == 2)
    if halves == 2 or (halves == 0) != (r.denominator == 1):
        raise DomainError(
            f"center {tuple(map(str, (cx, cy)))} and radius {r} have "
            "mismatched parities")
    pts = []
    for x in range(ceil(cx - r), floor(cx + r) + 1):
        rem = r - abs(x - cx)
        for y in range(ceil(cy - rem), floor(cy + rem) + 1):
            pts.append((x, y))
    return Region.of(Model.GRID2, pts)


def _hex_ball(center: tuple[Fraction, Fraction], radius: Fraction) -> Region:
    """Hexagonal-metric ball; the metric extends to fractional centers."""
    cx, cy = center
    pts = []
    for x in range(ceil(cx - radius), floor(cx + radius) + 1):
        for y in range(ceil(cy - radius), floor(cy + radius) + 1):
            if max(abs(x - cx), abs(y - cy), abs((x - y) - (cx - cy))) <= radius:
                pts.append((x, y))
    return Region.of(Model.HEX2, pts)


def optimal_distance_anticode(model: Model, d: int,
                              xi: tuple | None = None) -> Region:
    """Largest set of pairwise distance diameter ``d`` in a planar model.

    For odd ``d`` the extremal set is a ball about an off-lattice center;
    ``xi`` picks the offset (any admissible choice gives the same size).
    """
    if d < 0:
        raise DomainError("diameter must be nonnegative")
    if model is Model.GRID2:
        if d % 2 == 0:
            return l1_sphere((0, 0), d // 2)
        offset = tuple(map(Fraction, xi)) if xi is not None else ODD_SPHERE_OFFSETS[0]
        if offset not in ODD_SPHERE_OFFSETS:
            raise DomainError(f"offset {xi} is not one of the four half steps")
        return l1_sphere(offset, Fraction(d, 2))
    if model is Model.INF2:
        return Region.of(Model.INF2, ((x, y) for x in range(d + 1)
                                      for y in range(d + 1)))
    if model is Model.HEX2:
        if d % 2 == 0:
            return _hex_ball((Fraction(0), Fraction(0)), Fraction(d, 2))
        offset = tuple(map(Fraction, xi)) if xi is not None else HEX_ODD_OFFSETS[0]
        if offset not in HEX_ODD_OFFSETS:
            raise DomainError(f"offset {xi} is not one of the six third steps")
        return _hex_ball(offset, Fraction(d + 1, 2))
    raise DomainError(f"no distance anticode family for model {model.value}")


def centered_anticode_1pt(z0: Point2, d: int,
                          xi: tuple = (Fraction(1, 2), 0)) -> Region:
    """Largest ``grid2`` set whose triples through ``z0`` stay within ``d``.

    Even ``d`` gives the L1 ball of radius ``d/2`` about ``z0``; odd ``d``
    shifts the center by a half step ``xi`` (all four choices are optimal).
    """
    if d < 0:
        raise DomainError("diameter must be nonnegative")
    x0, y0 = z0
    if d % 2 == 0:
        return l1_sphere((x0, y0), d // 2)
    offset = tuple(map(Fraction, xi))
    if offset not in ODD_SPHERE_OFFSETS:
        raise DomainError(f"offset {xi} is not one of the four half steps")
    return l1_sphere((x0 + offset[0], y0 + offset[1]), Fraction(d, 2))


def _two_center_octagon(p1: Point2, p2: Point2, c: int) -> OctagonBounds:
    xlo, xhi = min(p1[0], p2[0]), max(p1[0], p2[0])
    ylo, yhi = min(p1[1], p2[1]), max(p1[1], p2[1])
    return OctagonBounds(
        x_lo=xlo - c, y_lo=ylo - c,
        sum_lo=xlo + ylo - c, diff_lo=xlo - yhi - c,
        x_hi=xhi + c, y_hi=yhi + c,
        sum_hi=xhi + yhi + c, diff_hi=xhi - ylo + c,
    )


def centered_anticode_2pt(model: Model, p1: Point, p2: Point, d: int) -> Region:
    """Largest set whose triples through the two centers stay within ``d``.

    Returns the empty region when ``d`` is below the pairwise distance.
    Equal centers are meaningful for ``grid2`` only, where the problem
    reduces to the one-center family.
    """
    p1, p2 = tuple(p1), tuple(p2)
    if p1 == p2:
        if model is Model.GRID2:
            return centered_anticode_1pt(p1, d)
        raise DomainError("equal centers are only supported for grid2")
    dist = pairwise_distance(model, p1, p2)
    if d < dist:
        return Region.of(model, ())
    c = d - dist

    if model is Model.GRID2:
        return Region.of(model, _two_center_octagon(p1, p2, c).iter_points())

    if model is Model.INF2:
        # King-move tristance halves under the rotation map, so the region
        # is the pullback of the grid2 family at doubled diameter.
        image = _two_center_octagon(phi(p1), phi(p2), 2 * c)
        pts = [phi_inverse(p) for p in image.iter_points()
               if sum(p) % 2 == 0]
        return Region.of(model, pts)

    if model is Model.HEX2:
        xlo, xhi = min(p1[0], p2[0]), max(p1[0], p2[0])
        ylo, yhi = min(p1[1], p2[1]), max(p1[1], p2[1])
        dlo = min(p1[0] - p1[1], p2[0] - p2[1])
        dhi = max(p1[0] - p1[1], p2[0] - p2[1])
        pts = [(x, y)
               for x in range(xlo - c, xhi + c + 1)
               for y in range(ylo - c, yhi + c + 1)
               if dlo - c <= x - y <= dhi + c]
        return Region.of(model, pts)

    forms = ((1, 0, 0), (0, 1, 0), (0, 0, 1),
             (1, 1, 0), (1, 0, 1), (0, 1, 1),
             (1, -1, 0), (1, 0, -1), (0, 1, -1),
             (1, 1, 1), (1, -1, -1), (1, -1, 1), (1, 1, -1))
    lo3 = tuple(min(p1[i], p2[i]) for i in range(3))
    hi3 = tuple(max(p1[i], p2[i]) for i in range(3))

    def dot(w, p):
        return w[0] * p[0] + w[1] * p[1] + w[2] * p[2]

    # Each bound composes the coordinatewise extremes of the bounding box,
    # so a mixed-sign form like x - y - z dips to x_min - y_max - z_max.
    lims = [(sum(w[i] * (lo3[i] if w[i] > 0 else hi3[i]) for i in range(3)) - c,
             sum(w[i] * (hi3[i] if w[i] > 0 else lo3[i]) for i in range(3)) + c)
            for w in forms]
    pts = []
    for x in range(lims[0][0], lims[0][1] + 1):
        for y in range(lims[1][0], lims[1][1] + 1):
            for z in range(lims[2][0], lims[2][1] + 1):
                p = (x, y, z)
                if all(lo <= dot(w, p) <= hi
                       for w, (lo, hi) in zip(forms[3:], lims[3:])):
                    pts.append(p)
    return Region.of(model, pts)


def centered_quadristance_anticode_3pt(z1: Point2, z2: Point2, z3: Point2,
                                       d: int) -> Region:
    """Largest ``grid2`` set whose quadruples through the three centers stay
    within ``d``: a union of three octagons, one per way of bracketing the
    centers into two pairs.

    Empty when ``d`` is below the centers' tristance.
    """
    centers = (tuple(z1), tuple(z2), tuple(z3))
    if len(set(centers)) != 3:
        raise DomainError("the three centers must be distinct")
    base = tristance(Model.GRID2, *centers)
    if d < base:
        return Region.of(Model.GRID2, ())
    c = d - base

    pts: set[Point2] = set()
    pairs = ((0, 1), (0, 2), (1, 2))
    for pa, pb in combinations(pairs, 2):
        ax = max(min(centers[pa[0]][0], centers[pa[1]][0]),
                 min(centers[pb[0]][0], centers[pb[1]][0]))
        bx = min(max(centers[pa[0]][0], centers[pa[1]][0]),
                 max(centers[pb[0]][0], centers[pb[1]][0]))
        ay = max(min(centers[pa[0]][1], centers[pa[1]][1]),
                 min(centers[pb[0]][1], centers[pb[1]][1]))
        by = min(max(centers[pa[0]][1], centers[pa[1]][1]),
                 max(centers[pb[0]][1], centers[pb[1]][1]))
        octo = OctagonBounds(
            x_lo=ax - c, y_lo=ay - c,
            sum_lo=ax + ay - c, diff_lo=ax - by - c,
            x_hi=bx + c, y_hi=by + c,
            sum_hi=bx + by + c, diff_hi=bx - ay + c,
        )
        pts.update(octo.iter_points())
    return Region.of(Model.GRID2, pts)


# ---------------------------------------------------------------------------
# Optimal families
# ---------------------------------------------------------------------------

def optimal_size_formula(model: Model, kind: AnticodeKind, d: int) -> int | None:
    """Closed-form size of an optimal anticode; ``None`` where no single
    closed form is known (3-D tristance goes through the shape volume)."""
    if kind is AnticodeKind.DISTANCE:
        if model is Model.GRID2:
            return d * d // 2 + d + 1 if d % 2 == 0 else (d + 1) ** 2 // 2
        if model is Model.INF2:
            return (d + 1) ** 2
        if model is Model.HEX2:
            return 1 + 3 * d * (d + 2) // 4 if d % 2 == 0 else 3 * (d + 1) ** 2 // 4
        return None
    if kind is AnticodeKind.TRISTANCE:
        if model is Model.GRID2:
            return -(-2 * (d + 1) * (d + 2) // 7)
        if model is Model.INF2:
            return -(-(4 * d * d + 8 * d + 2) // 7)
        if model is Model.HEX2:
            return -(-(d + 1) * (d + 2) // 3)
        return None
    return -(-(d + 1) * (d + 3) // 6)


def _grid2_tristance_rows(d: int) -> list[Octagon]:
    q, r = divmod(d, 7)
    if r == 0:
        rows = [(4 * q, 4 * q, q)]
    elif r == 1:
        rows = [((4 * d + 3) // 7, (4 * d - 4) // 7, (d - 1) // 7)]
    elif r == 2:
        rows = [((4 * d - 1) // 7, (4 * d - 1) // 7, (d - 2) // 7)]
    elif r == 3:
        rows = [((4 * d + 2) // 7, (4 * d - 5) // 7, (d - 3) // 7)]
    elif r == 4:
        rows = [((4 * d - 2) // 7, (4 * d - 2) // 7, (d - 4) // 7)]
    elif r == 5:
        rows = [((4 * d + 1) // 7, (4 * d + 1) // 7, (d + 2) // 7),
                ((4 * d + 1) // 7, (4 * d - 6) // 7, (d - 5) // 7)]
    else:
        rows = [((4 * d - 3) // 7, (4 * d - 3) // 7, (d - 6) // 7),
                ((4 * d + 4) // 7, (4 * d - 3) // 7, (d + 1) // 7)]
    return [Octagon(a, b, c, c, c, c) for a, b, c in rows]


def _inf2_tristance_rows(d: int) -> list[Octagon]:
    r = d % 7
    if r == 0:
        a, c0, c1 = 6 * d // 7, 2 * d // 7, 2 * d // 7
    elif r == 1:
        a, c0, c1 = (6 * d + 1) // 7, (2 * d - 2) // 7, (2 * d + 5) // 7
    elif r == 2:
        a, c0, c1 = (6 * d + 2) // 7, (2 * d + 3) // 7, (2 * d + 3) // 7
    elif r == 3:
        a, c0, c1 = (6 * d - 4) // 7, (2 * d - 6) // 7, (2 * d - 6) // 7
    elif r == 4:
        a, c0, c1 = (6 * d - 3) // 7, (2 * d - 8) // 7, (2 * d - 1) // 7
    elif r == 5:
        a, c0, c1 = (6 * d - 2) // 7, (2 * d - 3) // 7, (2 * d - 3) // 7
    else:
        a, c0, c1 = (6 * d - 1) // 7, (2 * d - 5) // 7, (2 * d + 2) // 7
    return [Octagon(a, a, c0, c1, c0, c1)]


def _hex2_tristance_rows(d: int) -> list[Hexagon]:
    r = d % 3
    if r == 0:
        rows = [(2 * d // 3, 2 * d // 3, d // 3)]
    elif r == 1:
        rows = [((2 * d + 1) // 3, (2 * d + 1) // 3, (d + 2) // 3),
                ((2 * d + 1) // 3, (2 * d - 2) // 3, (d - 1) // 3)]
    else:
        rows = [((2 * d - 1) // 3, (2 * d - 1) // 3, (d - 2) // 3),
                ((2 * d + 2) // 3, (2 * d - 1) // 3, (d + 1) // 3)]
    return [Hexagon(a, b, c, c) for a, b, c in rows]


def _grid3_tristance_rows(d: int) -> list[Icosihexahedron]:
    r = d % 3
    if r == 0:
        base = (d // 3, d // 3, d // 3)
        mu = (d + 1) - sqrt((2 / 3) * (d + 1) * (d + 2))
    elif r == 1:
        base = ((d + 2) // 3, (d - 1) // 3, (d - 1) // 3)
        mu = (d + 1) - sqrt((2 / 3) * (d + 1) * (d + 2) + 1 / 3)
    else:
        base = ((d + 1) // 3, (d + 1) // 3, (d - 2) // 3)
        mu = (d + 1) - sqrt((2 / 3) * (d + 1) * (d + 2) + 1 / 3)
    candidates = sorted({max(0, min(e, min(base)))
                         for e in (floor(mu), ceil(mu))})
    best_e = max(candidates,
                 key=lambda e: (icosihexahedron_volume(
                     Icosihexahedron.uniform(*(x + e for x in base), e, 2 * e)),
                     -e))
    return [Icosihexahedron.uniform(*(x + best_e for x in base),
                                    best_e, 2 * best_e)]


def best_quad_octagons(d: int) -> list[QuadOctagon]:
    """All maximizers of the equally-cut-octagon size at quadristance
    diameter ``d``, largest parameters first."""
    best: list[QuadOctagon] = []
    best_size = -1
    for c in range(d // 2 + 1):
        for b in range(2 * c, d + 2 * c + 1):
            a = d + 2 * c - 2 * b
            if a < b:
                continue
            q = QuadOctagon(a, b, c)
            size = quad_octagon_size(q)
            if size > best_size:
                best, best_size = [q], size
            elif size == best_size:
                best.append(q)
    return sorted(best, key=lambda q: (q.a, q.b, q.c), reverse=True)


def _sphere_params(model: Model, d: int) -> dict:
    if model is Model.GRID2:
        center = (Fraction(0),) * 2 if d % 2 == 0 else ODD_SPHERE_OFFSETS[0]
        return {"family": "l1-ball", "center": [str(c) for c in center],
                "radius": str(Fraction(d, 2))}
    if model is Model.INF2:
        return {"family": "square", "side": d + 1}
    center = ((Fraction(0),) * 2 if d % 2 == 0 else HEX_ODD_OFFSETS[0])
    return {"family": "hex-ball", "center": [str(c) for c in center],
            "radius": str(Fraction(d + (d % 2), 2))}


def _solution(model: Model, kind: AnticodeKind, shape) -> OptimalAnticode:
    if isinstance(shape, Octagon):
        params = {"a": shape.a, "b": shape.b, "c0": shape.c0, "c1": shape.c1,
                  "c2": shape.c2, "c3": shape.c3}
    elif isinstance(shape, Hexagon):
        params = {"a": shape.a, "b": shape.b, "c1": shape.c1, "c3": shape.c3}
    elif isinstance(shape, Icosihexahedron):
        e, theta = shape.is_uniform()
        params = {"a": shape.a, "b": shape.b, "c": shape.c,
                  "e": e, "theta": theta}
    else:
        params = {"a": shape.a, "b": shape.b, "c": shape.c}
    exactness = Exactness.EXACT
    if isinstance(shape, Icosihexahedron):
        exactness = Exactness.CONJECTURAL
    if isinstance(shape, QuadOctagon):
        exactness = Exactness.LOWER_BOUND
    return OptimalAnticode(
        region=Region.of(model, shape_enumerate(shape)),
        shape=shape, params=params, exactness=exactness)


def optimal_anticode_solutions(spec: AnticodeSpec) -> list[OptimalAnticode]:
    """Every listed optimal parameter set for the requested family, canonical first."""
    spec.validate()
    model, kind, d = spec.model, spec.kind, spec.diameter

    if kind is AnticodeKind.DISTANCE:
        region = optimal_distance_anticode(model, d)
        return [OptimalAnticode(region=region, shape=None,
                                params=_sphere_params(model, d),
                                exactness=Exactness.EXACT)]

    if kind is AnticodeKind.TRISTANCE:
        rows = {
            Model.GRID2: _grid2_tristance_rows,
            Model.INF2: _inf2_tristance_rows,
            Model.HEX2: _hex2_tristance_rows,
            Model.GRID3: _grid3_tristance_rows,
        }[model](d)
        return [_solution(model, kind, shape) for shape in rows]

    return [_solution(model, kind, shape) for shape in best_quad_octagons(d)]


def optimal_anticode(spec: AnticodeSpec) -> OptimalAnticode:
    """The canonical optimal anticode for the requested family (first solution)."""
    return optimal_anticode_solutions(spec)[0]


# ---------------------------------------------------------------------------
# Validity checking
# ---------------------------------------------------------------------------

def is_anticode(region: Region, kind: AnticodeKind, d: int,
                chunk: int = 100_000):
    """Whether every tuple of the region has dispersion at most ``d``.

    Returns ``(True, None)`` or ``(False, (points, value))`` with one
    violating tuple.
    """
    if kind is AnticodeKind.QUADRISTANCE and region.model is not Model.GRID2:
        raise DomainError("quadristance anticodes exist for grid2 only")
    r = kind.tuple_size
    pts = region.points
    n = len(pts)
    if n == 0:
        return True, None
    if n < r:
        val = dispersion_diameter(region.model, r, pts)
        if val <= d:
            return True, None
        padded = (list(pts) * r)[:r]
        return False, (tuple(padded), val)
    arr = np.array(pts, dtype=np.int64)
    combo = combinations(range(n), r)
    while True:
        block = list(islice(combo, chunk))
        if not block:
            return True, None
        idx = np.array(block, dtype=np.intp)
        tuples = arr[idx]
        if r == 2:
            diff = tuples[:, 0] - tuples[:, 1]
            if region.model in (Model.GRID2, Model.GRID3):
                vals = np.abs(diff).sum(axis=1)
            elif region.model is Model.INF2:
                vals = np.abs(diff).max(axis=1)
            else:
                u, v = diff[:, 0], diff[:, 1]
                z = np.zeros_like(u)
                vals = (np.maximum(np.maximum(u, v), z)
                        - np.minimum(np.minimum(u, v), z))
        elif r == 3:
            vals = tristance_bulk(region.model, tuples)
        else:
            vals = quadristance_bulk(tuples)
        bad = np.nonzero(vals > d)[0]
        if bad.size:
            j = int(bad[0])
            witness = tuple(tuple(int(x) for x in p) for p in tuples[j])
            return False, (witness, int(vals[j]))
