"""Lattice models, point arithmetic, adjacency, and pairwise distances.

Four infinite graphs are supported, all with vertex set Z^2 or Z^3:

* ``grid2`` - Z^2 with unit L1 adjacency (4 neighbours).
* ``inf2``  - Z^2 with unit L-infinity (king move) adjacency (8 neighbours).
* ``hex2``  - the hexagonal lattice A2 in Eisenstein coordinates: the pair
  (x, y) names the complex number x + w*y with w = -1/2 + (sqrt(3)/2)i.
  Each point has 6 neighbours; no floating-point embedding is ever used.
* ``grid3`` - Z^3 with unit L1 adjacency (6 neighbours).

Points are plain tuples of ints, which keeps them hashable, cheap, and
directly usable as dict keys and JSON payloads.
"""

from __future__ import annotations

from enum import Enum
from itertools import permutations, product
from typing import Iterable, Sequence

Point2 = tuple[int, int]
Point3 = tuple[int, int, int]
Point = tuple[int, ...]

__all__ = [
    "DomainError",
    "Model",
    "Point",
    "Point2",
    "Point3",
    "ParityError",
    "hex_distance",
    "neighbors",
    "pairwise_distance",
    "phi",
    "phi_inverse",
    "symmetry_maps",
    "apply_map",
]


class DomainError(ValueError):
    """An argument is outside the mathematical domain of the operation."""


class ParityError(DomainError):
    """A checkerboard-lattice point was required but the coordinate sum is odd."""


class Model(str, Enum):
    GRID2 = "grid2"
    INF2 = "inf2"
    HEX2 = "hex2"
    GRID3 = "grid3"

    @property
    def dim(self) -> int:
        return 3 if self is Model.GRID3 else 2

    @property
    def degree(self) -> int:
        return _DEGREE[self]

    @classmethod
    def parse(cls, tag: str) -> "Model":
        try:
            return cls(tag)
        except ValueError:
            raise DomainError(f"unknown model {tag!r}; expected one of "
                              f"{', '.join(m.value for m in cls)}") from None


_DEGREE = {Model.GRID2: 4, Model.INF2: 8, Model.HEX2: 6, Model.GRID3: 6}

# Neighbour offsets.  For hex2 the six units of the Eisenstein ring are
# +-1, +-w, +-(1+w), i.e. (1,0), (0,1), (1,1) and their negations.
_OFFSETS: dict[Model, tuple[Point, ...]] = {
    Model.GRID2: ((1, 0), (-1, 0), (0, 1), (0, -1)),
    Model.INF2: tuple((dx, dy) for dx in (-1, 0, 1) for dy in (-1, 0, 1)
                      if (dx, dy) != (0, 0)),
    Model.HEX2: ((1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1)),
    Model.GRID3: ((1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0),
                  (0, 0, 1), (0, 0, -1)),
}


def _hmax(a: int, b: int) -> int:
    return max(a, b, 0)


def _hmin(a: int, b: int) -> int:
    return min(a, b, 0)


def hex_distance(p: Point2, q: Point2) -> int:
    """Graph distance on the hexagonal lattice in Eisenstein coordinates."""
    dx = p[0] - q[0]
    dy = p[1] - q[1]
    return _hmax(dx, dy) - _hmin(dx, dy)


def pairwise_distance(model: Model, p: Point, q: Point) -> int:
    """Graph distance between two points of the given model."""
    if model is Model.GRID2:
        return abs(p[0] - q[0]) + abs(p[1] - q[1])
    if model is Model.INF2:
        return max(abs(p[0] - q[0]), abs(p[1] - q[1]))
    if model is Model.HEX2:
        return hex_distance(p, q)  # type: ignore[arg-type]
    return abs(p[0] - q[0]) + abs(p[1] - q[1]) + abs(p[2] - q[2])


def neighbors(model: Model, p: Point) -> set[Point]:
    """The points at graph distance exactly 1 from ``p``."""
    return {tuple(a + b for a, b in zip(p, off)) for off in _OFFSETS[model]}


def neighbor_offsets(model: Model) -> tuple[Point, ...]:
    return _OFFSETS[model]


def phi(p: Point2) -> Point2:
    """Rotate-and-scale bijection (x, y) -> (x - y, x + y).

    Images always lie on the even-coordinate-sum checkerboard sublattice,
    and king-move distance doubles into L1 distance under this map.
    """
    x, y = p
    return (x - y, x + y)


def phi_inverse(p: Point2) -> Point2:
    x, y = p
    if (x + y) % 2:
        raise ParityError(f"{p} has odd coordinate sum; not in the image lattice")
    return ((x + y) // 2, (y - x) // 2)


# ---------------------------------------------------------------------------
# Symmetry groups, used for canonical forms of point sets.
#
# Each symmetry is an integer matrix stored as a tuple of rows; the groups are
# generated once at import time.  grid2/inf2 share the 8 symmetries of the
# square, grid3 has the 48 signed permutations, and hex2 has the 12-element
# dihedral group of A2 generated by the rotation (x, y) -> (x - y, x) and the
# conjugation reflection (x, y) -> (x - y, -y).
# ---------------------------------------------------------------------------

Matrix = tuple[tuple[int, ...], ...]


def apply_map(mat: Matrix, p: Point) -> Point:
    return tuple(sum(m * c for m, c in zip(row, p)) for row in mat)


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def _closure(generators: Iterable[Matrix]) -> tuple[Matrix, ...]:
    seen: set[Matrix] = set(generators)
    frontier = list(seen)
    while frontier:
        nxt = []
        for g in frontier:
            for h in list(seen):
                for prod_ in (_matmul(g, h), _matmul(h, g)):
                    if prod_ not in seen:
                        seen.add(prod_)
                        nxt.append(prod_)
        frontier = nxt
    return tuple(sorted(seen))


def _square_group() -> tuple[Matrix, ...]:
    rot = ((0, -1), (1, 0))
    refl = ((1, 0), (0, -1))
    return _closure([((1, 0), (0, 1)), rot, refl])


def _hex_group() -> tuple[Matrix, ...]:
    rot60 = ((1, -1), (1, 0))   # (x, y) -> (x - y, x)
    conj = ((1, -1), (0, -1))   # (x, y) -> (x - y, -y)
    return _closure([((1, 0), (0, 1)), rot60, conj])


def _cube_group() -> tuple[Matrix, ...]:
    maps = []
    for perm in permutations(range(3)):
        for signs in product((1, -1), repeat=3):
            mat = tuple(
                tuple(signs[i] if j == perm[i] else 0 for j in range(3))
                for i in range(3)
            )
            maps.append(mat)
    return tuple(sorted(maps))


_SYMMETRY: dict[Model, tuple[Matrix, ...]] = {
    Model.GRID2: _square_group(),
    Model.INF2: _square_group(),
    Model.HEX2: _hex_group(),
    Model.GRID3: _cube_group(),
}


def symmetry_maps(model: Model) -> tuple[Matrix, ...]:
    """All linear symmetries of the model lattice fixing the origin."""
    return _SYMMETRY[model]


def parse_point(model: Model, text: str) -> Point:
    """Parse ``"x,y"`` or ``"x,y,z"`` into a point of the model's dimension."""
    parts = [part.strip() for part in text.split(",")]
    try:
        coords = tuple(int(part) for part in parts)
    except ValueError:
        raise DomainError(f"malformed point {text!r}") from None
    if len(coords) != model.dim:
        raise DomainError(
            f"point {text!r} has {len(coords)} coordinates; "
            f"model {model.value} needs {model.dim}")
    return coords


def parse_points(model: Model, text: str) -> list[Point]:
    """Parse a semicolon-separated point list such as ``"0,0;1,2"``."""
    chunks = [chunk for chunk in (part.strip() for part in text.split(";")) if chunk]
    if not chunks:
        raise DomainError("empty point list")
    return [parse_point(model, chunk) for chunk in chunks]


def sort_key(p: Point) -> Point:
    return p


def lex_sorted(points: Iterable[Point]) -> list[Point]:
    return sorted(points)


def bounding_box(points: Sequence[Point]) -> tuple[Point, Point]:
    """Componentwise (mins, maxs) of a nonempty point sequence."""
    if not points:
        raise DomainError("bounding box of an empty point set")
    dim = len(points[0])
    lows = tuple(min(p[i] for p in points) for i in range(dim))
    highs = tuple(max(p[i] for p in points) for i in range(dim))
    return lows, highs
