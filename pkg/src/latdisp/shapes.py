"""Truncated-box lattice shapes: membership, enumeration, sizes, diameters.

Three families cover everything the anticode constructions need:

* octagons in the plane, as a box ``[0,a] x [0,b]`` with four corner cuts
  (``Octagon``) or as raw bounds on ``x``, ``y``, ``x+y``, ``x-y``
  (``OctagonBounds``);
* hexagons, the sub-family with no cuts on the ``x+y`` diagonal;
* icosihexahedra, a 3-D box with 12 edge cuts and 8 vertex cuts, 26 faces
  in total.

Every truncation is encoded the same way.  A cut sits at the box corner or
edge selected by a sign vector ``s`` (``+1`` picks the far side of an axis,
``-1`` the zero side) and removes the points violating

    sum_i s_i * p_i  <=  sum_{s_i > 0} extent_i  -  cut.

Closed-form sizes and diameters are given for normalized shapes; every
formula is cross-checked against plain enumeration in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator, Mapping, Sequence

from .lattice import DomainError, Point, Point2, Point3

__all__ = [
    "Octagon",
    "OctagonBounds",
    "Hexagon",
    "Icosihexahedron",
    "QuadOctagon",
    "shape_contains",
    "shape_enumerate",
    "octagon_size",
    "octagon_bounds",
    "octagon_corner_form",
    "octagon_normalize",
    "octagon_intersect",
    "octagon_tristance_diameter",
    "octagon_infinity_diameter",
    "hexagon_normalize",
    "hexagon_size_and_diameter",
    "icosihexahedron_tighten",
    "icosihexahedron_diameter",
    "icosihexahedron_volume",
    "quad_octagon_size",
    "quad_octagon_diameter",
    "quad_octagon_witness",
]


# ---------------------------------------------------------------------------
# Planar octagons
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OctagonBounds:
    """Intersection of eight half-planes bounding x, y, x+y, and x-y."""

    x_lo: int
    y_lo: int
    sum_lo: int
    diff_lo: int
    x_hi: int
    y_hi: int
    sum_hi: int
    diff_hi: int

    def contains(self, p: Point2) -> bool:
        x, y = p
        return (self.x_lo <= x <= self.x_hi
                and self.y_lo <= y <= self.y_hi
                and self.sum_lo <= x + y <= self.sum_hi
                and self.diff_lo <= x - y <= self.diff_hi)

    def iter_points(self) -> Iterator[Point2]:
        for x in range(self.x_lo, self.x_hi + 1):
            for y in range(self.y_lo, self.y_hi + 1):
                if (self.sum_lo <= x + y <= self.sum_hi
                        and self.diff_lo <= x - y <= self.diff_hi):
                    yield (x, y)


@dataclass(frozen=True)
class Octagon:
    """Box ``[0,a] x [0,b]`` with diagonal cuts c0..c3 at its four corners.

    ``c0`` cuts the corner at (0,0), ``c1`` at (a,0), ``c2`` at (a,b), and
    ``c3`` at (0,b).
    """

    a: int
    b: int
    c0: int = 0
    c1: int = 0
    c2: int = 0
    c3: int = 0

    @property
    def cuts(self) -> tuple[int, int, int, int]:
        return (self.c0, self.c1, self.c2, self.c3)

    def contains(self, p: Point2) -> bool:
        return octagon_bounds(self).contains(p)

    def iter_points(self) -> Iterator[Point2]:
        return octagon_bounds(self).iter_points()


def octagon_bounds(o: Octagon, origin: Point2 = (0, 0)) -> OctagonBounds:
    """The eight-bound form of a corner-cut octagon anchored at ``origin``."""
    ox, oy = origin
    return OctagonBounds(
        x_lo=ox, y_lo=oy,
        sum_lo=ox + oy + o.c0,
        diff_lo=ox - oy + o.c3 - o.b,
        x_hi=ox + o.a, y_hi=oy + o.b,
        sum_hi=ox + oy + o.a + o.b - o.c2,
        diff_hi=ox - oy + o.a - o.c1,
    )


def octagon_corner_form(ob: OctagonBounds) -> tuple[Octagon, Point2]:
    """Translate an eight-bound octagon to corner form; returns (shape, origin).

    Assumes the bounds are attained (see :func:`octagon_normalize`).
    """
    a = ob.x_hi - ob.x_lo
    b = ob.y_hi - ob.y_lo
    return Octagon(
        a=a, b=b,
        c0=ob.sum_lo - ob.x_lo - ob.y_lo,
        c1=(ob.x_hi - ob.y_lo) - ob.diff_hi,
        c2=(ob.x_hi + ob.y_hi) - ob.sum_hi,
        c3=ob.diff_lo - (ob.x_lo - ob.y_hi),
    ), (ob.x_lo, ob.y_lo)


def octagon_normalize(ob: OctagonBounds) -> OctagonBounds | None:
    """Tighten every bound until attained; ``None`` for the empty octagon."""
    pts = list(ob.iter_points())
    if not pts:
        return None
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    sums = [x + y for x, y in pts]
    diffs = [x - y for x, y in pts]
    return OctagonBounds(min(xs), min(ys), min(sums), min(diffs),
                         max(xs), max(ys), max(sums), max(diffs))


def octagon_intersect(o1: OctagonBounds, o2: OctagonBounds) -> OctagonBounds:
    """The octagon whose points are exactly those in both inputs."""
    return OctagonBounds(
        x_lo=max(o1.x_lo, o2.x_lo), y_lo=max(o1.y_lo, o2.y_lo),
        sum_lo=max(o1.sum_lo, o2.sum_lo), diff_lo=max(o1.diff_lo, o2.diff_lo),
        x_hi=min(o1.x_hi, o2.x_hi), y_hi=min(o1.y_hi, o2.y_hi),
        sum_hi=min(o1.sum_hi, o2.sum_hi), diff_hi=min(o1.diff_hi, o2.diff_hi),
    )


def _corner_cuts_overlap(o: Octagon) -> bool:
    return (o.c0 + o.c1 > o.a or o.c2 + o.c3 > o.a
            or o.c0 + o.c3 > o.b or o.c1 + o.c2 > o.b
            or min(o.cuts) < 0)


def octagon_size(o: Octagon | OctagonBounds) -> int:
    """Point count of an octagon.

    Takes the closed form ``(a+1)(b+1) - sum c_i(c_i+1)/2`` after
    normalizing; falls back to counting when the four cuts overlap.
    """
    ob = o if isinstance(o, OctagonBounds) else octagon_bounds(o)
    norm = octagon_normalize(ob)
    if norm is None:
        return 0
    corner, _ = octagon_corner_form(norm)
    if _corner_cuts_overlap(corner):
        return sum(1 for _ in norm.iter_points())
    return ((corner.a + 1) * (corner.b + 1)
            - sum(c * (c + 1) // 2 for c in corner.cuts))


def _normalized_corner(o: Octagon | OctagonBounds) -> Octagon:
    ob = o if isinstance(o, OctagonBounds) else octagon_bounds(o)
    norm = octagon_normalize(ob)
    if norm is None:
        raise DomainError("empty octagon has no diameter")
    corner, _ = octagon_corner_form(norm)
    return corner


def octagon_tristance_diameter(o: Octagon | OctagonBounds) -> int:
    """Largest three-point dispersion within the octagon, for ``grid2``."""
    c = _normalized_corner(o)
    return c.a + c.b - min(c.cuts)


def octagon_infinity_diameter(o: Octagon | OctagonBounds) -> int:
    """Largest three-point dispersion within the octagon, for ``inf2``."""
    c = _normalized_corner(o)
    m = min(c.a + c.c0 + c.c1, c.a + c.c2 + c.c3,
            c.b + c.c0 + c.c3, c.b + c.c1 + c.c2)
    return c.a + c.b - m // 2


# ---------------------------------------------------------------------------
# Hexagons on the triangular lattice
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Hexagon:
    """Box ``[0,a] x [0,b]`` with cuts on the two ``x - y`` corners only.

    Membership: ``0 <= x <= a``, ``0 <= y <= b``,
    ``c3 - b <= x - y <= a - c1``.
    """

    a: int
    b: int
    c1: int = 0
    c3: int = 0

    def contains(self, p: Point2) -> bool:
        x, y = p
        return (0 <= x <= self.a and 0 <= y <= self.b
                and self.c3 - self.b <= x - y <= self.a - self.c1)

    def iter_points(self) -> Iterator[Point2]:
        for x in range(self.a + 1):
            for y in range(self.b + 1):
                if self.c3 - self.b <= x - y <= self.a - self.c1:
                    yield (x, y)


def hexagon_normalize(h: Hexagon) -> Hexagon:
    """Tighten bounds until attained, yielding cuts within ``[0, min(a,b)]``."""
    pts = list(h.iter_points())
    if not pts:
        raise DomainError("empty hexagon")
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    diffs = [x - y for x, y in pts]
    a = max(xs) - min(xs)
    b = max(ys) - min(ys)
    return Hexagon(a=a, b=b,
                   c1=(max(xs) - min(ys)) - max(diffs),
                   c3=min(diffs) - (min(xs) - max(ys)))


def hexagon_size_and_diameter(h: Hexagon) -> tuple[int, int]:
    """Point count and largest ``hex2`` three-point dispersion."""
    n = hexagon_normalize(h)
    size = ((n.a + 1) * (n.b + 1)
            - n.c1 * (n.c1 + 1) // 2 - n.c3 * (n.c3 + 1) // 2)
    return size, n.a + n.b - min(n.c1, n.c3)


# ---------------------------------------------------------------------------
# Icosihexahedra in 3-D
# ---------------------------------------------------------------------------

AXIS_PAIRS = ((0, 1), (0, 2), (1, 2))
SIGNS2 = tuple(product((1, -1), repeat=2))
SIGNS3 = tuple(product((1, -1), repeat=3))

EdgeKey = tuple[tuple[int, int], tuple[int, int]]


@dataclass(frozen=True)
class Icosihexahedron:
    """Box ``[0,a] x [0,b] x [0,c]`` with 12 edge cuts and 8 vertex cuts.

    ``edge_cuts`` maps ``(axis_pair, signs)`` to the cut depth at the box
    edge where each ``+1`` axis is at its far side and each ``-1`` axis at
    zero; ``vertex_cuts`` maps sign triples to corner cut depths.
    """

    a: int
    b: int
    c: int
    edge_cuts: tuple[tuple[EdgeKey, int], ...]
    vertex_cuts: tuple[tuple[tuple[int, int, int], int], ...]

    @classmethod
    def uniform(cls, a: int, b: int, c: int, e: int, theta: int) -> "Icosihexahedron":
        return cls(
            a=a, b=b, c=c,
            edge_cuts=tuple(((pair, s), e) for pair in AXIS_PAIRS for s in SIGNS2),
            vertex_cuts=tuple((s, theta) for s in SIGNS3),
        )

    @classmethod
    def from_maps(cls, a: int, b: int, c: int,
                  edges: Mapping[EdgeKey, int],
                  vertices: Mapping[tuple[int, int, int], int]) -> "Icosihexahedron":
        return cls(a=a, b=b, c=c,
                   edge_cuts=tuple(sorted(edges.items())),
                   vertex_cuts=tuple(sorted(vertices.items())))

    @property
    def extents(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def edge_map(self) -> dict[EdgeKey, int]:
        return dict(self.edge_cuts)

    def vertex_map(self) -> dict[tuple[int, int, int], int]:
        return dict(self.vertex_cuts)

    def is_uniform(self) -> tuple[int, int] | None:
        """The common ``(e, theta)`` when all cuts agree, else ``None``."""
        es = {v for _, v in self.edge_cuts}
        ts = {v for _, v in self.vertex_cuts}
        if len(es) == 1 and len(ts) == 1:
            return es.pop(), ts.pop()
        return None

    def contains(self, p: Point3) -> bool:
        ext = self.extents
        if not all(0 <= p[i] <= ext[i] for i in range(3)):
            return False
        for (pair, signs), cut in self.edge_cuts:
            lhs = sum(s * p[i] for i, s in zip(pair, signs))
            rhs = sum(ext[i] for i, s in zip(pair, signs) if s > 0) - cut
            if lhs > rhs:
                return False
        for signs, cut in self.vertex_cuts:
            lhs = sum(s * p[i] for i, s in zip(range(3), signs))
            rhs = sum(ext[i] for i, s in zip(range(3), signs) if s > 0) - cut
            if lhs > rhs:
                return False
        return True

    def iter_points(self) -> Iterator[Point3]:
        for p in product(range(self.a + 1), range(self.b + 1), range(self.c + 1)):
            if self.contains(p):
                yield p


def icosihexahedron_tighten(shape: Icosihexahedron) -> Icosihexahedron:
    """Translate and deepen cuts until all 26 bounds are attained.

    The point set never changes; tightening twice is a no-op.  Raises on an
    empty shape.
    """
    pts = list(shape.iter_points())
    if not pts:
        raise DomainError("empty icosihexahedron")
    lows = [min(p[i] for p in pts) for i in range(3)]
    highs = [max(p[i] for p in pts) for i in range(3)]
    shifted = [tuple(p[i] - lows[i] for i in range(3)) for p in pts]
    ext = [highs[i] - lows[i] for i in range(3)]

    def attained_cut(axes: Sequence[int], signs: Sequence[int]) -> int:
        top = max(sum(s * p[i] for i, s in zip(axes, signs)) for p in shifted)
        return sum(ext[i] for i, s in zip(axes, signs) if s > 0) - top

    edges = {(pair, s): attained_cut(pair, s)
             for pair in AXIS_PAIRS for s in SIGNS2}
    vertices = {s: attained_cut((0, 1, 2), s) for s in SIGNS3}
    return Icosihexahedron.from_maps(ext[0], ext[1], ext[2], edges, vertices)


def _flip(signs: Sequence[int], positions: Sequence[int]) -> tuple[int, ...]:
    return tuple(-s if i in positions else s for i, s in enumerate(signs))


def icosihexahedron_diameter(shape: Icosihexahedron) -> int:
    """Largest ``grid3`` three-point dispersion within the shape.

    The value is ``a + b + c`` minus the best saving, which comes either
    from three edge cuts that together touch all six faces or from a vertex
    cut paired with its cheapest diagonally opposite edge cut.
    """
    tight = icosihexahedron_tighten(shape)
    e = tight.edge_map()
    v = tight.vertex_map()

    spanning = min(
        e[((0, 1), (sx, sy))] + e[((0, 2), (-sx, sz))] + e[((1, 2), (-sy, -sz))]
        for sx, sy, sz in SIGNS3
    )
    opposite = min(
        min(e[((0, 1), (-sx, -sy))], e[((0, 2), (-sx, -sz))],
            e[((1, 2), (-sy, -sz))]) + v[(sx, sy, sz)]
        for sx, sy, sz in SIGNS3
    )
    return tight.a + tight.b + tight.c - min(spanning, opposite)


def _uniform_volume_formula(a: int, b: int, c: int, e: int, theta: int) -> int:
    base = (a + 1) * (b + 1) * (c + 1) - 2 * e * (e + 1) * (a + b + c + 3)
    tail = Fraction(4, 3) * theta * (
        3 * theta * (6 * e - 1) - 9 * e * (3 * e - 1)
        - (2 * theta + 1) * (2 * theta - 1))
    total = base + 24 * e ** 3 + tail
    assert total.denominator == 1
    return int(total)


def icosihexahedron_volume(shape: Icosihexahedron, *,
                           with_method: bool = False) -> int | tuple[int, bool]:
    """Point count; closed form for uniform cuts in the valid range.

    The closed form needs uniform cuts with ``3e/2 <= theta <= 2e`` and
    ``2e <= min(a, b, c)``; anything else is counted by enumeration.  With
    ``with_method=True`` the result carries a flag telling which path ran.
    """
    uni = shape.is_uniform()
    if uni is not None:
        e, theta = uni
        if 3 * e <= 2 * theta and theta <= 2 * e and 2 * e <= min(shape.extents):
            count = _uniform_volume_formula(shape.a, shape.b, shape.c, e, theta)
            return (count, True) if with_method else count
    count = sum(1 for _ in shape.iter_points())
    return (count, False) if with_method else count


# ---------------------------------------------------------------------------
# Equally truncated octagons, used for four-point dispersion
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QuadOctagon:
    """Octagon with one cut depth ``c`` on all four corners and ``a >= b``."""

    a: int
    b: int
    c: int = 0

    def validate(self) -> None:
        if not (self.a >= self.b >= 2 * self.c >= 0):
            raise DomainError(
                f"need a >= b >= 2c >= 0, got a={self.a} b={self.b} c={self.c}")

    def contains(self, p: Point2) -> bool:
        x, y = p
        return (0 <= x <= self.a and 0 <= y <= self.b
                and self.c <= x + y <= self.a + self.b - self.c
                and self.c - self.b <= x - y <= self.a - self.c)

    def iter_points(self) -> Iterator[Point2]:
        for x in range(self.a + 1):
            for y in range(self.b + 1):
                if self.contains((x, y)):
                    yield (x, y)


def quad_octagon_size(q: QuadOctagon) -> int:
    q.validate()
    return (q.a + 1) * (q.b + 1) - 2 * q.c * (q.c + 1)


def quad_octagon_diameter(q: QuadOctagon) -> int:
    """Largest ``grid2`` four-point dispersion within the shape."""
    q.validate()
    return q.a + 2 * q.b - 2 * q.c


def quad_octagon_witness(q: QuadOctagon) -> tuple[Point2, Point2, Point2, Point2]:
    """A four-point tuple attaining the diameter."""
    q.validate()
    return ((0, q.b - q.c), (q.c, 0), (q.a - q.c, q.b), (q.a, q.c))


# ---------------------------------------------------------------------------
# Generic dispatch
# ---------------------------------------------------------------------------

Shape = Octagon | OctagonBounds | Hexagon | Icosihexahedron | QuadOctagon


def shape_contains(shape: Shape, p: Point) -> bool:
    return shape.contains(p)


def shape_enumerate(shape: Shape) -> list[Point]:
    """All lattice points of the shape, in lexicographic order."""
    return sorted(shape.iter_points())
