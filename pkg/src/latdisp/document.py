"""Wire format for regions: a small JSON document with a fixed field order.

The same serializer backs the CLI and the HTTP server so identical queries
yield byte-identical documents.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .anticodes import AnticodeKind, Exactness, OptimalAnticode, Region
from .apps import GobanState, go_locus
from .lattice import DomainError, Model, parse_points

__all__ = ["RegionDocument", "document_from_json", "document_to_json",
           "locus_document"]


@dataclass(frozen=True)
class RegionDocument:
    model: str
    kind: str
    diameter: int
    size: int
    points: tuple[tuple[int, ...], ...]
    exactness: str
    shape: dict | None = None

    def __post_init__(self):
        Model.parse(self.model)
        AnticodeKind.parse(self.kind)
        Exactness(self.exactness)
        if self.diameter < 0:
            raise DomainError("diameter must be nonnegative")
        pts = tuple(tuple(int(c) for c in p) for p in self.points)
        object.__setattr__(self, "points", pts)
        if self.size != len(pts):
            raise DomainError("document size differs from its point count")
        if list(pts) != sorted(pts):
            raise DomainError("document points must be sorted")

    @classmethod
    def from_region(cls, region: Region, kind: AnticodeKind, diameter: int,
                    exactness: Exactness = Exactness.EXACT,
                    shape: dict | None = None) -> "RegionDocument":
        return cls(model=region.model.value, kind=kind.value,
                   diameter=diameter, size=region.size, points=region.points,
                   exactness=exactness.value, shape=shape)

    @classmethod
    def from_solution(cls, solution: OptimalAnticode, kind: AnticodeKind,
                      diameter: int) -> "RegionDocument":
        return cls.from_region(solution.region, kind, diameter,
                               exactness=solution.exactness,
                               shape=dict(solution.params))

    def region(self) -> Region:
        return Region(model=Model.parse(self.model), points=self.points)


def document_to_json(doc: RegionDocument) -> str:
    payload = {
        "model": doc.model,
        "kind": doc.kind,
        "diameter": doc.diameter,
        "size": doc.size,
        "exactness": doc.exactness,
    }
    if doc.shape is not None:
        payload["shape"] = doc.shape
    payload["points"] = [list(p) for p in doc.points]
    return json.dumps(payload, indent=2) + "\n"


def locus_document(stones_text: str, k: int, board: int) -> RegionDocument:
    """Go-locus query (stones as a semicolon list) to a region document."""
    stones = (parse_points(Model.GRID2, stones_text)
              if stones_text.strip() else ())
    state = GobanState(stones=stones, k=k, board_size=board)
    region = go_locus(state)
    if len(state.stones) == 3:
        kind, d = AnticodeKind.QUADRISTANCE, k + 3
    else:
        kind, d = AnticodeKind.TRISTANCE, k + 2
    return RegionDocument.from_region(region, kind, d,
                                      exactness=Exactness.EXACT)


def document_from_json(text: str) -> RegionDocument:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"invalid document JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise DomainError("document JSON must be an object")
    try:
        return RegionDocument(
            model=payload["model"], kind=payload["kind"],
            diameter=payload["diameter"], size=payload["size"],
            points=tuple(tuple(p) for p in payload["points"]),
            exactness=payload["exactness"],
            shape=payload.get("shape"))
    except KeyError as exc:
        raise DomainError(f"document is missing field {exc}") from exc
