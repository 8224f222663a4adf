"""Region document construction, validation, and JSON round-trips."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from latdisp.anticodes import (
    AnticodeKind,
    AnticodeSpec,
    Exactness,
    Region,
    optimal_anticode,
)
from latdisp.document import (
    RegionDocument,
    document_from_json,
    document_to_json,
    locus_document,
)
from latdisp.lattice import DomainError, Model


def sample_documents():
    docs = []
    for model, kind, d in [(Model.GRID2, AnticodeKind.TRISTANCE, 7),
                           (Model.INF2, AnticodeKind.TRISTANCE, 4),
                           (Model.HEX2, AnticodeKind.TRISTANCE, 5),
                           (Model.GRID3, AnticodeKind.TRISTANCE, 4),
                           (Model.GRID2, AnticodeKind.QUADRISTANCE, 6),
                           (Model.GRID2, AnticodeKind.DISTANCE, 3)]:
        spec = AnticodeSpec(model, kind, d)
        docs.append(RegionDocument.from_solution(optimal_anticode(spec),
                                                 kind, d))
    docs.append(locus_document("9,9", 2, 19))
    docs.append(locus_document("", 5, 19))
    docs.append(locus_document("0,0;1,0;0,1", 1, 19))
    return docs


@pytest.mark.parametrize("doc", sample_documents(),
                         ids=lambda d: f"{d.model}-{d.kind}-{d.diameter}")
def test_json_round_trip_is_identity(doc):
    assert document_from_json(document_to_json(doc)) == doc


def test_size_must_match_points():
    with pytest.raises(DomainError):
        RegionDocument(model="grid2", kind="tristance", diameter=2, size=3,
                       points=((0, 0), (1, 0)), exactness="EXACT")


def test_points_must_be_sorted():
    with pytest.raises(DomainError):
        RegionDocument(model="grid2", kind="tristance", diameter=2, size=2,
                       points=((1, 0), (0, 0)), exactness="EXACT")


def test_rejects_unknown_tags():
    good = dict(diameter=1, size=1, points=((0, 0),), exactness="EXACT")
    with pytest.raises(DomainError):
        RegionDocument(model="grid9", kind="tristance", **good)
    with pytest.raises(DomainError):
        RegionDocument(model="grid2", kind="pentistance", **good)
    with pytest.raises(ValueError):
        RegionDocument(model="grid2", kind="tristance", diameter=1, size=1,
                       points=((0, 0),), exactness="MAYBE")


def test_malformed_json_reports_domain_error():
    with pytest.raises(DomainError):
        document_from_json("{not json")
    with pytest.raises(DomainError):
        document_from_json("[1,2,3]")
    with pytest.raises(DomainError):
        document_from_json('{"model": "grid2"}')


def test_document_region_recovers_model_and_points():
    doc = locus_document("9,9", 2, 19)
    region = doc.region()
    assert region.model is Model.GRID2
    assert region.size == 13


def test_locus_document_kinds_and_diameters():
    assert locus_document("9,9", 2, 19).kind == "tristance"
    assert locus_document("9,9", 2, 19).diameter == 4
    three = locus_document("9,9;11,9;10,11", 2, 19)
    assert three.kind == "quadristance"
    assert three.diameter == 5


def test_exactness_tags_follow_family():
    quad = optimal_anticode(
        AnticodeSpec(Model.GRID2, AnticodeKind.QUADRISTANCE, 6))
    doc = RegionDocument.from_solution(quad, AnticodeKind.QUADRISTANCE, 6)
    assert doc.exactness == Exactness.LOWER_BOUND.value
    cube = optimal_anticode(
        AnticodeSpec(Model.GRID3, AnticodeKind.TRISTANCE, 4))
    doc = RegionDocument.from_solution(cube, AnticodeKind.TRISTANCE, 4)
    assert doc.exactness == Exactness.CONJECTURAL.value


@settings(max_examples=50, deadline=None)
@given(st.lists(st.tuples(st.integers(-9, 9), st.integers(-9, 9)),
                min_size=0, max_size=12, unique=True),
       st.integers(0, 9))
def test_round_trip_on_arbitrary_regions(points, d):
    region = Region.of(Model.GRID2, points)
    doc = RegionDocument.from_region(region, AnticodeKind.TRISTANCE, d)
    again = document_from_json(document_to_json(doc))
    assert again == doc
    assert again.points == region.points
