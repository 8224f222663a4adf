"""Text/SVG renderings and the table-verification report path."""

import csv
import xml.etree.ElementTree as ET

import pytest

from latdisp.anticodes import AnticodeKind, AnticodeSpec, Region, optimal_anticode
from latdisp.lattice import DomainError, Model
from latdisp.render import ascii_region, svg_region
from latdisp.report import verify_table, write_report_files

SAMPLES = [(Model.GRID2, AnticodeKind.TRISTANCE, 6),
           (Model.INF2, AnticodeKind.TRISTANCE, 4),
           (Model.HEX2, AnticodeKind.TRISTANCE, 5),
           (Model.GRID3, AnticodeKind.TRISTANCE, 5),
           (Model.GRID2, AnticodeKind.QUADRISTANCE, 7)]


@pytest.mark.parametrize("model,kind,d", SAMPLES,
                         ids=lambda v: getattr(v, "value", v))
def test_ascii_marks_equal_size(model, kind, d):
    sol = optimal_anticode(AnticodeSpec(model, kind, d))
    assert ascii_region(sol.region).count("#") == sol.region.size


@pytest.mark.parametrize("model,kind,d", SAMPLES,
                         ids=lambda v: getattr(v, "value", v))
def test_svg_marked_circles_equal_size(model, kind, d):
    sol = optimal_anticode(AnticodeSpec(model, kind, d))
    svg = svg_region(sol.region)
    assert svg.count('class="pt"') == sol.region.size
    ET.fromstring(svg)


def test_hex_rows_are_sheared():
    region = Region.of(Model.HEX2, [(x, y) for x in range(3)
                                    for y in range(3)])
    lines = ascii_region(region).splitlines()
    indents = [len(line) - len(line.lstrip()) for line in lines]
    assert indents == [2, 1, 0]


def test_grid3_renders_one_block_per_layer():
    region = Region.of(Model.GRID3, [(0, 0, 0), (1, 0, 0), (0, 0, 2)])
    art = ascii_region(region)
    assert art.count("z=") == 2
    assert art.count("#") == 3


def test_empty_region_renders():
    empty = Region(model=Model.GRID2, points=())
    assert ascii_region(empty) == "(empty)"
    assert svg_region(empty).count('class="pt"') == 0


@pytest.mark.parametrize("table,dmax", [(1, 10), (2, 10), (3, 10), (4, 8),
                                        (5, 10)])
def test_tables_verify(table, dmax):
    rows = verify_table(table, dmax)
    assert len(rows) == dmax
    assert all(row.ok for row in rows)
    assert all("PASS" in row.line() for row in rows)
    capped = [row for row in rows if row.search_size is not None]
    assert capped and all(row.search_size == row.formula_size
                          for row in capped)


def test_verify_table_rejects_bad_arguments():
    with pytest.raises(DomainError):
        verify_table(6, 5)
    with pytest.raises(DomainError):
        verify_table(1, 0)


def test_report_files_written(tmp_path):
    rows = verify_table(3, 8)
    csv_path, png_path = write_report_files(3, rows, tmp_path)
    assert png_path.is_file() and png_path.stat().st_size > 0
    with csv_path.open() as fh:
        records = list(csv.DictReader(fh))
    assert len(records) == 8
    assert all(rec["status"] == "PASS" for rec in records)
    assert records[2]["d"] == "3" and records[2]["size"] == "7"
