"""Construction self-checks behind the verify-tables command.

Each table number covers one anticode family.  Per diameter the canonical
row shape is rebuilt and checked four ways: enumerated size, closed-form
size, diameter formula, and (at small diameters) the exhaustive search.
Rows are printable as PASS/FAIL lines, writable as CSV, and plottable as
a size-versus-diameter curve.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

from .anticodes import (
    AnticodeKind,
    AnticodeSpec,
    optimal_anticode,
    optimal_size_formula,
)
from .lattice import DomainError, Model
from .search import max_anticode
from .shapes import (
    Hexagon,
    Icosihexahedron,
    Octagon,
    QuadOctagon,
    hexagon_size_and_diameter,
    icosihexahedron_diameter,
    icosihexahedron_volume,
    octagon_infinity_diameter,
    octagon_size,
    octagon_tristance_diameter,
    quad_octagon_diameter,
    quad_octagon_size,
)

__all__ = ["TableRow", "verify_table", "write_report_files"]

_TABLES = {
    1: (Model.GRID2, AnticodeKind.TRISTANCE),
    2: (Model.INF2, AnticodeKind.TRISTANCE),
    3: (Model.HEX2, AnticodeKind.TRISTANCE),
    4: (Model.GRID3, AnticodeKind.TRISTANCE),
    5: (Model.GRID2, AnticodeKind.QUADRISTANCE),
}

# Search re-verification stays cheap up to these diameters.
_SEARCH_CAP = {1: 5, 2: 3, 3: 4, 4: 3, 5: 4}


def _shape_size_and_diameter(shape) -> tuple[int, int]:
    if isinstance(shape, Octagon):
        return octagon_size(shape), octagon_tristance_diameter(shape)
    if isinstance(shape, Hexagon):
        return hexagon_size_and_diameter(shape)
    if isinstance(shape, Icosihexahedron):
        return icosihexahedron_volume(shape), icosihexahedron_diameter(shape)
    if isinstance(shape, QuadOctagon):
        return quad_octagon_size(shape), quad_octagon_diameter(shape)
    raise DomainError(f"no formulas for shape {shape!r}")


@dataclass(frozen=True)
class TableRow:
    d: int
    params: dict
    enumerated: int
    formula_size: int
    diameter: int
    search_size: int | None
    ok: bool

    def line(self) -> str:
        verdict = "PASS" if self.ok else "FAIL"
        search = "-" if self.search_size is None else str(self.search_size)
        return (f"d={self.d} {verdict} size={self.enumerated} "
                f"formula={self.formula_size} diameter={self.diameter} "
                f"search={search}")


def verify_table(table: int, max_d: int,
                 with_search: bool = True) -> list[TableRow]:
    if table not in _TABLES:
        raise DomainError(f"unknown table {table}; valid tables are 1..5")
    if max_d < 1:
        raise DomainError("max diameter must be at least 1")
    model, kind = _TABLES[table]
    rows = []
    for d in range(1, max_d + 1):
        sol = optimal_anticode(AnticodeSpec(model, kind, d))
        formula_size, diameter = _shape_size_and_diameter(sol.shape)
        if table == 2:
            diameter = octagon_infinity_diameter(sol.shape)
        target = optimal_size_formula(model, kind, d)
        ok = (sol.region.size == formula_size and diameter == d
              and (target is None or formula_size == target))
        search_size = None
        if with_search and d <= _SEARCH_CAP[table]:
            search_size = max_anticode(model, kind, d,
                                       collect_witnesses=False).max_size
            ok = ok and search_size == formula_size
        rows.append(TableRow(d=d, params=dict(sol.params),
                             enumerated=sol.region.size,
                             formula_size=formula_size, diameter=diameter,
                             search_size=search_size, ok=ok))
    return rows


def write_report_files(table: int, rows: list[TableRow],
                       out_dir: str | Path) -> tuple[Path, Path]:
    """CSV of the per-diameter checks plus a PNG of the size curve."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    csv_path = out / f"table{table}_report.csv"
    with csv_path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["d", "status", "size", "formula_size", "diameter",
                         "search_size", "params"])
        for row in rows:
            writer.writerow([row.d, "PASS" if row.ok else "FAIL",
                             row.enumerated, row.formula_size, row.diameter,
                             "" if row.search_size is None else row.search_size,
                             ";".join(f"{k}={v}"
                                      for k, v in row.params.items())])

    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6, 4))
    ds = [row.d for row in rows]
    ax.plot(ds, [row.enumerated for row in rows], "o-",
            label="construction size", color="#20603d")
    searched = [(row.d, row.search_size) for row in rows
                if row.search_size is not None]
    if searched:
        ax.plot(*zip(*searched), "s", label="exhaustive search",
                color="#b0413e", fillstyle="none", markersize=9)
    model, kind = _TABLES[table]
    ax.set_xlabel("diameter d")
    ax.set_ylabel("anticode size")
    ax.set_title(f"{model.value} {kind.value} optimal sizes")
    ax.legend()
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    png_path = out / f"table{table}_sizes.png"
    fig.savefig(png_path, dpi=120)
    plt.close(fig)
    return csv_path, png_path
