"""Values of the Gosset walls on the dual vertex families of P (n = 7)."""
from __future__ import annotations

from pydantic import BaseModel

from config.reference_data import GOSSET_VALUE_TABLE, GOSSET_WEYL_VALUE
from src.chambers.simple_roots import GOSSET_FAMILIES, gosset_wall_families
from src.lattice.lorentz import inner
from src.polytope.catalog import CatalogFamily


class ValueTableRow(BaseModel):
    vertex_family: str
    wall_family: str
    values: list[int]
    expected: list[int]

    @property
    def matches(self) -> bool:
        return self.values == self.expected


class ValueTable(BaseModel):
    rows: list[ValueTableRow]
    weyl_values: list[int]

    @property
    def exact(self) -> bool:
        return all(r.matches for r in self.rows) and self.weyl_values == [GOSSET_WEYL_VALUE]


def value_table_n7(catalog: list[CatalogFamily]) -> ValueTable:
    """
    Value sets of each Gosset wall family on v_{l,p} and u_l, and the values
    of all 56 walls on the primitive v_L.
    """
    by_name = {f.name: f for f in catalog}
    walls = gosset_wall_families()
    rows = []
    for vertex_family, expected in GOSSET_VALUE_TABLE.items():
        members = by_name[vertex_family].members
        for wall_family in GOSSET_FAMILIES:
            values = sorted({inner(w, v) for w in walls[wall_family] for v in members})
            rows.append(
                ValueTableRow(
                    vertex_family=vertex_family,
                    wall_family=wall_family,
                    values=values,
                    expected=expected[wall_family],
                )
            )
    (v_l,) = by_name["v_L"].members
    weyl_values = sorted({inner(w, v_l) for family in walls.values() for w in family})
    return ValueTable(rows=rows, weyl_values=weyl_values)
