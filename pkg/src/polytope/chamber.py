"""
The chambers P for n = 7, 13 cut out by the incidence-diagram walls, and their vertices.

Walls are indexed like incidence-graph nodes: point p is node p with root e_{p+1},
line l is node N + l with root e_0 - sum of e_{p+1} over p on l.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import sympy
from pydantic import BaseModel

from src.diagrams.enumeration import connected_elliptic_sets, connected_parabolic_sets, enum_max_elliptic, enum_max_parabolic
from src.diagrams.gram_diagram import GramDiagram, classify
from src.geometry.projective_plane import Polarity, ProjectivePlane, build_plane
from src.lattice.lorentz import LatticeVector, inner, norm, primitive, solve_primitive_kernel
from src.utils.errors import GramRelationError, KernelDimensionError, UnsupportedParameterError
from src.utils.logger import log_anomaly, log_system

PLANE_ORDER = {7: 2, 13: 3}

ACTUAL = "actual"
IDEAL = "ideal"


@dataclass(frozen=True)
class ChamberP:
    n: int
    plane: ProjectivePlane
    wall_roots: tuple[LatticeVector, ...]

    @property
    def q(self) -> int:
        return self.plane.q

    @property
    def point_walls(self) -> tuple[LatticeVector, ...]:
        return self.wall_roots[: self.plane.size]

    @property
    def line_walls(self) -> tuple[LatticeVector, ...]:
        return self.wall_roots[self.plane.size :]

    @cached_property
    def diagram(self) -> GramDiagram:
        labels = [f"p{p}" for p in range(self.plane.size)] + [f"l{l}" for l in range(self.plane.size)]
        return GramDiagram.from_roots(self.wall_roots, labels)

    def contains(self, x: LatticeVector) -> bool:
        return all(inner(x, w) <= 0 for w in self.wall_roots)

    def point_vector(self, x0: int, coefficients: dict[int, int]) -> LatticeVector:
        """x0*e_0 - sum coefficients[p]*e_{p+1} for plane points p."""
        return LatticeVector.from_e0_and_points(self.n, x0, {p + 1: -c for p, c in coefficients.items()})


def line_root(n: int, points: Sequence[int]) -> LatticeVector:
    return LatticeVector.from_e0_and_points(n, 1, {p + 1: -1 for p in points})


def build_chamber(n: int) -> ChamberP:
    """
    Raises:
        UnsupportedParameterError: n not in {7, 13}.
        GramRelationError: The walls fail the stated Gram relations.
    """
    if n not in PLANE_ORDER:
        raise UnsupportedParameterError(f"no chamber P for n={n}")
    plane = build_plane(PLANE_ORDER[n])
    points = tuple(LatticeVector.basis(n, p + 1) for p in range(plane.size))
    lines = tuple(line_root(n, sorted(plane.points_on[l])) for l in range(plane.size))
    chamber = ChamberP(n=n, plane=plane, wall_roots=points + lines)
    verify_gram_relations(chamber)
    return chamber


def verify_gram_relations(chamber: ChamberP):
    plane, q = chamber.plane, chamber.q
    size = plane.size
    for i, u in enumerate(chamber.point_walls):
        for j, v in enumerate(chamber.point_walls):
            if inner(u, v) != (1 if i == j else 0):
                raise GramRelationError(f"(e_p, e_q) wrong for points {i}, {j}")
    for l, u in enumerate(chamber.line_walls):
        for m, v in enumerate(chamber.line_walls):
            if inner(u, v) != (q if l == m else 0):
                raise GramRelationError(f"(e_l, e_m) wrong for lines {l}, {m}")
    for p in range(size):
        for l in range(size):
            expected = -1 if plane.incidence[p][l] else 0
            if inner(chamber.point_walls[p], chamber.line_walls[l]) != expected:
                raise GramRelationError(f"(e_p, e_l) wrong for point {p}, line {l}")


class VertexCertificate(BaseModel):
    subset: list[int]
    vertex: list[int]
    status: str
    type_label: str

    @property
    def vector(self) -> LatticeVector:
        return LatticeVector(tuple(self.vertex))


def _certify(chamber: ChamberP, subset: tuple[int, ...], status: str) -> VertexCertificate | None:
    try:
        v = solve_primitive_kernel([chamber.wall_roots[i] for i in subset], chamber.n)
    except KernelDimensionError as e:
        log_anomaly(f"[Vertices] subset {list(subset)} discarded: {e}")
        return None
    if not chamber.contains(v):
        log_anomaly(f"[Vertices] kernel vector {v} of {list(subset)} violates a wall inequality")
        return None
    value = norm(v)
    if (status == ACTUAL and value >= 0) or (status == IDEAL and value != 0):
        log_anomaly(f"[Vertices] kernel vector {v} of {list(subset)} has norm {value} for a {status} vertex")
        return None
    return VertexCertificate(
        subset=list(subset),
        vertex=list(v.coords),
        status=status,
        type_label=classify(chamber.diagram, subset).type_label,
    )


def all_vertices(
    chamber: ChamberP, workers: int = 1, elliptic: list[tuple[int, ...]] | None = None
) -> list[VertexCertificate]:
    """
    Actual vertices from the rank-n elliptic subsets and ideal vertices from the
    rank-(n-1) parabolic subsets, de-duplicated by vertex vector.

    ``elliptic`` takes precomputed connected elliptic sets of the chamber diagram.
    """
    d = chamber.diagram
    if elliptic is None:
        elliptic = connected_elliptic_sets(d)
    parabolic = connected_parabolic_sets(d, elliptic)
    candidates = [(s, ACTUAL) for s in enum_max_elliptic(d, chamber.n, workers, elliptic)]
    candidates += [(s, IDEAL) for s in enum_max_parabolic(d, chamber.n - 1, workers, parabolic)]

    catalog: dict[tuple[int, ...], VertexCertificate] = {}
    for subset, status in candidates:
        cert = _certify(chamber, subset, status)
        if cert is None:
            continue
        key = tuple(cert.vertex)
        if key in catalog:
            log_anomaly(f"[Vertices] {list(subset)} and {catalog[key].subset} give the same vertex {list(key)}")
            continue
        catalog[key] = cert
    certs = sorted(catalog.values(), key=lambda c: (c.status, c.subset))
    counts = Counter((c.status, c.type_label) for c in certs)
    log_system(f"[Vertices] n={chamber.n}: {dict(counts)}")
    return certs


def duality_matrix(chamber: ChamberP, pol: Polarity) -> sympy.Matrix:
    """
    Integer matrix A of e_0 -> primitive(v_L), e_p -> e_{delta(p)} (the line wall).

    Columns are images of e_0, e_1, ..., e_n.

    Raises:
        GramRelationError: A^T J A != q J.
    """
    n, q = chamber.n, chamber.q
    columns = [primitive(solve_primitive_kernel(chamber.line_walls, n))]
    columns += [chamber.line_walls[pol.point_to_line[p]] for p in range(chamber.plane.size)]
    a = sympy.Matrix([[columns[j].coords[i] for j in range(n + 1)] for i in range(n + 1)])
    j = lorentz_form_matrix(n)
    if a.T * j * a != q * j:
        raise GramRelationError(f"A^T J A != {q} J for the duality of P (n={n})")
    return a


def lorentz_form_matrix(n: int) -> sympy.Matrix:
    return sympy.diag(-1, *([1] * n))


def apply_matrix(a: sympy.Matrix, x: LatticeVector) -> LatticeVector:
    image = a * sympy.Matrix(x.coords)
    return LatticeVector(tuple(int(c) for c in image))


def duality_image_set(a: sympy.Matrix, vertices: Sequence[LatticeVector]) -> set[LatticeVector]:
    return {primitive(apply_matrix(a, v)) for v in vertices}
