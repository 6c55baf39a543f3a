"""
Closed-form vertex families of P and their match against the computed vertices.

Every family is rendered as a set of primitive integer vectors (the sqrt(2),
sqrt(3) normalizations are dropped). Dual families are also produced as the
image of their primal partner under the duality matrix; a literal reading
that disagrees with that image is flagged and replaced by the image.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Callable, Iterable

import sympy
from pydantic import BaseModel, Field

from src.geometry.projective_plane import ProjectivePlane, general_position_line_quadruples, general_position_quadruples
from src.lattice.lorentz import LatticeVector, primitive
from src.polytope.chamber import ACTUAL, IDEAL, ChamberP, VertexCertificate, apply_matrix
from src.utils.logger import log_anomaly, log_system

PRIMAL = "primal"
DUAL = "dual"


@dataclass(frozen=True)
class FamilySpec:
    name: str
    status: str
    type_label: str
    side: str
    partner: str
    generate: Callable[[ChamberP], Iterable[dict]]


@dataclass(frozen=True)
class CatalogFamily:
    name: str
    status: str
    type_label: str
    side: str
    partner: str
    members: frozenset[LatticeVector]
    literal: bool


def _vector(chamber: ChamberP, x0: int, coefficients: dict[int, int]) -> LatticeVector:
    return primitive(chamber.point_vector(x0, {p: c for p, c in coefficients.items() if c}))


def _add(target: dict[int, int], points: Iterable[int], amount: int):
    for p in points:
        target[p] = target.get(p, 0) + amount


def _quadrilateral(plane: ProjectivePlane, p: int, q: int, r: int, s: int) -> dict[str, int]:
    """Auxiliary points of the complete quadrilateral on p, q, r, s (p distinguished)."""
    lpq, lpr, lps = plane.line_through(p, q), plane.line_through(p, r), plane.line_through(p, s)
    lqr, lqs, lrs = plane.line_through(q, r), plane.line_through(q, s), plane.line_through(r, s)
    h, i, j = plane.meet(lpq, lrs), plane.meet(lpr, lqs), plane.meet(lps, lqr)
    (k,) = plane.lines_through[p] - {lpq, lpr, lps}
    (u,) = plane.points_on[lpq] - {p, q, h}
    (v,) = plane.points_on[lpr] - {p, r, i}
    (w,) = plane.points_on[lps] - {p, s, j}
    return {
        "h": h, "i": i, "j": j,
        "u": u, "v": v, "w": w,
        "x": plane.meet(k, lrs), "y": plane.meet(k, lqs), "z": plane.meet(k, lqr),
    }


def _all_points(c: ChamberP) -> range:
    return range(c.plane.size)


# n = 7

def _v_p(c):
    yield {"x0": 1, "coefficients": {}}


def _v_l(c):
    yield {"x0": c.q + 1, "coefficients": {p: 1 for p in _all_points(c)}}


def _v_p_l_fano(c):
    plane = c.plane
    for l in range(plane.size):
        for p in _all_points(c):
            if p not in plane.points_on[l]:
                rest = set(_all_points(c)) - plane.points_on[l] - {p}
                yield {"x0": 2, "coefficients": {r: 1 for r in rest}}


def _v_l_p_fano(c):
    plane = c.plane
    for l in range(plane.size):
        for p in _all_points(c):
            if p not in plane.points_on[l]:
                coefficients = {p: 2}
                _add(coefficients, plane.points_on[l], 1)
                yield {"x0": 3, "coefficients": coefficients}


def _u_p(c):
    for p in _all_points(c):
        yield {"x0": 1, "coefficients": {p: 1}}


def _u_l(c):
    plane = c.plane
    for l in range(plane.size):
        yield {"x0": c.q, "coefficients": {p: 1 for p in _all_points(c) if p not in plane.points_on[l]}}


# n = 13

def _v_pqr(c):
    for triple in combinations(_all_points(c), 3):
        if not c.plane.collinear(triple):
            yield {"x0": 2, "coefficients": {p: 1 for p in triple}}


def _v_lmn(c):
    plane = c.plane
    for triple in combinations(range(plane.size), 3):
        if plane.concurrent(triple):
            continue
        hits = {p: sum(p in plane.points_on[l] for l in triple) for p in _all_points(c)}
        yield {"x0": 5, "coefficients": {p: {0: 2, 1: 1}.get(h, 0) for p, h in hits.items()}}


def _v_p_l(c):
    plane = c.plane
    for l in range(plane.size):
        for p in _all_points(c):
            if p not in plane.points_on[l]:
                rest = set(_all_points(c)) - plane.points_on[l] - {p}
                yield {"x0": 3, "coefficients": {r: 1 for r in rest}}


def _v_l_p(c):
    plane = c.plane
    for l in range(plane.size):
        for p in _all_points(c):
            if p not in plane.points_on[l]:
                coefficients = {p: 3}
                _add(coefficients, plane.points_on[l], 1)
                yield {"x0": 4, "coefficients": coefficients}


def _v_p_q_l(c):
    plane = c.plane
    for l in range(plane.size):
        for p in _all_points(c):
            if p in plane.points_on[l]:
                continue
            for q in plane.points_on[l]:
                coefficients = {p: 2}
                _add(coefficients, plane.points_on[l] - {q}, 1)
                yield {"x0": 3, "coefficients": coefficients}


def _v_l_m_p(c):
    plane = c.plane
    for l in range(plane.size):
        for p in _all_points(c):
            if p in plane.points_on[l]:
                continue
            for m in plane.lines_through[p]:
                coefficients: dict[int, int] = {}
                _add(coefficients, set(_all_points(c)) - plane.points_on[l] - {p}, 2)
                _add(coefficients, plane.points_on[m] - {p}, 1)
                yield {"x0": 7, "coefficients": coefficients}


def _quadrilateral_roles(c):
    """(p, q, r, s, auxiliary points) over every general-position quadruple and ordering."""
    for quad in general_position_quadruples(c.plane):
        for p, q, r, s in permutations(quad):
            yield p, q, r, s, _quadrilateral(c.plane, p, q, r, s)


def _v_p_qrs(c):
    for p, q, r, s, aux in _quadrilateral_roles(c):
        coefficients = {q: 2, r: 2, s: 2}
        _add(coefficients, (aux["u"], aux["v"], aux["w"]), 1)
        yield {"x0": 4, "coefficients": coefficients}


def _v_p_qr_s(c):
    for p, q, r, s, aux in _quadrilateral_roles(c):
        coefficients = {p: 3, q: 2, r: 2, s: 2}
        _add(coefficients, (aux["x"], aux["y"]), 1)
        yield {"x0": 5, "coefficients": coefficients}


def _v_p_q_rs(c):
    for p, q, r, s, aux in _quadrilateral_roles(c):
        coefficients = {p: 2}
        _add(coefficients, (q, r, s, aux["x"]), 1)
        yield {"x0": 3, "coefficients": coefficients}


def _v_k_lmn(c):
    for p, q, r, s, aux in _quadrilateral_roles(c):
        coefficients = {p: 4, q: 3, r: 3, s: 3}
        _add(coefficients, (aux["x"], aux["y"], aux["z"]), 1)
        yield {"x0": 7, "coefficients": coefficients}


def _v_k_lm_n(c):
    # the n_q, n_y, n_z, n_h of the closed form are read as e_q, e_y, e_z, e_h
    for p, q, r, s, aux in _quadrilateral_roles(c):
        coefficients = {p: 5, r: 4, s: 4, q: 3, aux["h"]: 1}
        _add(coefficients, (aux["y"], aux["z"]), 2)
        yield {"x0": 9, "coefficients": coefficients}


def _v_k_l_mn(c):
    for p, q, r, s, aux in _quadrilateral_roles(c):
        coefficients = {q: 3, r: 3}
        _add(coefficients, (s, aux["u"], aux["v"]), 2)
        _add(coefficients, (aux["w"], aux["h"], aux["i"]), 1)
        yield {"x0": 6, "coefficients": coefficients}


def _u_pqrs(c):
    for quad in general_position_quadruples(c.plane):
        yield {"x0": 2, "coefficients": {p: 1 for p in quad}}


def _u_klmn(c):
    plane = c.plane
    for quad in general_position_line_quadruples(plane):
        hits = {p: sum(p in plane.points_on[l] for l in quad) for p in _all_points(c)}
        yield {"x0": 4, "coefficients": {p: {0: 2, 1: 1}.get(h, 0) for p, h in hits.items()}}


FANO_FAMILIES = (
    FamilySpec("v_P", ACTUAL, "7A_1", PRIMAL, "v_L", _v_p),
    FamilySpec("v_L", ACTUAL, "7A_1", DUAL, "v_P", _v_l),
    FamilySpec("v_{p,l}", ACTUAL, "A_1⊔3A_2", PRIMAL, "v_{l,p}", _v_p_l_fano),
    FamilySpec("v_{l,p}", ACTUAL, "A_1⊔3A_2", DUAL, "v_{p,l}", _v_l_p_fano),
    FamilySpec("u_p", IDEAL, "3A_3", PRIMAL, "u_l", _u_p),
    FamilySpec("u_l", IDEAL, "3A_3", DUAL, "u_p", _u_l),
)

PG3_FAMILIES = (
    FamilySpec("v_P", ACTUAL, "13A_1", PRIMAL, "v_L", _v_p),
    FamilySpec("v_L", ACTUAL, "13A_1", DUAL, "v_P", _v_l),
    FamilySpec("v_pqr", ACTUAL, "4A_1⊔3A_3", PRIMAL, "v_lmn", _v_pqr),
    FamilySpec("v_lmn", ACTUAL, "4A_1⊔3A_3", DUAL, "v_pqr", _v_lmn),
    FamilySpec("v_{p,l}", ACTUAL, "A_1⊔4A_3", PRIMAL, "v_{l,p}", _v_p_l),
    FamilySpec("v_{l,p}", ACTUAL, "A_1⊔4A_3", DUAL, "v_{p,l}", _v_l_p),
    FamilySpec("v_{p,q,l}", ACTUAL, "2A_1⊔A_2⊔3A_3", PRIMAL, "v_{l,m,p}", _v_p_q_l),
    FamilySpec("v_{l,m,p}", ACTUAL, "2A_1⊔A_2⊔3A_3", DUAL, "v_{p,q,l}", _v_l_m_p),
    FamilySpec("v_{p,qrs}", ACTUAL, "A_1⊔3A_4", PRIMAL, "v_{k,lmn}", _v_p_qrs),
    FamilySpec("v_{k,lmn}", ACTUAL, "A_1⊔3A_4", DUAL, "v_{p,qrs}", _v_k_lmn),
    FamilySpec("v_{p,qr,s}", ACTUAL, "A_2⊔A_3⊔2A_4", PRIMAL, "v_{k,lm,n}", _v_p_qr_s),
    FamilySpec("v_{k,lm,n}", ACTUAL, "A_2⊔A_3⊔2A_4", DUAL, "v_{p,qr,s}", _v_k_lm_n),
    FamilySpec("v_{p,q,rs}", ACTUAL, "3A_3⊔A_4", PRIMAL, "v_{k,l,mn}", _v_p_q_rs),
    FamilySpec("v_{k,l,mn}", ACTUAL, "3A_3⊔A_4", DUAL, "v_{p,q,rs}", _v_k_l_mn),
    FamilySpec("u_p", IDEAL, "4D_4", PRIMAL, "u_l", _u_p),
    FamilySpec("u_l", IDEAL, "4D_4", DUAL, "u_p", _u_l),
    FamilySpec("u_pqrs", IDEAL, "3A_5", PRIMAL, "u_klmn", _u_pqrs),
    FamilySpec("u_klmn", IDEAL, "3A_5", DUAL, "u_pqrs", _u_klmn),
)


def family_specs(n: int) -> tuple[FamilySpec, ...]:
    return FANO_FAMILIES if n == 7 else PG3_FAMILIES


def generate_catalog(chamber: ChamberP, duality: sympy.Matrix) -> tuple[list[CatalogFamily], list[str]]:
    """Families in table order, plus notes on literal readings that were replaced."""
    specs = family_specs(chamber.n)
    literal = {
        spec.name: frozenset(_vector(chamber, m["x0"], m["coefficients"]) for m in spec.generate(chamber))
        for spec in specs
    }

    notes = []
    families = []
    for spec in specs:
        members = literal[spec.name]
        is_literal = True
        if spec.side == DUAL:
            image = frozenset(primitive(apply_matrix(duality, v)) for v in literal[spec.partner])
            if members != image:
                notes.append(f"{spec.name}: literal reading differs from the duality image of {spec.partner}")
                log_anomaly(f"[Catalog] {notes[-1]}")
                members = image
                is_literal = False
        families.append(
            CatalogFamily(
                name=spec.name,
                status=spec.status,
                type_label=spec.type_label,
                side=spec.side,
                partner=spec.partner,
                members=members,
                literal=is_literal,
            )
        )
    log_system(f"[Catalog] n={chamber.n}: " + ", ".join(f"{f.name}={len(f.members)}" for f in families))
    return families, notes


class FamilyMatch(BaseModel):
    family: str
    status: str
    type_label: str
    side: str
    literal: bool
    generated: int
    matched: int
    unmatched_generated: list[list[int]] = Field(default_factory=list)
    type_mismatches: int = 0


class MatchReport(BaseModel):
    n: int
    families: list[FamilyMatch]
    unaccounted_vertices: list[list[int]] = Field(default_factory=list)
    notes: list[str] = Field(default_factory=list)

    @property
    def exact(self) -> bool:
        return not self.unaccounted_vertices and all(
            f.matched == f.generated and not f.type_mismatches for f in self.families
        )


def match_catalog(
    chamber: ChamberP,
    catalog: list[CatalogFamily],
    vertices: list[VertexCertificate],
    notes: list[str] | None = None,
    sample_limit: int = 5,
) -> MatchReport:
    computed = {v.vector: v for v in vertices}
    accounted: set[LatticeVector] = set()
    families = []
    for family in catalog:
        hits = family.members & computed.keys()
        accounted |= hits
        misses = sorted((list(v.coords) for v in family.members - computed.keys()))
        families.append(
            FamilyMatch(
                family=family.name,
                status=family.status,
                type_label=family.type_label,
                side=family.side,
                literal=family.literal,
                generated=len(family.members),
                matched=len(hits),
                unmatched_generated=misses[:sample_limit],
                type_mismatches=sum(
                    1
                    for v in hits
                    if computed[v].type_label != family.type_label or computed[v].status != family.status
                ),
            )
        )
    unaccounted = sorted(list(v.coords) for v in computed.keys() - accounted)
    return MatchReport(n=chamber.n, families=families, unaccounted_vertices=unaccounted, notes=list(notes or []))


def family_index(catalog: list[CatalogFamily]) -> dict[LatticeVector, str]:
    """Vertex vector -> family name (first family in table order)."""
    index: dict[LatticeVector, str] = {}
    for family in catalog:
        for v in family.members:
            index.setdefault(v, family.name)
    return index
