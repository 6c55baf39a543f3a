"""
The projective planes PG(2,2) and PG(2,3), their incidence graphs and the
standard polarity.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product
from typing import Iterable

import networkx as nx

from src.utils.errors import UnsupportedParameterError

SUPPORTED_ORDERS = (2, 3)

POINT = "point"
LINE = "line"


def _normalize(triple: tuple[int, ...], q: int) -> tuple[int, ...]:
    """Scale so the first nonzero coordinate is 1."""
    lead = next(x for x in triple if x % q)
    inverse = pow(lead, -1, q)
    return tuple((x * inverse) % q for x in triple)


@dataclass(frozen=True)
class ProjectivePlane:
    q: int
    points: tuple[tuple[int, int, int], ...]
    lines: tuple[tuple[int, int, int], ...]

    @property
    def size(self) -> int:
        return len(self.points)

    @cached_property
    def incidence(self) -> tuple[tuple[bool, ...], ...]:
        """incidence[p][l] is True when point p lies on line l."""
        q = self.q
        return tuple(
            tuple(sum(a * b for a, b in zip(point, line)) % q == 0 for line in self.lines)
            for point in self.points
        )

    @cached_property
    def points_on(self) -> tuple[frozenset[int], ...]:
        return tuple(
            frozenset(p for p in range(self.size) if self.incidence[p][l]) for l in range(self.size)
        )

    @cached_property
    def lines_through(self) -> tuple[frozenset[int], ...]:
        return tuple(
            frozenset(l for l in range(self.size) if self.incidence[p][l]) for p in range(self.size)
        )

    def line_through(self, p: int, q: int) -> int:
        (line,) = self.lines_through[p] & self.lines_through[q]
        return line

    def meet(self, l: int, m: int) -> int:
        (point,) = self.points_on[l] & self.points_on[m]
        return point

    def collinear(self, pts: Iterable[int]) -> bool:
        pts = list(pts)
        if len(pts) <= 2:
            return True
        common = frozenset.intersection(*(self.lines_through[p] for p in pts))
        return bool(common)

    def concurrent(self, lns: Iterable[int]) -> bool:
        lns = list(lns)
        if len(lns) <= 2:
            return True
        return bool(frozenset.intersection(*(self.points_on[l] for l in lns)))

    def flags(self) -> list[tuple[int, int]]:
        return [(p, l) for p in range(self.size) for l in range(self.size) if self.incidence[p][l]]

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "points": [list(p) for p in self.points],
            "lines": [list(l) for l in self.lines],
            "flags": [list(f) for f in self.flags()],
        }


def build_plane(q: int) -> ProjectivePlane:
    """
    PG(2,q) from F_q^3: points are nonzero triples modulo scalars, lines are
    kernels of functionals; both listed lexicographically on normalized triples.
    """
    if q not in SUPPORTED_ORDERS:
        raise UnsupportedParameterError(f"PG(2,{q}) is not supported; orders are {SUPPORTED_ORDERS}")
    triples = sorted({_normalize(t, q) for t in product(range(q), repeat=3) if any(t)})
    return ProjectivePlane(q=q, points=tuple(triples), lines=tuple(triples))


@dataclass(frozen=True)
class Polarity:
    """Involutive bijection points <-> lines; point_to_line[p] is a line index, line_to_point[l] a point index."""

    point_to_line: tuple[int, ...]
    line_to_point: tuple[int, ...]

    def node_permutation(self) -> tuple[int, ...]:
        """The induced permutation of incidence-graph nodes (points first, then lines)."""
        size = len(self.point_to_line)
        return tuple(size + self.point_to_line[p] for p in range(size)) + tuple(
            self.line_to_point[l] for l in range(size)
        )

    def is_involution(self) -> bool:
        return all(self.line_to_point[self.point_to_line[p]] == p for p in range(len(self.point_to_line))) and all(
            self.point_to_line[self.line_to_point[l]] == l for l in range(len(self.line_to_point))
        )

    def is_incidence_compatible(self, plane: ProjectivePlane) -> bool:
        """p on l  <=>  delta(l) on delta(p), over all point-line pairs."""
        return all(
            plane.incidence[p][l] == plane.incidence[self.line_to_point[l]][self.point_to_line[p]]
            for p in range(plane.size)
            for l in range(plane.size)
        )


def standard_polarity(plane: ProjectivePlane) -> Polarity:
    """p maps to the line whose functional has p's coordinates."""
    line_index = {line: i for i, line in enumerate(plane.lines)}
    point_index = {point: i for i, point in enumerate(plane.points)}
    return Polarity(
        point_to_line=tuple(line_index[p] for p in plane.points),
        line_to_point=tuple(point_index[l] for l in plane.lines),
    )


def incidence_graph(plane: ProjectivePlane) -> nx.Graph:
    """Bipartite graph on points 0..N-1 and lines N..2N-1, with a ``kind`` node attribute."""
    size = plane.size
    graph = nx.Graph()
    graph.add_nodes_from(range(size), kind=POINT)
    graph.add_nodes_from(range(size, 2 * size), kind=LINE)
    graph.add_edges_from((p, size + l) for p, l in plane.flags())
    return graph


def general_position(plane: ProjectivePlane, pts: Iterable[int]) -> bool:
    """No three of the points are collinear."""
    return not any(plane.collinear(triple) for triple in combinations(sorted(set(pts)), 3))


def general_position_quadruples(plane: ProjectivePlane) -> list[tuple[int, int, int, int]]:
    return [quad for quad in combinations(range(plane.size), 4) if general_position(plane, quad)]


def general_position_line_quadruples(plane: ProjectivePlane) -> list[tuple[int, int, int, int]]:
    """Four lines, no three concurrent."""
    return [
        quad
        for quad in combinations(range(plane.size), 4)
        if not any(plane.concurrent(triple) for triple in combinations(quad, 3))
    ]
