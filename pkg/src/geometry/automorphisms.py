"""
Automorphism groups of small graphs by backtracking over a refined colouring.

Generators are found level by level along a fixed base (a breadth-first node
order). At level i every node of b_i's colour class that is not yet in the
orbit of b_i under the generators found so far is tried as an image, keeping
b_0..b_{i-1} fixed; one extension is enough per candidate. Working from the
deepest level upwards makes the collected generators a strong generating set
of the full group.
"""
from __future__ import annotations

from collections import deque
from typing import Hashable

import networkx as nx

from src.groups.permutation_group import PermGroup, Permutation, orbits
from src.utils.logger import log_system


def refine_colouring(neighbours: list[set[int]], initial: list[Hashable]) -> list[int]:
    """Iterated neighbourhood refinement until the partition is stable; returns colour ids."""
    colours = _compress(initial)
    while True:
        signatures = [
            (colours[v], tuple(sorted(colours[w] for w in neighbours[v]))) for v in range(len(neighbours))
        ]
        refined = _compress(signatures)
        if len(set(refined)) == len(set(colours)):
            return refined
        colours = refined


def _compress(labels: list[Hashable]) -> list[int]:
    ids = {label: i for i, label in enumerate(sorted(set(labels), key=repr))}
    return [ids[label] for label in labels]


class AutomorphismSearch:
    """
    Mutable state of one automorphism computation.

    Attributes:
        - num_nodes: Node count; graph nodes must be 0..num_nodes-1.
        - neighbours: Adjacency sets.
        - colours: Stable refined colour of every node.
        - order: Breadth-first node order used both as base and as search order.
        - leaves: Number of complete maps reached (diagnostics).
    """

    def __init__(self, graph: nx.Graph, respect_colours: bool = False, colour_attribute: str = "kind"):
        nodes = sorted(graph.nodes())
        if nodes != list(range(len(nodes))):
            raise ValueError("graph nodes must be 0..N-1")
        self.num_nodes = len(nodes)
        self.neighbours: list[set[int]] = [set(graph.neighbors(v)) for v in nodes]
        if respect_colours:
            initial = [(graph.nodes[v].get(colour_attribute), len(self.neighbours[v])) for v in nodes]
        else:
            initial = [len(self.neighbours[v]) for v in nodes]
        self.colours = refine_colouring(self.neighbours, initial)
        self.order = self._breadth_first_order()
        self.position = {v: i for i, v in enumerate(self.order)}
        self.leaves = 0

    def _breadth_first_order(self) -> list[int]:
        seen: set[int] = set()
        order: list[int] = []
        for root in range(self.num_nodes):
            if root in seen:
                continue
            seen.add(root)
            queue = deque([root])
            while queue:
                v = queue.popleft()
                order.append(v)
                for w in sorted(self.neighbours[v]):
                    if w not in seen:
                        seen.add(w)
                        queue.append(w)
        return order

    def _candidates(self, u: int, mapping: dict[int, int], used: set[int]) -> list[int]:
        anchor = next((w for w in self.neighbours[u] if w in mapping), None)
        pool = self.neighbours[mapping[anchor]] if anchor is not None else range(self.num_nodes)
        colour = self.colours[u]
        return sorted(v for v in pool if v not in used and self.colours[v] == colour)

    def _consistent(self, u: int, v: int, mapping: dict[int, int]) -> bool:
        nu, nv = self.neighbours[u], self.neighbours[v]
        return all((w in nu) == (image in nv) for w, image in mapping.items())

    def extend(self, partial: dict[int, int]) -> Permutation | None:
        """One automorphism extending ``partial``, or None."""
        for u, v in partial.items():
            if self.colours[u] != self.colours[v]:
                return None
        for u in partial:
            others = {w: x for w, x in partial.items() if w != u}
            if not self._consistent(u, partial[u], others):
                return None
        mapping = dict(partial)
        used = set(mapping.values())
        remaining = [v for v in self.order if v not in mapping]
        if self._search(remaining, 0, mapping, used):
            return tuple(mapping[v] for v in range(self.num_nodes))
        return None

    def _search(self, remaining: list[int], k: int, mapping: dict[int, int], used: set[int]) -> bool:
        if k == len(remaining):
            self.leaves += 1
            return True
        u = remaining[k]
        for v in self._candidates(u, mapping, used):
            if not self._consistent(u, v, mapping):
                continue
            mapping[u] = v
            used.add(v)
            if self._search(remaining, k + 1, mapping, used):
                return True
            del mapping[u]
            used.discard(v)
        return False

    def generators(self) -> list[Permutation]:
        gens: list[Permutation] = []
        base = self.order
        for i in reversed(range(self.num_nodes)):
            b = base[i]
            fixed = {c: c for c in base[:i]}
            orbit = _orbit_of(b, gens)
            for c in range(self.num_nodes):
                if c in orbit or c in fixed or self.colours[c] != self.colours[b]:
                    continue
                g = self.extend({**fixed, b: c})
                if g is not None:
                    gens.append(g)
                    orbit = _orbit_of(b, gens)
        return gens


def _orbit_of(point: int, gens: list[Permutation]) -> set[int]:
    orbit = {point}
    frontier = [point]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = g[x]
            if y not in orbit:
                orbit.add(y)
                frontier.append(y)
    return orbit


def graph_automorphism_group(graph: nx.Graph, respect_colours: bool = False) -> list[Permutation]:
    """
    Generators of Aut(graph).

    Args:
        graph: Graph on nodes 0..N-1 (at most a few dozen nodes).
        respect_colours: Seed the refinement with the ``kind`` node attribute,
            giving the colour-preserving subgroup.

    Returns:
        A strong generating set as node permutations.
    """
    search = AutomorphismSearch(graph, respect_colours=respect_colours)
    gens = search.generators()
    log_system(
        f"[Automorphisms] {search.num_nodes} nodes, colour-preserving={respect_colours}: "
        f"{len(gens)} generators, {search.leaves} leaves"
    )
    return gens


def automorphism_group(graph: nx.Graph, respect_colours: bool = False) -> PermGroup:
    return PermGroup(graph_automorphism_group(graph, respect_colours), degree=graph.number_of_nodes())


def node_orbits(graph: nx.Graph, gens: list[Permutation]) -> list[list[int]]:
    return orbits(graph.number_of_nodes(), gens)


def is_graph_automorphism(graph: nx.Graph, perm: Permutation) -> bool:
    return all(graph.has_edge(perm[u], perm[v]) for u, v in graph.edges()) and len(set(perm)) == len(perm)
