"""
Exhaustive enumeration of connected elliptic / parabolic / Lannér subdiagrams
and of maximal-rank elliptic and parabolic subdiagrams.

Maximal subdiagrams are built as unions of pairwise non-adjacent connected
pieces. The search decides the nodes in index order: at node v it either
skips v or places a piece whose smallest node is v and which avoids every
node already selected or adjacent to a selected one. Node sets are bitmasks.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial

from src.diagrams.gram_diagram import GramDiagram, is_positive_definite, classify, PARABOLIC, LANNER
from src.utils.logger import log_system


def mask_of(nodes) -> int:
    mask = 0
    for v in nodes:
        mask |= 1 << v
    return mask


def nodes_of(mask: int) -> tuple[int, ...]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def _closed_neighbourhood(d: GramDiagram, mask: int) -> int:
    closed = mask
    for v in nodes_of(mask):
        closed |= d.neighbour_masks[v]
    return closed


def connected_elliptic_sets(d: GramDiagram) -> list[tuple[int, ...]]:
    """All connected node sets with positive definite Gram, grown one adjacent node at a time."""
    seen: set[int] = set()
    found: list[int] = []
    frontier = []
    for v in range(d.size):
        m = 1 << v
        seen.add(m)
        found.append(m)
        frontier.append(m)
    while frontier:
        nxt = []
        for m in frontier:
            boundary = _closed_neighbourhood(d, m) & ~m
            for v in nodes_of(boundary):
                grown = m | (1 << v)
                if grown in seen:
                    continue
                seen.add(grown)
                if is_positive_definite(d, nodes_of(grown)):
                    found.append(grown)
                    nxt.append(grown)
        frontier = nxt
    return sorted(nodes_of(m) for m in found)


def _one_node_extensions(d: GramDiagram, elliptic: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Connected sets E + {v} with E connected elliptic and v adjacent to E, without repeats."""
    seen: set[int] = set()
    out = []
    for nodes in elliptic:
        m = mask_of(nodes)
        for v in nodes_of(_closed_neighbourhood(d, m) & ~m):
            grown = m | (1 << v)
            if grown not in seen:
                seen.add(grown)
                out.append(nodes_of(grown))
    return sorted(out)


def connected_parabolic_sets(d: GramDiagram, elliptic: list[tuple[int, ...]] | None = None) -> list[tuple[int, ...]]:
    """
    Removing a non-cut node from a connected parabolic diagram leaves a connected
    elliptic one, so every connected parabolic set is a one-node extension.
    """
    if elliptic is None:
        elliptic = connected_elliptic_sets(d)
    return [s for s in _one_node_extensions(d, elliptic) if classify(d, s).kind == PARABOLIC]


def lanner_sets(d: GramDiagram, elliptic: list[tuple[int, ...]] | None = None) -> tuple[list[tuple[int, ...]], int]:
    """
    Lannér sets and the number of candidates examined. A Lannér set minus a
    non-cut node is connected elliptic, so the one-node extensions are exhaustive.
    """
    if elliptic is None:
        elliptic = connected_elliptic_sets(d)
    candidates = _one_node_extensions(d, elliptic)
    return [s for s in candidates if classify(d, s).kind == LANNER], len(candidates)


@dataclass(frozen=True)
class _Piece:
    mask: int
    closed: int
    rank: int


@dataclass(frozen=True)
class SearchProblem:
    """Picklable description of a maximal-subdiagram search."""

    num_nodes: int
    pieces_by_min: tuple[tuple[_Piece, ...], ...]
    target: int

    @classmethod
    def build(cls, d: GramDiagram, pieces: list[tuple[int, ...]], rank_of, target: int) -> SearchProblem:
        by_min: list[list[_Piece]] = [[] for _ in range(d.size)]
        for nodes in pieces:
            m = mask_of(nodes)
            by_min[min(nodes)].append(_Piece(mask=m, closed=_closed_neighbourhood(d, m), rank=rank_of(nodes)))
        return cls(num_nodes=d.size, pieces_by_min=tuple(tuple(p) for p in by_min), target=target)


class _Search:
    def __init__(self, problem: SearchProblem, first_only: bool = False):
        self.problem = problem
        self.first_only = first_only
        self.results: list[int] = []
        self.visited = 0

    def run(self, v: int, selected: int, forbidden: int, rank: int) -> bool:
        """Returns True once a result is found and ``first_only`` is set."""
        self.visited += 1
        problem = self.problem
        if rank == problem.target:
            self.results.append(selected)
            return self.first_only
        n = problem.num_nodes
        if v == n:
            return False
        capacity = bin((~forbidden & ((1 << n) - 1)) >> v).count("1")
        if rank + capacity < problem.target:
            return False
        if not (forbidden >> v) & 1:
            for piece in problem.pieces_by_min[v]:
                if piece.mask & forbidden or rank + piece.rank > problem.target:
                    continue
                if self.run(v + 1, selected | piece.mask, forbidden | piece.closed, rank + piece.rank):
                    return True
        return self.run(v + 1, selected, forbidden, rank)


def _search_from_first(problem: SearchProblem, first: int) -> list[int]:
    """All results whose smallest selected node is ``first``."""
    search = _Search(problem)
    for piece in problem.pieces_by_min[first]:
        if piece.rank <= problem.target:
            search.run(first + 1, piece.mask, piece.closed, piece.rank)
    return search.results


def _run_partitioned(problem: SearchProblem, workers: int) -> list[tuple[int, ...]]:
    firsts = range(problem.num_nodes)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            chunks = list(executor.map(partial(_search_from_first, problem), firsts))
    else:
        chunks = [_search_from_first(problem, first) for first in firsts]
    return sorted(nodes_of(m) for chunk in chunks for m in chunk)


def enum_max_elliptic(
    d: GramDiagram,
    target_rank: int | None = None,
    workers: int = 1,
    elliptic: list[tuple[int, ...]] | None = None,
) -> list[tuple[int, ...]]:
    """
    All elliptic subsets of rank ``target_rank`` (default: the hyperbolic rank n).

    Args:
        d: Diagram to search.
        target_rank: Rank (= node count) required.
        workers: Processes used; the result never depends on it.
        elliptic: Precomputed connected elliptic sets.

    Returns:
        Node tuples in lexicographic order.
    """
    target = d.hyperbolic_rank if target_rank is None else target_rank
    if elliptic is None:
        elliptic = connected_elliptic_sets(d)
    problem = SearchProblem.build(d, elliptic, len, target)
    result = _run_partitioned(problem, workers)
    log_system(f"[Enumeration] {len(result)} elliptic subsets of rank {target} over {d.size} nodes")
    return result


def enum_max_parabolic(
    d: GramDiagram,
    target_rank: int | None = None,
    workers: int = 1,
    parabolic: list[tuple[int, ...]] | None = None,
) -> list[tuple[int, ...]]:
    """All parabolic subsets of rank ``target_rank`` (default n - 1)."""
    target = d.hyperbolic_rank - 1 if target_rank is None else target_rank
    if parabolic is None:
        parabolic = connected_parabolic_sets(d)
    problem = parabolic_problem(d, parabolic, target)
    result = _run_partitioned(problem, workers)
    log_system(f"[Enumeration] {len(result)} parabolic subsets of rank {target} over {d.size} nodes")
    return result


def parabolic_problem(d: GramDiagram, parabolic: list[tuple[int, ...]], target_rank: int) -> SearchProblem:
    return SearchProblem.build(d, parabolic, lambda nodes: len(nodes) - 1, target_rank)


def extend_parabolic(d: GramDiagram, component: tuple[int, ...], problem: SearchProblem) -> tuple[int, ...] | None:
    """A parabolic subset of the problem's target rank containing the connected parabolic ``component``."""
    m = mask_of(component)
    search = _Search(problem, first_only=True)
    search.run(0, m, _closed_neighbourhood(d, m), len(component) - 1)
    if not search.results:
        return None
    return nodes_of(search.results[0])
