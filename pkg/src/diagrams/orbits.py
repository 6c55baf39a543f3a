"""Orbits of node subsets under diagram automorphisms."""
from __future__ import annotations

from collections import defaultdict
from typing import Callable, Iterable, Sequence

from pydantic import BaseModel

from src.diagrams.gram_diagram import GramDiagram, classify
from src.utils.errors import GroupAutomorphismError


class CensusEntry(BaseModel):
    type_label: str
    count: int
    orbit_count: int
    orbit_sizes: list[int]
    sample_subset: list[int]


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: int, y: int):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)


def orbit_census(
    d: GramDiagram,
    subsets: Iterable[Sequence[int]],
    aut_gens: Iterable[Sequence[int]],
    type_of: Callable[[tuple[int, ...]], str] | None = None,
) -> list[CensusEntry]:
    """
    Orbit count per type label.

    Args:
        d: Diagram the generators act on.
        subsets: Node sets, closed under the group.
        aut_gens: Node permutations; each must preserve the Gram matrix up to
            positive rescaling of nodes.
        type_of: Label function, classify(...).type_label by default.

    Raises:
        GroupAutomorphismError: A generator is not an automorphism, or moves a
            subset outside the given family.
    """
    gens = [tuple(g) for g in aut_gens]
    for g in gens:
        if len(g) != d.size or not d.cosine_preserved(g):
            raise GroupAutomorphismError(f"generator {g} is not a Gram automorphism")
    keys = [tuple(sorted(s)) for s in subsets]
    if not keys:
        return []
    index = {key: i for i, key in enumerate(keys)}
    uf = _UnionFind(len(keys))
    for i, key in enumerate(keys):
        for g in gens:
            image = tuple(sorted(g[v] for v in key))
            j = index.get(image)
            if j is None:
                raise GroupAutomorphismError(f"image of {list(key)} is not in the subset family")
            uf.union(i, j)

    label = type_of or (lambda key: classify(d, key).type_label)
    by_type: dict[str, list[int]] = defaultdict(list)
    for i, key in enumerate(keys):
        by_type[label(key)].append(i)

    census = []
    for type_label in sorted(by_type):
        members = by_type[type_label]
        orbit_sizes: dict[int, int] = defaultdict(int)
        for i in members:
            orbit_sizes[uf.find(i)] += 1
        census.append(
            CensusEntry(
                type_label=type_label,
                count=len(members),
                orbit_count=len(orbit_sizes),
                orbit_sizes=sorted(orbit_sizes.values()),
                sample_subset=list(keys[members[0]]),
            )
        )
    return census
