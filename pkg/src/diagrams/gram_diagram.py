"""
Gram diagrams and the elliptic / parabolic / Lannér classification of their subdiagrams.

Classification only looks at exact signatures. Type labels are names for the
shape of each connected component (A_k for an induced k-node path, D_4 for
the 4-node star) and never influence the kind.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

import networkx as nx

from src.lattice.lorentz import LatticeVector, SymMatrix, gram_matrix, signature

ELLIPTIC = "elliptic"
PARABOLIC = "parabolic"
LANNER = "lanner"
OTHER = "other"

TYPE_SEPARATOR = "⊔"


@dataclass(frozen=True)
class GramDiagram:
    gram: SymMatrix
    hyperbolic_rank: int
    roots: tuple[LatticeVector, ...] | None = None
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if any(self.gram[i, i] <= 0 for i in range(self.gram.size)):
            raise ValueError("Gram diagram nodes need positive norms")
        if self.roots is not None and gram_matrix(self.roots) != self.gram:
            raise ValueError("Gram matrix does not match the roots")

    @classmethod
    def from_roots(cls, roots: Sequence[LatticeVector], labels: Sequence[str] | None = None) -> GramDiagram:
        roots = tuple(roots)
        return cls(
            gram=gram_matrix(roots),
            hyperbolic_rank=roots[0].n,
            roots=roots,
            labels=tuple(labels) if labels is not None else None,
        )

    @property
    def size(self) -> int:
        return self.gram.size

    @property
    def dim(self) -> int:
        return self.hyperbolic_rank + 1

    def label(self, node: int) -> str:
        return self.labels[node] if self.labels else str(node)

    @cached_property
    def neighbours(self) -> tuple[frozenset[int], ...]:
        return tuple(
            frozenset(j for j in range(self.size) if j != i and self.gram[i, j] != 0) for i in range(self.size)
        )

    @cached_property
    def neighbour_masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << j for j in nbrs) for nbrs in self.neighbours)

    @cached_property
    def graph(self) -> nx.Graph:
        """Coxeter graph: an edge wherever the off-diagonal Gram entry is nonzero."""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.size))
        graph.add_edges_from((i, j) for i in range(self.size) for j in self.neighbours[i] if i < j)
        return graph

    def restricted(self, subset: Iterable[int]) -> SymMatrix:
        return self.gram.submatrix(sorted(subset))

    def cosine_preserved(self, perm: Sequence[int]) -> bool:
        """perm preserves the Gram matrix up to positive rescaling of nodes."""
        g = self.gram
        for i in range(self.size):
            for j in range(i, self.size):
                a, b = g[i, j], g[perm[i], perm[j]]
                if (a > 0) != (b > 0) or (a < 0) != (b < 0):
                    return False
                if b * b * g[i, i] * g[j, j] != a * a * g[perm[i], perm[i]] * g[perm[j], perm[j]]:
                    return False
        return True


@dataclass(frozen=True)
class SubdiagramClass:
    kind: str
    rank: int
    type_label: str
    components: tuple[tuple[int, ...], ...]
    inertia: tuple[int, int, int]

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "rank": self.rank,
            "type_label": self.type_label,
            "components": [list(c) for c in self.components],
        }


def is_positive_definite(d: GramDiagram, subset: Iterable[int]) -> bool:
    nodes = sorted(subset)
    plus, _, _ = signature(d.restricted(nodes))
    return plus == len(nodes)


def components_of(d: GramDiagram, subset: Iterable[int]) -> tuple[tuple[int, ...], ...]:
    comps = nx.connected_components(d.graph.subgraph(subset))
    return tuple(sorted(tuple(sorted(c)) for c in comps))


def component_label(d: GramDiagram, component: Sequence[int]) -> str:
    sub = d.graph.subgraph(component)
    k = len(component)
    degrees = sorted(dict(sub.degree()).values())
    if nx.is_tree(sub) and (k == 1 or degrees[-1] <= 2):
        return f"A_{k}"
    if k == 4 and degrees == [1, 1, 1, 3]:
        return "D_4"
    return "other"


def _label_key(label: str) -> tuple[int, int, str]:
    family, _, index = label.partition("_")
    order = {"A": 0, "D": 1}.get(family, 2)
    return order, int(index) if index.isdigit() else 0, label


def format_type_label(labels: Iterable[str]) -> str:
    """Multiset rendering such as ``2A_1⊔A_2⊔3A_3``."""
    counts = Counter(labels)
    parts = []
    for label in sorted(counts, key=_label_key):
        m = counts[label]
        parts.append(f"{m}{label}" if m > 1 else label)
    return TYPE_SEPARATOR.join(parts)


def parse_type_label(text: str) -> Counter:
    counts: Counter = Counter()
    for part in text.split(TYPE_SEPARATOR):
        digits = ""
        while part and part[0].isdigit():
            digits += part[0]
            part = part[1:]
        counts[part] += int(digits) if digits else 1
    return counts


def classify(d: GramDiagram, subset: Iterable[int]) -> SubdiagramClass:
    """
    Args:
        d: The diagram.
        subset: Nonempty node set.

    Returns:
        Kind, rank and type label of the induced subdiagram.
    """
    nodes = tuple(sorted(set(subset)))
    if not nodes:
        raise ValueError("cannot classify the empty subdiagram")
    inertia = signature(d.restricted(nodes))
    plus, zero, minus = inertia
    components = components_of(d, nodes)
    type_label = format_type_label(component_label(d, c) for c in components)

    if minus == 0 and zero == 0:
        kind, rank = ELLIPTIC, len(nodes)
    elif minus == 0 and all(signature(d.restricted(c))[1] > 0 for c in components):
        kind, rank = PARABOLIC, len(nodes) - len(components)
    elif minus > 0 and len(components) == 1 and all(
        is_positive_definite(d, [v for v in nodes if v != u]) for u in nodes
    ):
        kind, rank = LANNER, plus + minus
    else:
        kind, rank = OTHER, plus + minus
    return SubdiagramClass(kind=kind, rank=rank, type_label=type_label, components=components, inertia=inertia)


def subset_determinant(d: GramDiagram, subset: Iterable[int]) -> Fraction:
    """Determinant of the restricted Gram by exact elimination."""
    a = [list(row) for row in d.restricted(subset).entries]
    size = len(a)
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, size):
            factor = a[r][col] / a[col][col]
            if factor:
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return det
