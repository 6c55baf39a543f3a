"""
Permutation groups through a deterministic Schreier-Sims stabilizer chain.

Permutations are tuples of images on 0..m-1. Products compose left to right:
``mult_perm(p, q)`` applies p first, then q.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from src.utils.errors import NotBijectiveError
from src.utils.logger import log_system

Permutation = tuple[int, ...]


def check_perm(p: Sequence[int]) -> Permutation:
    """Raise if p is not a permutation of 0..len(p)-1."""
    if sorted(p) != list(range(len(p))):
        raise NotBijectiveError(f"not a permutation: {list(p)[:12]}...")
    return tuple(p)


def id_perm(m: int) -> Permutation:
    return tuple(range(m))


def is_id_perm(p: Permutation) -> bool:
    return all(i == j for i, j in enumerate(p))


def mult_perm(p: Permutation, q: Permutation) -> Permutation:
    return tuple(map(q.__getitem__, p))


def inv_perm(p: Permutation) -> Permutation:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def first_moved_point(p: Permutation) -> int | None:
    return next((i for i, j in enumerate(p) if i != j), None)


def fmt_perm(p: Permutation) -> str:
    """Cycle notation."""
    seen = set()
    out = []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cycle = [i]
        j = p[i]
        while j != i:
            seen.add(j)
            cycle.append(j)
            j = p[j]
        out.append("(%s)" % " ".join(map(str, cycle)))
    return "".join(out) or "()"


@dataclass
class _Level:
    """One step of the chain: base point, generators of the point stabilizer above it, transversal."""

    point: int
    generators: list[Permutation] = field(default_factory=list)
    transversal: dict[int, Permutation] = field(default_factory=dict)
    inverses: dict[int, Permutation] = field(default_factory=dict)
    orbit: list[int] = field(default_factory=list)
    checked: set[tuple[int, int]] = field(default_factory=set)

    def reset(self, degree: int):
        identity = id_perm(degree)
        self.transversal = {self.point: identity}
        self.inverses = {self.point: identity}
        self.orbit = [self.point]
        self.extend_orbit()

    def extend_orbit(self):
        """Breadth-first closure; existing transversal entries are kept."""
        frontier = list(self.orbit)
        while frontier:
            nxt = []
            for x in frontier:
                ux = self.transversal[x]
                for s in self.generators:
                    y = s[x]
                    if y not in self.transversal:
                        uy = mult_perm(ux, s)
                        self.transversal[y] = uy
                        self.inverses[y] = inv_perm(uy)
                        self.orbit.append(y)
                        nxt.append(y)
            frontier = nxt


class PermGroup:
    """Group generated by permutations of ``degree`` points."""

    def __init__(self, generators: Iterable[Sequence[int]], degree: int | None = None):
        gens = [check_perm(g) for g in generators]
        if degree is None:
            degree = len(gens[0]) if gens else 0
        if any(len(g) != degree for g in gens):
            raise NotBijectiveError("generators act on different point sets")
        self.degree = degree
        self.generators: list[Permutation] = gens
        self._levels: list[_Level] | None = None

    @property
    def levels(self) -> list[_Level]:
        if self._levels is None:
            self._levels = self._build()
        return self._levels

    @property
    def base(self) -> list[int]:
        return [level.point for level in self.levels]

    def order(self) -> int:
        result = 1
        for level in self.levels:
            result *= len(level.orbit)
        return result

    def orbit_lengths(self) -> list[int]:
        return [len(level.orbit) for level in self.levels]

    def contains(self, p: Sequence[int]) -> bool:
        p = check_perm(p)
        if len(p) != self.degree:
            return False
        residue, depth = self._strip(p, 0)
        return depth == len(self.levels) and is_id_perm(residue)

    membership = contains

    def _strip(self, g: Permutation, start: int) -> tuple[Permutation, int]:
        levels = self._levels if self._levels is not None else self.levels
        for depth in range(start, len(levels)):
            level = levels[depth]
            y = g[level.point]
            if y not in level.transversal:
                return g, depth
            g = mult_perm(g, level.inverses[y])
        return g, len(levels)

    def _build(self) -> list[_Level]:
        degree = self.degree
        gens = [g for g in self.generators if not is_id_perm(g)]
        levels: list[_Level] = []
        self._levels = levels
        if not gens:
            return levels

        base: list[int] = []
        for g in gens:
            if all(g[b] == b for b in base):
                base.append(first_moved_point(g))
        for i, b in enumerate(base):
            level = _Level(point=b)
            level.generators = [g for g in gens if all(g[c] == c for c in base[:i])]
            level.reset(degree)
            levels.append(level)

        i = len(levels) - 1
        while i >= 0:
            level = levels[i]
            extended = False
            for x in list(level.orbit):
                ux = level.transversal[x]
                for k, s in enumerate(level.generators):
                    if (x, k) in level.checked:
                        continue
                    level.checked.add((x, k))
                    schreier = mult_perm(mult_perm(ux, s), level.inverses[s[x]])
                    residue, depth = self._strip(schreier, i + 1)
                    if depth == len(levels) and is_id_perm(residue):
                        continue
                    if depth == len(levels):
                        new_level = _Level(point=first_moved_point(residue))
                        new_level.reset(degree)
                        levels.append(new_level)
                    for lower in levels[i + 1 : depth + 1]:
                        lower.generators.append(residue)
                        lower.extend_orbit()
                    i = depth
                    extended = True
                    break
                if extended:
                    break
            if not extended:
                i -= 1
        log_system(f"[PermGroup] degree {degree}: base {self.base}, orbit lengths {self.orbit_lengths()}")
        return levels


def group_order(g: PermGroup) -> int:
    return g.order()


def orbits(degree: int, generators: Iterable[Permutation]) -> list[list[int]]:
    """Orbits of the points 0..degree-1, each sorted, listed by smallest element."""
    gens = list(generators)
    seen: set[int] = set()
    result = []
    for start in range(degree):
        if start in seen:
            continue
        orbit = {start}
        frontier = [start]
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = g[x]
                if y not in orbit:
                    orbit.add(y)
                    frontier.append(y)
        seen |= orbit
        result.append(sorted(orbit))
    return result
