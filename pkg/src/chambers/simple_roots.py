"""
Simple roots of the reflection chambers D (n = 7, 13) and the Gosset chamber G (n = 7).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from src.lattice.lorentz import LatticeVector, inner, norm, solve_primitive_kernel
from src.utils.errors import GramRelationError, UnsupportedParameterError


@dataclass(frozen=True)
class SimpleRootSystem:
    n: int
    roots: tuple[LatticeVector, ...]

    @property
    def norms(self) -> tuple[int, ...]:
        return tuple(norm(a) for a in self.roots)

    def edges(self) -> set[tuple[int, int]]:
        return {
            (i, j)
            for i, j in combinations(range(len(self.roots)), 2)
            if inner(self.roots[i], self.roots[j]) != 0
        }


def _e(n: int, i: int) -> LatticeVector:
    return LatticeVector.basis(n, i)


def expected_edges(n: int) -> set[tuple[int, int]]:
    """Path 1..n, node 0 on node 3, and for n = 13 node 14 on node 11."""
    edges = {(i, i + 1) for i in range(1, n)} | {(0, 3)}
    if n == 13:
        edges.add((11, 14))
    return edges


@lru_cache(maxsize=None)
def gamma_simple_roots(n: int) -> SimpleRootSystem:
    """
    alpha_0 = e_0 - e_1 - e_2 - e_3, alpha_i = e_i - e_{i+1}, alpha_n = e_n,
    and for n = 13 also alpha_14 = 3e_0 - e_1 - ... - e_11.

    Raises:
        GramRelationError: The Gram pattern differs from the Coxeter diagram.
    """
    if n not in (7, 13):
        raise UnsupportedParameterError(f"no simple root list for n={n}")
    roots = [_e(n, 0) - _e(n, 1) - _e(n, 2) - _e(n, 3)]
    roots += [_e(n, i) - _e(n, i + 1) for i in range(1, n)]
    roots.append(_e(n, n))
    if n == 13:
        roots.append(LatticeVector.from_e0_and_points(n, 3, {p: -1 for p in range(1, 12)}))
    system = SimpleRootSystem(n=n, roots=tuple(roots))

    expected_norms = tuple(1 if i == n else 2 for i in range(len(roots)))
    if system.norms != expected_norms:
        raise GramRelationError(f"simple root norms {system.norms} differ from {expected_norms}")
    if system.edges() != expected_edges(n):
        raise GramRelationError(f"simple root diagram {sorted(system.edges())} is not the expected one")
    for i, j in expected_edges(n):
        if inner(roots[i], roots[j]) != -1:
            raise GramRelationError(f"(alpha_{i}, alpha_{j}) != -1")
    return system


def in_D(x: LatticeVector, n: int) -> bool:
    return all(inner(x, a) <= 0 for a in gamma_simple_roots(n).roots)


def d_extremals(n: int) -> list[LatticeVector]:
    """Edge rays of the simplicial cone D: v_i orthogonal to every alpha_j with j != i."""
    roots = gamma_simple_roots(n).roots
    if len(roots) != n + 1:
        raise UnsupportedParameterError("D is a simplex only for n = 7")
    rays = []
    for i in range(n + 1):
        v = solve_primitive_kernel([a for j, a in enumerate(roots) if j != i], n)
        if inner(v, roots[i]) > 0:
            v = -v
        rays.append(v)
    return rays


def weyl_vector_n7() -> LatticeVector:
    """v_7 = 3e_0 - e_1 - ... - e_7."""
    return LatticeVector.from_e0_and_points(7, 3, {p: -1 for p in range(1, 8)})


GOSSET_FAMILIES = ("e_p", "e_0-e_p-e_q", "2e_0-Σe+e_p+e_q", "3e_0-Σe-e_p")


@lru_cache(maxsize=None)
def gosset_wall_families() -> dict[str, tuple[LatticeVector, ...]]:
    n = 7
    points = range(1, 8)
    all_minus = {p: -1 for p in points}
    return {
        "e_p": tuple(_e(n, p) for p in points),
        "e_0-e_p-e_q": tuple(
            LatticeVector.from_e0_and_points(n, 1, {p: -1, q: -1}) for p, q in combinations(points, 2)
        ),
        "2e_0-Σe+e_p+e_q": tuple(
            LatticeVector.from_e0_and_points(n, 2, {**all_minus, p: 0, q: 0}) for p, q in combinations(points, 2)
        ),
        "3e_0-Σe-e_p": tuple(LatticeVector.from_e0_and_points(n, 3, {**all_minus, p: -2}) for p in points),
    }


def gosset_walls_n7() -> tuple[LatticeVector, ...]:
    """The 56 norm-1 walls of G."""
    families = gosset_wall_families()
    return tuple(w for name in GOSSET_FAMILIES for w in families[name])


def in_G7(x: LatticeVector) -> bool:
    return all(inner(x, w) <= 0 for w in gosset_walls_n7())
