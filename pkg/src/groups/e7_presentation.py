"""
The presentation of W(E7) on the diagram T_10, and the diagram T_13.

Reflections are realized twice: as exact 8x8 integer matrices on Z^(7,1)
(relations, word identities) and as permutations of the 126 roots (orders,
membership). Matrix words multiply left to right. Octagon relations are
checked in deflated form: the word a_1..a_8 a_7..a_2 squares to 1.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache, reduce
from itertools import product

import networkx as nx
import sympy
from pydantic import BaseModel, Field

from config.reference_data import (
    DEFLATION_RELATIONS,
    E7_ROOT_COUNT,
    T10_EDGES,
    T10_POSITIVE_PAIRS,
    W_A6_ORDER,
    WORD_ELIMINATION_NODES,
)
from src.diagrams.gram_diagram import GramDiagram
from src.diagrams.vinberg import VinbergCertificate, vinberg_finite_volume
from src.geometry.automorphisms import automorphism_group, graph_automorphism_group
from src.groups.permutation_group import PermGroup, Permutation
from src.lattice.lorentz import LatticeVector, inner, norm, reflect
from src.polytope.chamber import build_chamber, lorentz_form_matrix
from src.utils.errors import GramRelationError, VerificationError
from src.utils.logger import log_system

N = 7


class RootSystemE7(BaseModel):
    roots: list[list[int]]
    simple: list[list[int]]
    shapes: dict[str, int]

    def vectors(self) -> list[LatticeVector]:
        return [LatticeVector(tuple(r)) for r in self.roots]


def weyl_vector() -> LatticeVector:
    return LatticeVector.from_e0_and_points(N, 3, {p: -1 for p in range(1, N + 1)})


def _shape(x: LatticeVector) -> str:
    return {0: "e_p-e_q", 1: "±(e_0-e_p-e_q-e_r)", 2: "±(2e_0-Σ_6)"}[abs(x.coords[0])]


def simple_roots_e7() -> list[LatticeVector]:
    """beta_i = e_i - e_{i+1} for i = 1..6 and beta_7 = e_0 - e_1 - e_2 - e_3 (branch on beta_3)."""
    betas = [LatticeVector.basis(N, i) - LatticeVector.basis(N, i + 1) for i in range(1, N)]
    betas.append(LatticeVector.from_e0_and_points(N, 1, {1: -1, 2: -1, 3: -1}))
    return betas


@lru_cache(maxsize=1)
def e7_roots() -> RootSystemE7:
    """
    Norm-2 vectors orthogonal to v_7 = 3e_0 - e_1 - ... - e_7.

    Orthogonality gives sum x_p = -3 x_0, so 9 x_0^2 <= 7 (2 + x_0^2) by
    Cauchy-Schwarz, hence |x_0| <= 2 and then |x_p| <= 2.

    Raises:
        VerificationError: The count is not 126.
    """
    roots = []
    for tail in product(range(-2, 3), repeat=N):
        s = sum(tail)
        if s % 3:
            continue
        x = LatticeVector((-s // 3, *tail))
        if norm(x) == 2:
            roots.append(x)
    roots.sort(key=lambda r: r.coords)
    if len(roots) != E7_ROOT_COUNT or any(inner(r, weyl_vector()) for r in roots):
        raise VerificationError(f"found {len(roots)} E7 roots")
    shapes: dict[str, int] = {}
    for r in roots:
        shapes[_shape(r)] = shapes.get(_shape(r), 0) + 1
    log_system(f"[E7] {len(roots)} roots: {shapes}")
    return RootSystemE7(
        roots=[list(r.coords) for r in roots],
        simple=[list(b.coords) for b in simple_roots_e7()],
        shapes=shapes,
    )


def _combination(coefficients: list[int], betas: list[LatticeVector]) -> LatticeVector:
    return reduce(lambda acc, cb: acc + cb[0] * cb[1], zip(coefficients, betas), LatticeVector.zero(N))


def t10_vectors() -> list[LatticeVector]:
    """
    alpha_0..alpha_9 indexed like the nodes of T_10.

    Raises:
        GramRelationError: The Gram pattern of T_10 fails.
    """
    betas = simple_roots_e7()
    alpha0 = -_combination([2, 3, 4, 3, 2, 1, 2], betas)
    alpha8 = _combination([1, 2, 3, 2, 1, 0, 2], betas)
    alpha9 = _combination([0, 1, 2, 2, 2, 1, 1], betas)
    vectors = [alpha0, *betas, alpha8, alpha9]
    verify_t10_gram(vectors)
    return vectors


def expected_t10_value(x: int, y: int) -> int:
    if x == y:
        return 2
    pair = (min(x, y), max(x, y))
    if pair in T10_POSITIVE_PAIRS:
        return 1
    return -1 if pair in {(min(e), max(e)) for e in T10_EDGES} else 0


def verify_t10_gram(vectors: list[LatticeVector]):
    for x in range(10):
        for y in range(10):
            value = inner(vectors[x], vectors[y])
            if value != expected_t10_value(x, y):
                raise GramRelationError(f"(alpha_{x}, alpha_{y}) = {value}, expected {expected_t10_value(x, y)}")


def t10_diagram(vectors: list[LatticeVector] | None = None) -> GramDiagram:
    vectors = vectors or t10_vectors()
    return GramDiagram.from_roots(vectors, labels=[str(i) for i in range(len(vectors))])


class Octagon(BaseModel):
    cycle: list[int]
    omitted: list[int]


def _canonical_cycle(cycle: list[int]) -> list[int]:
    start = cycle.index(min(cycle))
    rotated = cycle[start:] + cycle[:start]
    reverse = [rotated[0]] + rotated[1:][::-1]
    return min(rotated, reverse)


def free_octagons(d: GramDiagram) -> list[Octagon]:
    """
    Induced chordless 8-cycles of the diagram.

    Raises:
        VerificationError: A returned cycle is not induced.
    """
    octagons = []
    for cycle in nx.chordless_cycles(d.graph, length_bound=8):
        if len(cycle) != 8:
            continue
        if d.graph.subgraph(cycle).number_of_edges() != 8:
            raise VerificationError(f"cycle {cycle} has a chord")
        octagons.append(
            Octagon(cycle=_canonical_cycle(list(cycle)), omitted=sorted(set(range(d.size)) - set(cycle)))
        )
    octagons.sort(key=lambda o: o.omitted)
    return octagons


def reflection_matrix(alpha: LatticeVector) -> sympy.Matrix:
    """Matrix of s_alpha acting on column vectors: I - (2 / alpha^2) alpha (J alpha)^T."""
    a2 = norm(alpha)
    if a2 not in (1, 2):
        raise VerificationError(f"{alpha} is not a norm 1 or 2 root")
    column = sympy.Matrix(alpha.coords)
    j = lorentz_form_matrix(alpha.n)
    return sympy.eye(alpha.n + 1) - (2 // a2) * column * (j * column).T


def word_matrix(word: list[int], matrices: list[sympy.Matrix]) -> sympy.Matrix:
    result = sympy.eye(matrices[0].rows)
    for i in word:
        result = result * matrices[i]
    return result


class RelationResult(BaseModel):
    word: list[int]
    identity: bool


class DeflationReport(BaseModel):
    relations: list[RelationResult]
    octagon_words_checked: int
    octagon_words_identity: int

    @property
    def passed(self) -> bool:
        return all(r.identity for r in self.relations) and self.octagon_words_checked == self.octagon_words_identity


def deflated_word(word: list[int]) -> list[int]:
    """a_1..a_8 -> a_1 a_2..a_8 a_7..a_2; the relation is that this word squares to 1."""
    return word + word[-2:0:-1]


def deflation_check(vectors: list[LatticeVector], octagons: list[Octagon]) -> DeflationReport:
    """The relation words in deflated form, then every rotation and reversal of each octagon word."""
    matrices = [reflection_matrix(v) for v in vectors]
    identity = sympy.eye(N + 1)

    def holds(word: list[int]) -> bool:
        m = word_matrix(deflated_word(word), matrices)
        return m * m == identity

    relations = [RelationResult(word=w, identity=holds(w)) for w in DEFLATION_RELATIONS]
    checked = passed = 0
    for octagon in octagons:
        for cycle in (octagon.cycle, octagon.cycle[::-1]):
            for k in range(len(cycle)):
                checked += 1
                passed += holds(cycle[k:] + cycle[:k])
    log_system(
        f"[E7] deflation: {sum(r.identity for r in relations)}/{len(relations)} relations, "
        f"{passed}/{checked} octagon words"
    )
    return DeflationReport(relations=relations, octagon_words_checked=checked, octagon_words_identity=passed)


class WordIdentity(BaseModel):
    node: int
    word: list[int]
    holds: bool


def simple_coordinates(r: LatticeVector, betas: list[LatticeVector]) -> list[int]:
    """
    Coefficients of r in beta_1..beta_7.

    Raises:
        VerificationError: r is not an integer combination of the betas.
    """
    gram = sympy.Matrix([[inner(a, b) for b in betas] for a in betas])
    rhs = sympy.Matrix([inner(r, b) for b in betas])
    solution = gram.LUsolve(rhs)
    if any(not x.is_integer for x in solution) or _combination([int(x) for x in solution], betas) != r:
        raise VerificationError(f"{r} is not in the root lattice of beta_1..beta_7")
    return [int(x) for x in solution]


def conjugating_word(r: LatticeVector, betas: list[LatticeVector]) -> list[int]:
    """
    A word in 1..7 whose matrix product is s_r.

    The positive one of ±r is lowered by simple reflections s_{i_1}, ..., s_{i_k}
    until it reaches some beta_j; then s_r = s_{i_1}..s_{i_k} s_j s_{i_k}..s_{i_1}.

    Raises:
        VerificationError: The descent gets stuck, so r is not a root.
    """
    if sum(simple_coordinates(r, betas)) < 0:
        r = -r
    path: list[int] = []
    while r not in betas:
        i = next((k for k, b in enumerate(betas, start=1) if inner(r, b) > 0), None)
        if i is None or len(path) > E7_ROOT_COUNT:
            raise VerificationError(f"no simple descent from {r}")
        path.append(i)
        r = reflect(betas[i - 1], r)
    return path + [betas.index(r) + 1] + path[::-1]


def word_elimination(vectors: list[LatticeVector]) -> list[WordIdentity]:
    """s_9, s_8 and s_0 as words in s_1..s_7."""
    matrices = [reflection_matrix(v) for v in vectors]
    betas = vectors[1:8]
    identities = []
    for node in WORD_ELIMINATION_NODES:
        word = conjugating_word(vectors[node], betas)
        identities.append(WordIdentity(node=node, word=word, holds=matrices[node] == word_matrix(word, matrices)))
    return identities


def root_permutation(alpha: LatticeVector, roots: list[LatticeVector]) -> Permutation:
    index = {r: i for i, r in enumerate(roots)}
    images = []
    for r in roots:
        image = reflect(alpha, r)
        if image not in index:
            raise VerificationError(f"s_{alpha} does not preserve the root system at {r}")
        images.append(index[image])
    return tuple(images)


class GroupOrders(BaseModel):
    simple_order: int
    full_order: int
    extra_generators_in_simple: dict[str, bool]
    roots_span_rank: int
    gosset_ratio_from_order: str
    gosset_ratio_from_vertices: str


def e7_group_orders(vectors: list[LatticeVector]) -> GroupOrders:
    """Orders of <s_1..s_7> and <s_0..s_9> acting on the 126 roots."""
    roots = e7_roots().vectors()
    perms = [root_permutation(v, roots) for v in vectors]
    simple = PermGroup(perms[1:8], degree=len(roots))
    full = PermGroup(perms, degree=len(roots))
    span = sympy.Matrix([list(r.coords) for r in roots]).rank()
    order = simple.order()
    log_system(f"[E7] |<s_1..s_7>| = {order}, |<s_0..s_9>| = {full.order()}")
    return GroupOrders(
        simple_order=order,
        full_order=full.order(),
        extra_generators_in_simple={f"s_{i}": simple.contains(perms[i]) for i in (0, 8, 9)},
        roots_span_rank=span,
        gosset_ratio_from_order=str(Fraction(order, W_A6_ORDER)),
        gosset_ratio_from_vertices=str(2**7 * (1 + Fraction(28, 8))),
    )


class SymmetryCheck(BaseModel):
    order: int
    octagons_preserved: bool


def s4_symmetry_check(d: GramDiagram, octagons: list[Octagon]) -> SymmetryCheck:
    gens = graph_automorphism_group(d.graph)
    node_sets = {frozenset(o.cycle) for o in octagons}
    preserved = all({frozenset(g[v] for v in s) for s in node_sets} == node_sets for g in gens)
    return SymmetryCheck(order=PermGroup(gens, degree=d.size).order(), octagons_preserved=preserved)


class T13Certificate(BaseModel):
    base_point: int
    labels: list[str]
    roots: list[list[int]]
    gram_failures: list[str] = Field(default_factory=list)
    tetrahedron_isomorphic: bool
    automorphism_order: int
    vinberg: VinbergCertificate

    @property
    def passed(self) -> bool:
        return not self.gram_failures and self.tetrahedron_isomorphic and self.vinberg.passed


def _drop_coordinate(x: LatticeVector, index: int) -> LatticeVector:
    if x.coords[index]:
        raise GramRelationError(f"{x} is not orthogonal to e_{index}")
    return LatticeVector(x.coords[:index] + x.coords[index + 1 :])


def t13_construction(base_point: int = 0) -> tuple[GramDiagram, T13Certificate]:
    """
    T_13 from I_14: drop the point a and the three lines through it, keep the
    remaining 6 points and 4 lines, and add b' = e_b + e_a for each line b
    through a. Everything is orthogonal to e_a and lives in Z^(6,1).
    """
    chamber = build_chamber(N)
    plane = chamber.plane
    a = base_point
    through_a = sorted(plane.lines_through[a])
    points = [p for p in range(plane.size) if p != a]
    lines = [l for l in range(plane.size) if l not in through_a]
    e_a = LatticeVector.basis(N, a + 1)
    extra = [chamber.line_walls[b] + e_a for b in through_a]

    full = [chamber.point_walls[p] for p in points] + [chamber.line_walls[l] for l in lines] + extra
    roots = [_drop_coordinate(x, a + 1) for x in full]
    labels = [f"p{p}" for p in points] + [f"l{l}" for l in lines] + [f"b'{b}" for b in through_a]
    d = GramDiagram.from_roots(roots, labels)

    failures = []
    offset = len(points) + len(lines)
    for i, b in enumerate(through_a):
        node = offset + i
        if norm(roots[node]) != 1:
            failures.append(f"{labels[node]} has norm {norm(roots[node])}")
        for j in range(len(through_a)):
            if j != i and inner(roots[node], roots[offset + j]) != -1:
                failures.append(f"({labels[node]}, {labels[offset + j]}) != -1")
        for k, p in enumerate(points):
            expected = -1 if p in plane.points_on[b] else 0
            if inner(roots[node], roots[k]) != expected:
                failures.append(f"({labels[node]}, {labels[k]}) != {expected}")
        for k in range(len(points), offset):
            if inner(roots[node], roots[k]):
                failures.append(f"({labels[node]}, {labels[k]}) != 0")
    for i in range(offset):
        for j in range(offset):
            if inner(roots[i], roots[j]) != inner(full[i], full[j]):
                failures.append(f"bond {labels[i]}-{labels[j]} changed by dropping e_a")

    tetrahedron = d.graph.subgraph(range(offset))
    certificate = T13Certificate(
        base_point=a,
        labels=labels,
        roots=[list(r.coords) for r in roots],
        gram_failures=failures,
        tetrahedron_isomorphic=nx.is_isomorphic(tetrahedron, nx.Graph(T10_EDGES)),
        automorphism_order=automorphism_group(d.graph).order(),
        vinberg=vinberg_finite_volume(d),
    )
    log_system(f"[E7] T_13 at point {a}: passed={certificate.passed}, |Aut| = {certificate.automorphism_order}")
    return d, certificate
