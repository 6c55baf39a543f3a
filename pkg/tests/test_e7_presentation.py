import random
from itertools import combinations
from math import factorial

import networkx as nx
import pytest
import sympy

from config import reference_data as ref
from src.groups.e7_presentation import (
    conjugating_word,
    deflated_word,
    deflation_check,
    e7_group_orders,
    e7_roots,
    free_octagons,
    reflection_matrix,
    root_permutation,
    s4_symmetry_check,
    simple_coordinates,
    t10_diagram,
    t10_vectors,
    t13_construction,
    weyl_vector,
    word_elimination,
    word_matrix,
)
from src.groups.permutation_group import (
    PermGroup,
    fmt_perm,
    inv_perm,
    is_id_perm,
    mult_perm,
    orbits,
)
from src.lattice.lorentz import LatticeVector, inner
from src.polytope.chamber import lorentz_form_matrix
from src.utils.errors import NotBijectiveError, VerificationError


@pytest.fixture(scope="module")
def vectors():
    return t10_vectors()


@pytest.fixture(scope="module")
def diagram(vectors):
    return t10_diagram(vectors)


@pytest.fixture(scope="module")
def octagons(diagram):
    return free_octagons(diagram)


def test_permutation_helpers():
    p = (1, 2, 0, 3)
    q = (0, 1, 3, 2)
    assert mult_perm(p, inv_perm(p)) == (0, 1, 2, 3)
    assert is_id_perm(mult_perm(inv_perm(q), q))
    assert mult_perm(p, q) == (1, 3, 0, 2)
    assert fmt_perm(p) == "(0 1 2)"
    assert fmt_perm((0, 1)) == "()"
    assert orbits(5, [p[:3] + (3, 4)]) == [[0, 1, 2], [3], [4]]


def test_perm_group_orders():
    n = 7
    cycle = tuple((i + 1) % n for i in range(n))
    swap = (1, 0) + tuple(range(2, n))
    symmetric = PermGroup([cycle, swap])
    assert symmetric.order() == factorial(n)
    alternating = PermGroup([tuple((i + 1) % n for i in range(n)), (1, 2, 0) + tuple(range(3, n))])
    assert alternating.order() == factorial(n) // 2
    assert not alternating.contains(swap)
    assert symmetric.contains(swap)
    assert PermGroup([], degree=4).order() == 1
    assert PermGroup([cycle]).contains(mult_perm(cycle, cycle))


def test_perm_group_membership_of_random_products():
    rng = random.Random(17)
    gens = [(1, 2, 3, 4, 5, 0), (1, 0, 2, 3, 4, 5)]
    group = PermGroup(gens)
    for _ in range(50):
        g = tuple(range(6))
        for _ in range(rng.randint(1, 12)):
            g = mult_perm(g, rng.choice(gens))
        assert group.contains(g)


def test_perm_group_rejects_non_permutations():
    with pytest.raises(NotBijectiveError):
        PermGroup([(0, 0, 1)])


def test_e7_roots():
    system = e7_roots()
    roots = system.vectors()
    assert len(roots) == ref.E7_ROOT_COUNT
    assert system.shapes == ref.E7_ROOT_SHAPES
    assert all(inner(r, weyl_vector()) == 0 and inner(r, r) == 2 for r in roots)
    assert set(roots) == {-r for r in roots}


def test_t10_gram_pattern(diagram):
    positive = [(i, j) for i, j in combinations(range(10), 2) if diagram.gram[i, j] > 0]
    assert positive == ref.T10_POSITIVE_PAIRS
    edges = {(i, j) for i, j in combinations(range(10), 2) if diagram.gram[i, j] != 0}
    assert edges == {(min(a, b), max(a, b)) for a, b in ref.T10_EDGES}


def test_extra_vectors(vectors):
    e = lambda i: LatticeVector.basis(7, i)  # noqa: E731
    assert vectors[8] == 2 * e(0) - e(1) - e(2) - e(3) - e(4) - e(5) - e(6)
    assert vectors[9] == e(0) - e(1) - e(6) - e(7)


def test_free_octagons(diagram, octagons):
    assert [o.omitted for o in octagons] == [list(p) for p in ref.OCTAGON_OMITTED_PAIRS]
    brute = [
        s
        for s in combinations(range(10), 8)
        if all(d == 2 for _, d in diagram.graph.subgraph(s).degree())
        and nx.is_connected(diagram.graph.subgraph(s))
    ]
    assert len(brute) == len(octagons) == 3


def test_reflection_matrices(vectors):
    j = lorentz_form_matrix(7)
    for v in vectors:
        r = reflection_matrix(v)
        assert r * r == sympy.eye(8)
        assert r.T * j * r == j
        assert r == reflection_matrix(-v)
        assert r * sympy.Matrix(v.coords) == -sympy.Matrix(v.coords)


def test_reflection_matrix_rejects_other_norms():
    with pytest.raises(VerificationError):
        reflection_matrix(LatticeVector.of(1, 1, 1, 1, 1, 0, 0, 0))


def test_deflation_relations(vectors, octagons):
    report = deflation_check(vectors, octagons)
    assert [r.identity for r in report.relations] == [True, True, True]
    assert report.octagon_words_checked == report.octagon_words_identity == 48
    assert report.passed


def test_plain_octagon_words_have_order_seven(vectors):
    matrices = [reflection_matrix(v) for v in vectors]
    for word in ref.DEFLATION_RELATIONS:
        m = word_matrix(word, matrices)
        assert m != sympy.eye(8)
        assert m**7 == sympy.eye(8)


def test_deflated_word():
    assert deflated_word([1, 2, 3, 7, 8, 6, 5, 9]) == [1, 2, 3, 7, 8, 6, 5, 9, 5, 6, 8, 7, 3, 2]


def test_a_non_relation_is_not_the_identity(vectors):
    matrices = [reflection_matrix(v) for v in vectors]
    assert word_matrix([1, 2], matrices) != sympy.eye(8)


def test_simple_coordinates(vectors):
    betas = vectors[1:8]
    assert simple_coordinates(vectors[0], betas) == [-2, -3, -4, -3, -2, -1, -2]
    assert simple_coordinates(vectors[9], betas) == [0, 1, 2, 2, 2, 1, 1]
    with pytest.raises(VerificationError):
        simple_coordinates(LatticeVector.basis(7, 1), betas)


def test_conjugating_word_of_a_simple_root(vectors):
    assert conjugating_word(vectors[4], vectors[1:8]) == [4]
    assert conjugating_word(-vectors[4], vectors[1:8]) == [4]


def test_word_elimination(vectors):
    identities = word_elimination(vectors)
    assert [w.node for w in identities] == ref.WORD_ELIMINATION_NODES
    assert all(w.holds for w in identities)
    for w in identities:
        assert set(w.word) <= set(range(1, 8))
        assert w.word == w.word[::-1]


def test_root_permutation_is_an_involution(vectors):
    roots = e7_roots().vectors()
    for v in vectors:
        p = root_permutation(v, roots)
        assert is_id_perm(mult_perm(p, p))


def test_group_orders(vectors):
    orders = e7_group_orders(vectors)
    assert orders.simple_order == ref.W_E7_ORDER
    assert orders.full_order == ref.W_E7_ORDER
    assert orders.extra_generators_in_simple == {"s_0": True, "s_8": True, "s_9": True}
    assert orders.roots_span_rank == 7
    assert orders.gosset_ratio_from_order == orders.gosset_ratio_from_vertices == str(ref.GOSSET_VERTEX_RATIO)
    assert ref.W_E7_ORDER == ref.GOSSET_VERTEX_RATIO * factorial(7)


def test_s4_symmetry(diagram, octagons):
    check = s4_symmetry_check(diagram, octagons)
    assert check.order == ref.AUT_T10_ORDER
    assert check.octagons_preserved


def test_t13():
    d, cert = t13_construction()
    assert cert.gram_failures == []
    assert cert.tetrahedron_isomorphic
    assert cert.vinberg.passed
    assert cert.automorphism_order == ref.AUT_T13_ORDER
    assert d.size == 13
    assert d.hyperbolic_rank == 6


@pytest.mark.parametrize("point", [3, 6])
def test_t13_does_not_depend_on_the_base_point(point):
    _, cert = t13_construction(point)
    assert cert.passed
