from collections import Counter

import pytest

from config import reference_data as ref
from src.chambers.inclusion import verify_inclusion
from src.chambers.reduction import reduce_to_D
from src.chambers.signature_string import SignatureString, parse_signature, render_signature
from src.chambers.simple_roots import (
    d_extremals,
    expected_edges,
    gamma_simple_roots,
    gosset_wall_families,
    gosset_walls_n7,
    in_D,
    in_G7,
    weyl_vector_n7,
)
from src.geometry.projective_plane import standard_polarity
from src.lattice.lorentz import LatticeVector, inner, norm
from src.polytope.catalog import generate_catalog
from src.polytope.chamber import all_vertices, build_chamber, duality_matrix
from src.utils.errors import NonTerminationError, UnsupportedParameterError


def vec(n, x0, coefficients):
    """x0*e_0 - sum c*e_p over coefficients {p: c}."""
    return LatticeVector.from_e0_and_points(n, x0, {p: -c for p, c in coefficients.items()})


@pytest.mark.parametrize("n", [7, 13])
def test_simple_roots(n):
    system = gamma_simple_roots(n)
    assert system.edges() == expected_edges(n)
    assert system.norms[n] == 1
    assert all(v == 2 for i, v in enumerate(system.norms) if i != n)


def test_simple_roots_unsupported():
    with pytest.raises(UnsupportedParameterError):
        gamma_simple_roots(8)


def test_e0_is_in_D():
    assert in_D(LatticeVector.basis(13, 0), 13)
    assert not in_D(vec(13, 2, {1: 1, 2: 1, 3: 1}), 13)


def test_d_extremals_are_edge_rays():
    roots = gamma_simple_roots(7).roots
    rays = d_extremals(7)
    assert len(rays) == 8
    for i, v in enumerate(rays):
        assert v.is_primitive()
        assert inner(v, roots[i]) < 0
        assert all(inner(v, a) == 0 for j, a in enumerate(roots) if j != i)


def test_d_extremals_need_a_simplex():
    with pytest.raises(UnsupportedParameterError):
        d_extremals(13)


def test_gosset_walls():
    walls = gosset_walls_n7()
    families = gosset_wall_families()
    assert len(set(walls)) == ref.GOSSET_WALL_COUNT
    assert [len(families[k]) for k in families] == [7, 21, 21, 7]
    assert {norm(w) for w in walls} == {1}
    v7 = weyl_vector_n7()
    assert norm(v7) == -2
    assert {inner(w, v7) for w in walls} == {ref.GOSSET_WEYL_VALUE}
    assert in_G7(LatticeVector.basis(7, 0))


def test_render_signature():
    u = vec(13, 4, {1: 2, 2: 2, 3: 2, 4: 1, 5: 1, 6: 1, 7: 1})
    assert render_signature(u) == "42^31^4"
    assert render_signature(LatticeVector.basis(13, 0)) == "1"
    big = vec(13, 12, {1: 10, 2: 3, 3: 3})
    assert render_signature(big) == "(12)(10)3^2"


def test_parse_signature_with_two_digit_exponent():
    parsed = parse_signature("31^12")
    assert parsed == SignatureString(x0=3, parts=((1, 12),))
    assert parse_signature("(12)(10)3^2").multiset() == Counter({10: 1, 3: 2})


def test_signature_strings_from_the_table_round_trip():
    for _, _, chain in ref.REDUCTION_TABLE:
        for text in chain:
            assert parse_signature(text).render() == text


def test_reduce_examples():
    trace = reduce_to_D(vec(13, 2, {1: 1, 2: 1, 3: 1}))
    assert trace.chain == ["21^3", "1"]
    assert trace.endpoint == LatticeVector.basis(13, 0)

    u_klmn = vec(13, 4, {1: 2, 2: 2, 3: 2, 4: 1, 5: 1, 6: 1, 7: 1})
    trace = reduce_to_D(u_klmn)
    assert trace.chain == ["42^31^4", "21^4", "11"]
    assert norm(trace.endpoint) == 0
    assert trace.indices_used <= set(range(13))


def test_reduce_sorts_before_reflecting():
    x = vec(13, 2, {5: 1, 9: 1, 13: 1})
    trace = reduce_to_D(x)
    assert trace.chain == ["21^3", "1"]
    assert trace.indices_used - {0}


def test_reduce_non_termination():
    with pytest.raises(NonTerminationError):
        reduce_to_D(-LatticeVector.basis(13, 0), max_steps=50)


def test_fano_inclusions():
    chamber = build_chamber(7)
    cert = verify_inclusion(chamber, all_vertices(chamber))
    assert cert.passed
    assert cert.d_extremals_in_P
    assert cert.vertex_count == 72


@pytest.fixture(scope="module")
def pg3_inclusion():
    chamber = build_chamber(13)
    families, _ = generate_catalog(chamber, duality_matrix(chamber, standard_polarity(chamber.plane)))
    return verify_inclusion(chamber, all_vertices(chamber), families, keep_records=True)


@pytest.mark.slow
def test_pg3_reduction_table(pg3_inclusion):
    assert pg3_inclusion.passed, pg3_inclusion.failures[:5]
    assert len(pg3_inclusion.table) == 18
    assert [r.chain for r in pg3_inclusion.table] == [row[2] for row in ref.REDUCTION_TABLE]
    assert pg3_inclusion.table_diff == []


@pytest.mark.slow
def test_pg3_terminals_and_indices(pg3_inclusion):
    assert pg3_inclusion.terminal_signatures == ref.TERMINAL_SIGNATURES
    assert set(pg3_inclusion.indices_used) <= set(ref.ALLOWED_REDUCTION_INDICES)
    assert len(pg3_inclusion.records) == pg3_inclusion.vertex_count
    assert all(r.family is not None for r in pg3_inclusion.records)
