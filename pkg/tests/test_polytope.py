import json
from collections import Counter

import pytest
import sympy

from config import reference_data as ref
from src.geometry.projective_plane import standard_polarity
from src.lattice.lorentz import LatticeVector, inner, norm
from src.polytope import chamber as chamber_module
from src.polytope.cache import cache_path, cached_vertices, load_vertices, save_vertices
from src.polytope.catalog import DUAL, PRIMAL, family_index, generate_catalog, match_catalog
from src.polytope.chamber import (
    ACTUAL,
    IDEAL,
    all_vertices,
    apply_matrix,
    build_chamber,
    duality_image_set,
    duality_matrix,
    lorentz_form_matrix,
)
from src.polytope.value_table import value_table_n7
from src.utils.errors import GramRelationError, UnsupportedParameterError


@pytest.fixture(scope="module")
def fano():
    return build_chamber(7)


@pytest.fixture(scope="module")
def fano_vertices(fano):
    return all_vertices(fano)


@pytest.fixture(scope="module")
def fano_duality(fano):
    return duality_matrix(fano, standard_polarity(fano.plane))


@pytest.fixture(scope="module")
def fano_catalog(fano, fano_duality):
    return generate_catalog(fano, fano_duality)


def test_chamber_walls(fano):
    assert len(fano.wall_roots) == 14
    assert [norm(w) for w in fano.point_walls] == [1] * 7
    assert [norm(w) for w in fano.line_walls] == [2] * 7
    assert fano.contains(LatticeVector.basis(7, 0))


def test_unsupported_chamber():
    with pytest.raises(UnsupportedParameterError):
        build_chamber(9)


def test_corrupted_line_root_is_rejected(monkeypatch):
    def wrong_line_root(n, points):
        return LatticeVector.from_e0_and_points(n, 1, {p + 1: -1 for p in points[:2]})

    monkeypatch.setattr(chamber_module, "line_root", wrong_line_root)
    with pytest.raises(GramRelationError):
        build_chamber(7)


def test_fano_vertex_census(fano, fano_vertices):
    counts = Counter((v.status, v.type_label) for v in fano_vertices)
    assert {t: c for (s, t), c in counts.items() if s == ACTUAL} == ref.FANO_ACTUAL_VERTEX_TYPES
    assert {t: c for (s, t), c in counts.items() if s == IDEAL} == ref.FANO_IDEAL_VERTEX_TYPES
    for v in fano_vertices:
        assert fano.contains(v.vector)
        assert v.vector.is_primitive()
        assert (norm(v.vector) < 0) if v.status == ACTUAL else (norm(v.vector) == 0)
        assert all(inner(v.vector, fano.wall_roots[i]) == 0 for i in v.subset)


def test_fano_vertices_are_deterministic_across_workers(fano, fano_vertices):
    assert all_vertices(fano, workers=2) == fano_vertices


def test_duality_is_a_similarity(fano, fano_duality):
    j = lorentz_form_matrix(7)
    assert fano_duality.T * j * fano_duality == 2 * j
    assert fano_duality * fano_duality == 2 * sympy.eye(8)
    assert apply_matrix(fano_duality, LatticeVector.basis(7, 0)) == LatticeVector.of(3, -1, -1, -1, -1, -1, -1, -1)


def test_duality_permutes_vertices(fano_duality, fano_vertices):
    vectors = [v.vector for v in fano_vertices]
    assert duality_image_set(fano_duality, vectors) == set(vectors)


def test_fano_catalog_matches_exactly(fano, fano_vertices, fano_catalog):
    families, notes = fano_catalog
    report = match_catalog(fano, families, fano_vertices, notes)
    assert report.exact
    assert report.unaccounted_vertices == []
    assert [f.family for f in report.families] == ["v_P", "v_L", "v_{p,l}", "v_{l,p}", "u_p", "u_l"]
    assert {f.side for f in report.families} == {PRIMAL, DUAL}


def test_family_index_covers_every_vertex(fano_vertices, fano_catalog):
    families, _ = fano_catalog
    index = family_index(families)
    assert {v.vector for v in fano_vertices} == set(index)
    assert index[LatticeVector.basis(7, 0)] == "v_P"


def test_gosset_value_table(fano_catalog):
    table = value_table_n7(fano_catalog[0])
    assert table.exact
    assert table.weyl_values == [ref.GOSSET_WEYL_VALUE]
    by_key = {(r.vertex_family, r.wall_family): r.values for r in table.rows}
    assert by_key[("v_{l,p}", "3e_0-Σe-e_p")] == [-4, -3, -2]
    assert by_key[("u_l", "e_p")] == [-1, 0]


def test_cache_round_trip(tmp_path, fano, fano_vertices):
    calls = []

    def compute():
        calls.append(1)
        return fano_vertices

    first = cached_vertices(fano, compute, tmp_path)
    second = cached_vertices(fano, compute, tmp_path)
    assert first == second == fano_vertices
    assert len(calls) == 1
    assert cache_path(tmp_path, fano).name.startswith("vertices_n7_")


def test_cache_rejects_vertices_outside_the_chamber(tmp_path, fano, fano_vertices):
    path = save_vertices(tmp_path, fano, fano_vertices)
    stored = json.loads(path.read_text(encoding="utf-8"))
    stored["vertices"][0]["vertex"] = [1, 1, 0, 0, 0, 0, 0, 0]
    path.write_text(json.dumps(stored), encoding="utf-8")
    assert load_vertices(tmp_path, fano) is None


def test_cache_ignores_damaged_files(tmp_path, fano):
    path = cache_path(tmp_path, fano)
    path.write_text("{not json", encoding="utf-8")
    assert load_vertices(tmp_path, fano) is None


def test_disabled_cache_always_computes(fano, fano_vertices):
    calls = []
    cached_vertices(fano, lambda: calls.append(1) or fano_vertices, None)
    cached_vertices(fano, lambda: calls.append(1) or fano_vertices, None)
    assert len(calls) == 2


@pytest.fixture(scope="module")
def pg3():
    return build_chamber(13)


@pytest.fixture(scope="module")
def pg3_vertices(pg3):
    return all_vertices(pg3)


@pytest.mark.slow
def test_pg3_vertex_census(pg3_vertices):
    counts = Counter((v.status, v.type_label) for v in pg3_vertices)
    assert {t: c for (s, t), c in counts.items() if s == ACTUAL} == ref.PG3_ACTUAL_VERTEX_TYPES
    assert {t: c for (s, t), c in counts.items() if s == IDEAL} == ref.PG3_IDEAL_VERTEX_TYPES
    assert sum(1 for v in pg3_vertices if v.status == IDEAL) == ref.PG3_IDEAL_TOTAL


@pytest.mark.slow
def test_pg3_catalog_and_duality(pg3, pg3_vertices):
    a = duality_matrix(pg3, standard_polarity(pg3.plane))
    assert a * a == 3 * sympy.eye(14)
    vectors = [v.vector for v in pg3_vertices]
    assert duality_image_set(a, vectors) == set(vectors)
    families, notes = generate_catalog(pg3, a)
    assert match_catalog(pg3, families, pg3_vertices, notes).exact
    assert notes == []


def test_pg3_dual_closed_forms_agree_with_the_duality(pg3):
    families, notes = generate_catalog(pg3, duality_matrix(pg3, standard_polarity(pg3.plane)))
    assert notes == []
    assert all(f.literal for f in families)
    sizes = Counter()
    for f in families:
        if f.status == ACTUAL:
            sizes[f.type_label] += len(f.members)
    assert dict(sizes) == ref.PG3_ACTUAL_VERTEX_TYPES

    by_name = {f.name: f for f in families}
    shapes = {
        "v_{k,lmn}": (7, {4: 1, 3: 3, 1: 3}),
        "v_{k,lm,n}": (9, {5: 1, 4: 2, 3: 1, 2: 2, 1: 1}),
        "v_{k,l,mn}": (6, {3: 2, 2: 3, 1: 3}),
    }
    for name, (x0, multiset) in shapes.items():
        members = by_name[name].members
        assert len(members) == len(by_name[by_name[name].partner].members)
        for v in members:
            assert v.coords[0] == x0
            assert Counter(abs(c) for c in v.coords[1:] if c) == multiset
            assert norm(v) < 0
