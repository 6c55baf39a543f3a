from collections import Counter

import pytest

from src.diagrams.enumeration import (
    connected_elliptic_sets,
    connected_parabolic_sets,
    enum_max_elliptic,
    enum_max_parabolic,
    lanner_sets,
    mask_of,
    nodes_of,
)
from src.diagrams.gram_diagram import (
    ELLIPTIC,
    LANNER,
    OTHER,
    PARABOLIC,
    GramDiagram,
    classify,
    format_type_label,
    parse_type_label,
    subset_determinant,
)
from src.diagrams.orbits import orbit_census
from src.diagrams.vinberg import vinberg_finite_volume
from src.lattice.lorentz import SymMatrix
from src.polytope.chamber import build_chamber
from src.utils.errors import GroupAutomorphismError


def diagram(rows, rank):
    return GramDiagram(gram=SymMatrix(tuple(tuple(r) for r in rows)), hyperbolic_rank=rank)


@pytest.fixture(scope="module")
def fano_diagram():
    return build_chamber(7).diagram


def test_classify_small_diagrams():
    a2 = diagram([[2, -1], [-1, 2]], 2)
    assert classify(a2, [0, 1]).kind == ELLIPTIC
    assert classify(a2, [0, 1]).type_label == "A_2"

    affine_a2 = diagram([[2, -1, -1], [-1, 2, -1], [-1, -1, 2]], 2)
    c = classify(affine_a2, [0, 1, 2])
    assert (c.kind, c.rank) == (PARABOLIC, 2)

    lanner = diagram([[3, -2, -2], [-2, 3, -2], [-2, -2, 3]], 2)
    assert classify(lanner, [0, 1, 2]).kind == LANNER

    degenerate = diagram([[1, -1, -1], [-1, 1, -1], [-1, -1, 1]], 2)
    assert classify(degenerate, [0, 1, 2]).kind == OTHER


def test_d4_star_with_mixed_norms_is_parabolic():
    # centre of norm 3 joined to three norm-1 leaves, as at a line node of I_26
    star = diagram(
        [[3, -1, -1, -1], [-1, 1, 0, 0], [-1, 0, 1, 0], [-1, 0, 0, 1]],
        3,
    )
    c = classify(star, range(4))
    assert (c.kind, c.rank, c.type_label) == (PARABOLIC, 3, "D_4")
    assert subset_determinant(star, range(4)) == 0


def test_type_labels_round_trip():
    label = format_type_label(["A_3", "A_1", "A_3", "A_2", "A_3", "A_1"])
    assert label == "2A_1⊔A_2⊔3A_3"
    assert parse_type_label(label) == Counter({"A_1": 2, "A_2": 1, "A_3": 3})


def test_masks():
    assert nodes_of(mask_of([0, 3, 5])) == (0, 3, 5)
    assert mask_of([]) == 0


def test_connected_sets_of_a_path():
    path = diagram([[2, -1, 0], [-1, 2, -1], [0, -1, 2]], 3)
    assert connected_elliptic_sets(path) == [(0,), (0, 1), (0, 1, 2), (1,), (1, 2), (2,)]
    assert connected_parabolic_sets(path) == []


def test_lanner_sets_found_by_extension():
    lanner = diagram([[3, -2, -2], [-2, 3, -2], [-2, -2, 3]], 2)
    found, examined = lanner_sets(lanner)
    assert found == [(0, 1, 2)]
    assert examined >= 1


def test_fano_vertex_enumeration(fano_diagram):
    elliptic = enum_max_elliptic(fano_diagram)
    parabolic = enum_max_parabolic(fano_diagram)
    assert len(elliptic) == 58
    assert len(parabolic) == 14
    assert Counter(classify(fano_diagram, s).type_label for s in elliptic) == {"7A_1": 2, "A_1⊔3A_2": 56}
    assert {classify(fano_diagram, s).type_label for s in parabolic} == {"3A_3"}


def test_enumeration_does_not_depend_on_workers(fano_diagram):
    assert enum_max_elliptic(fano_diagram, workers=2) == enum_max_elliptic(fano_diagram, workers=1)


def test_vinberg_passes_for_fano_chamber(fano_diagram):
    cert = vinberg_finite_volume(fano_diagram)
    assert cert.passed
    assert cert.lanner_subsets == []
    assert cert.extension_types() == {"3A_3": len(cert.parabolic_extensions)}


def test_vinberg_reports_lanner_subdiagram():
    cert = vinberg_finite_volume(diagram([[3, -2, -2], [-2, 3, -2], [-2, -2, 3]], 2))
    assert not cert.passed
    assert cert.lanner_subsets == [[0, 1, 2]]
    assert cert.failures


def test_vinberg_reports_parabolic_without_extension():
    # affine A_1 pair plus a node far away: rank 1 parabolic, but n - 1 = 2 is never reached
    d = diagram([[2, -2, 0], [-2, 2, 0], [0, 0, 2]], 3)
    cert = vinberg_finite_volume(d)
    assert not cert.passed
    assert any("no extension" in f for f in cert.failures)


def test_orbit_census_on_a_hexagon():
    rows = [[2 if i == j else (-1 if abs(i - j) in (1, 5) else 0) for j in range(6)] for i in range(6)]
    hexagon = diagram(rows, 5)
    rotation = [1, 2, 3, 4, 5, 0]
    pairs = [(i, (i + 1) % 6) for i in range(6)] + [(i, (i + 2) % 6) for i in range(6)]
    census = {e.type_label: e for e in orbit_census(hexagon, pairs, [rotation])}
    assert census["A_2"].orbit_count == 1
    assert census["2A_1"].orbit_sizes == [6]


def test_orbit_census_rejects_non_automorphisms():
    path = diagram([[2, -1, 0], [-1, 2, -1], [0, -1, 2]], 3)
    with pytest.raises(GroupAutomorphismError):
        orbit_census(path, [(0,), (1,), (2,)], [[1, 0, 2]])
