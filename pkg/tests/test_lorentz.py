import random

import pytest
import sympy

from src.lattice.lorentz import (
    LatticeVector,
    SymMatrix,
    gram_matrix,
    inner,
    norm,
    primitive,
    reflect,
    signature,
    solve_primitive_kernel,
)
from src.utils.errors import (
    DimensionMismatchError,
    KernelDimensionError,
    NonIntegralReflectionError,
    ZeroNormRootError,
)


def e(n, i):
    return LatticeVector.basis(n, i)


def test_inner_on_basis():
    assert inner(e(7, 0), e(7, 0)) == -1
    assert inner(e(7, 3), e(7, 3)) == 1
    assert inner(e(7, 0), e(7, 3)) == 0


def test_line_roots_of_the_fano_plane_have_norm_two():
    lines = [(1, 2, 3), (1, 4, 5), (2, 4, 6)]
    roots = [LatticeVector.from_e0_and_points(7, 1, {p: -1 for p in l}) for l in lines]
    assert [norm(r) for r in roots] == [2, 2, 2]
    # two distinct lines of PG(2,2) meet in one point
    assert inner(roots[0], roots[1]) == 0


def test_inner_rejects_mismatched_dimensions():
    with pytest.raises(DimensionMismatchError):
        inner(e(7, 0), e(13, 0))


def test_reflect_examples():
    assert reflect(e(7, 7), e(7, 7)) == -e(7, 7)
    alpha0 = LatticeVector.of(1, -1, -1, -1, 0, 0, 0, 0)
    assert reflect(alpha0, e(7, 0)) == LatticeVector.of(2, -1, -1, -1, 0, 0, 0, 0)
    u = LatticeVector.of(4, -2, -2, -2, -1, -1, -1, -1)
    assert reflect(alpha0, u) == LatticeVector.of(2, 0, 0, 0, -1, -1, -1, -1)


def test_reflect_errors():
    null = LatticeVector.of(1, 1, 0)
    with pytest.raises(ZeroNormRootError):
        reflect(null, e(2, 1))
    # norm 3 root, (x, alpha) = 1
    alpha = LatticeVector.of(1, 1, 1, 1, 1)
    with pytest.raises(NonIntegralReflectionError):
        reflect(alpha, e(4, 1))


def test_reflection_is_an_isometric_involution():
    rng = random.Random(7)
    roots = [
        LatticeVector.of(1, -1, -1, -1, 0, 0, 0, 0),
        LatticeVector.of(0, 1, -1, 0, 0, 0, 0, 0),
        LatticeVector.of(0, 0, 0, 0, 0, 0, 0, 1),
        LatticeVector.of(1, -1, -1, 0, 0, 0, 0, 0),
    ]
    for _ in range(200):
        x = LatticeVector(tuple(rng.randint(-9, 9) for _ in range(8)))
        y = LatticeVector(tuple(rng.randint(-9, 9) for _ in range(8)))
        alpha = rng.choice(roots)
        assert reflect(alpha, reflect(alpha, x)) == x
        assert inner(reflect(alpha, x), reflect(alpha, y)) == inner(x, y)


def test_primitive_orients_and_divides():
    assert primitive(LatticeVector.of(-6, 2, 4)) == LatticeVector.of(3, -1, -2)
    assert primitive(LatticeVector.of(0, -3, 6)) == LatticeVector.of(0, 1, -2)


def test_kernel_of_all_point_walls_is_e0():
    assert solve_primitive_kernel([e(13, p) for p in range(1, 14)], 13) == e(13, 0)


def test_kernel_of_the_fano_line_walls():
    lines = [(1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 5, 6)]
    rows = [LatticeVector.from_e0_and_points(7, 1, {p: -1 for p in l}) for l in lines]
    v = solve_primitive_kernel(rows, 7)
    assert v == LatticeVector.of(3, -1, -1, -1, -1, -1, -1, -1)
    assert all(inner(v, r) == 0 for r in rows)


def test_kernel_dimension_error_carries_dimension():
    with pytest.raises(KernelDimensionError) as info:
        solve_primitive_kernel([LatticeVector.of(0, 1, -1)], 2)
    assert info.value.dimension == 2


def test_kernel_postconditions_on_random_hyperplanes():
    rng = random.Random(11)
    for _ in range(50):
        rows = [LatticeVector(tuple(rng.randint(-4, 4) for _ in range(5))) for _ in range(4)]
        if sympy.Matrix([r.coords for r in rows]).rank() != 4:
            continue
        v = solve_primitive_kernel(rows, 4)
        assert v.is_primitive()
        assert all(inner(v, r) == 0 for r in rows)
        first = next(c for c in v.coords if c)
        assert first > 0


def test_signature_examples():
    assert signature(SymMatrix(((1, 0), (0, 1)))) == (2, 0, 0)
    assert signature(SymMatrix(((1, 0), (0, -1)))) == (1, 0, 1)
    norms = (1, 3, 1, 3, 1)
    path = tuple(
        tuple(norms[i] if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(5)) for i in range(5)
    )
    assert signature(SymMatrix(path)) == (4, 1, 0)


def test_signature_with_zero_diagonal():
    assert signature(SymMatrix(((0, 1), (1, 0)))) == (1, 0, 1)
    assert signature(SymMatrix(((0, 0), (0, 0)))) == (0, 2, 0)


def test_signature_is_a_congruence_invariant():
    rng = random.Random(3)
    base = gram_matrix([e(4, i) for i in range(5)])
    for _ in range(30):
        b = [[(1 if i == j else rng.randint(-2, 2)) if j >= i else 0 for j in range(5)] for i in range(5)]
        assert signature(base.congruent(b)) == (4, 0, 1)


def _sign_changes(coefficients):
    signs = [c > 0 for c in coefficients if c != 0]
    return sum(a != b for a, b in zip(signs, signs[1:]))


def test_signature_matches_characteristic_polynomial():
    # real-rooted polynomial: Descartes' rule counts positive roots exactly
    x = sympy.Symbol("x")
    rng = random.Random(5)
    for _ in range(20):
        a = [[rng.randint(-3, 3) for _ in range(4)] for _ in range(4)]
        sym = [[a[i][j] + a[j][i] for j in range(4)] for i in range(4)]
        poly = sympy.Matrix(sym).charpoly(x)
        coefficients = poly.all_coeffs()
        zero = len(coefficients) - 1 - max(i for i, c in enumerate(coefficients) if c != 0)
        plus = _sign_changes(coefficients)
        minus = _sign_changes(sympy.Poly(poly.as_expr().subs(x, -x), x).all_coeffs())
        assert signature(SymMatrix(tuple(map(tuple, sym)))) == (plus, zero, minus)
