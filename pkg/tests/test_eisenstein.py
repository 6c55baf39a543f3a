import random
from functools import reduce
from math import gcd

import pytest
import sympy

from config.settings import settings
from src.eisenstein.eis_int import (
    OMEGA,
    ONE,
    THETA,
    UNITS,
    ZERO,
    EisInt,
    canonical_associate,
    eis_divmod,
    eis_gcd,
    exact_div,
)
from src.eisenstein.eis_matrix import EisMatrix, hermitian_product
from src.eisenstein.normal_forms import (
    EISENSTEIN,
    INTEGERS,
    hermite_normal_form,
    identity,
    mat_mul,
    smith_normal_form,
)
from src.utils.errors import DimensionMismatchError, EisensteinDivisionError


def random_eis(rng, bound=20):
    return EisInt(rng.randint(-bound, bound), rng.randint(-bound, bound))


def random_matrix(rng, rows, cols, bound=9):
    return [[rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)]


def test_arithmetic():
    assert OMEGA * OMEGA * OMEGA == ONE
    assert ONE + OMEGA + OMEGA * OMEGA == ZERO
    assert THETA.norm() == 3
    assert THETA.conj() == -THETA
    assert all(u.is_unit() for u in UNITS)
    assert len(set(UNITS)) == 6
    assert str(THETA) == "1+2ω"


@pytest.mark.parametrize(
    "a, b, q",
    [
        (EisInt(3), THETA, -THETA),
        (EisInt(2), ONE + OMEGA, EisInt(0, -2)),
    ],
)
def test_exact_quotients(a, b, q):
    assert eis_divmod(a, b) == (q, ZERO)
    assert exact_div(a, b) == q


def test_remainder_law_on_random_pairs():
    rng = random.Random(2024)
    for _ in range(settings.soak_cases):
        a = random_eis(rng, 1000)
        b = random_eis(rng, 50)
        if b.is_zero():
            continue
        q, r = eis_divmod(a, b)
        assert a == q * b + r
        assert r.norm() < b.norm()


def test_division_by_zero():
    with pytest.raises(EisensteinDivisionError):
        eis_divmod(ONE, ZERO)
    with pytest.raises(EisensteinDivisionError):
        exact_div(EisInt(2), THETA)


def test_gcd_is_a_canonical_common_divisor():
    rng = random.Random(5)
    for _ in range(200):
        a, b, c = random_eis(rng), random_eis(rng), random_eis(rng)
        if c.is_zero() or (a.is_zero() and b.is_zero()):
            continue
        g = eis_gcd(a * c, b * c)
        assert canonical_associate(g)[0] == g
        assert (a * c) % g == ZERO and (b * c) % g == ZERO
        assert (g % canonical_associate(c)[0]) == ZERO
    assert eis_gcd(EisInt(3), THETA) == canonical_associate(THETA)[0]


def test_canonical_associate_picks_one_unit():
    rng = random.Random(11)
    for _ in range(200):
        x = random_eis(rng)
        if x.is_zero():
            continue
        y, u = canonical_associate(x)
        assert y == u * x
        assert y.b >= 0 and y.a > y.b
        assert {canonical_associate(v * x)[0] for v in UNITS} == {y}
    assert canonical_associate(ZERO) == (ZERO, ONE)


def test_integer_smith_form_against_determinant_and_content():
    rng = random.Random(3)
    for _ in range(20):
        a = random_matrix(rng, 4, 4)
        det = int(sympy.Matrix(a).det())
        snf = smith_normal_form(INTEGERS, a)
        assert mat_mul(INTEGERS, mat_mul(INTEGERS, snf.p, a), snf.q) == snf.d
        assert mat_mul(INTEGERS, snf.p, snf.p_inv) == identity(INTEGERS, 4)
        assert mat_mul(INTEGERS, snf.q, snf.q_inv) == identity(INTEGERS, 4)
        invariants = snf.invariants()
        assert all(d > 0 for d in invariants)
        assert all(invariants[i + 1] % invariants[i] == 0 for i in range(len(invariants) - 1))
        if det:
            assert reduce(lambda x, y: x * y, invariants) == abs(det)
            assert invariants[0] == reduce(gcd, (x for row in a for x in row))
        else:
            assert snf.rank < 4


def test_smith_form_of_a_rank_deficient_rectangle():
    a = [[2, 4, 6], [1, 2, 3]]
    snf = smith_normal_form(INTEGERS, a)
    assert snf.rank == 1
    assert snf.invariants() == [1]


def test_integer_hermite_form_is_unique_under_row_shuffles():
    rng = random.Random(8)
    for _ in range(10):
        a = random_matrix(rng, 4, 5)
        base = hermite_normal_form(INTEGERS, a)
        assert mat_mul(INTEGERS, base.u, a) == base.h
        assert mat_mul(INTEGERS, base.u, base.u_inv) == identity(INTEGERS, 4)
        for row, col in enumerate(base.pivots):
            assert base.h[row][col] > 0
        shuffled = a[:]
        rng.shuffle(shuffled)
        assert hermite_normal_form(INTEGERS, shuffled).h == base.h


def test_eisenstein_hermite_and_smith_forms():
    rng = random.Random(13)
    a = [[random_eis(rng, 6) for _ in range(4)] for _ in range(3)]
    h = hermite_normal_form(EISENSTEIN, a)
    assert mat_mul(EISENSTEIN, h.u, a) == h.h
    for row, col in enumerate(h.pivots):
        pivot = h.h[row][col]
        assert canonical_associate(pivot)[0] == pivot
        for above in range(row):
            assert h.h[above][col].norm() < pivot.norm()
    shuffled = [a[2], a[0], a[1]]
    assert hermite_normal_form(EISENSTEIN, shuffled).h == h.h

    snf = smith_normal_form(EISENSTEIN, a)
    assert mat_mul(EISENSTEIN, mat_mul(EISENSTEIN, snf.p, a), snf.q) == snf.d
    d = snf.invariants()
    assert all(d[i + 1] % d[i] == ZERO for i in range(len(d) - 1))


def test_smith_form_of_theta_diagonal():
    snf = smith_normal_form(EISENSTEIN, [[EisInt(3), ZERO], [ZERO, THETA]])
    assert snf.invariants() == [canonical_associate(THETA)[0], EisInt(3)]


def test_determinant_is_multiplicative():
    rng = random.Random(21)
    for _ in range(20):
        x = EisMatrix.of([[random_eis(rng, 4) for _ in range(3)] for _ in range(3)])
        y = EisMatrix.of([[random_eis(rng, 4) for _ in range(3)] for _ in range(3)])
        assert (x @ y).determinant() == x.determinant() * y.determinant()


def test_determinant_with_zero_pivot():
    m = EisMatrix.of([[0, 1, 0], [1, 0, 0], [0, 0, THETA]])
    assert m.determinant() == -THETA
    assert EisMatrix.of([[1, 2], [2, 4]]).determinant() == ZERO
    assert EisMatrix.identity(4).determinant() == ONE


def test_hermitian_matrices():
    h = EisMatrix.of([[3, THETA], [THETA.conj(), 3]])
    assert h.is_hermitian()
    assert h.determinant() == EisInt(6)
    assert not EisMatrix.of([[3, THETA], [THETA, 3]]).is_hermitian()
    x, y = [ONE, OMEGA], [THETA, ONE]
    assert hermitian_product(x, y, h) == hermitian_product(y, x, h).conj()
    assert hermitian_product(x, x, h).is_rational()


def test_shape_errors():
    with pytest.raises(DimensionMismatchError):
        EisMatrix.of([[1, 2], [3]])
    with pytest.raises(DimensionMismatchError):
        EisMatrix.of([[1, 2]]) @ EisMatrix.of([[1, 2]])
    with pytest.raises(DimensionMismatchError):
        EisMatrix.of([[1, 2]]).determinant()
