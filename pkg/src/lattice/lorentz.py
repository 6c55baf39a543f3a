"""
Exact arithmetic in the Lorentzian lattices Z^(n,1).

The form is (x, y) = -x_0*y_0 + sum_p x_p*y_p. Everything is integer or
Fraction valued; no floating point is used anywhere in this module.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence

from src.utils.errors import (
    DimensionMismatchError,
    KernelDimensionError,
    NonIntegralReflectionError,
    ZeroNormRootError,
)


@dataclass(frozen=True)
class LatticeVector:
    """Integer vector (x_0, x_1, ..., x_n) of Z^(n,1)."""

    coords: tuple[int, ...]

    def __post_init__(self):
        if len(self.coords) < 2:
            raise DimensionMismatchError("a Lorentzian vector needs x_0 and at least one x_p")
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    @property
    def n(self) -> int:
        return len(self.coords) - 1

    @classmethod
    def of(cls, *coords: int) -> LatticeVector:
        return cls(tuple(coords))

    @classmethod
    def zero(cls, n: int) -> LatticeVector:
        return cls((0,) * (n + 1))

    @classmethod
    def basis(cls, n: int, index: int) -> LatticeVector:
        """e_index, with e_0 the timelike vector."""
        coords = [0] * (n + 1)
        coords[index] = 1
        return cls(tuple(coords))

    @classmethod
    def from_e0_and_points(cls, n: int, x0: int, coefficients: dict[int, int]) -> LatticeVector:
        """x0*e_0 + sum coefficients[p]*e_p, with p running over 1..n."""
        coords = [0] * (n + 1)
        coords[0] = x0
        for p, c in coefficients.items():
            coords[p] += c
        return cls(tuple(coords))

    def __add__(self, other: LatticeVector) -> LatticeVector:
        _check_same_dimension(self, other)
        return LatticeVector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: LatticeVector) -> LatticeVector:
        _check_same_dimension(self, other)
        return LatticeVector(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> LatticeVector:
        return LatticeVector(tuple(-a for a in self.coords))

    def __rmul__(self, scalar: int) -> LatticeVector:
        return LatticeVector(tuple(scalar * a for a in self.coords))

    def content(self) -> int:
        return reduce(gcd, self.coords, 0)

    def is_primitive(self) -> bool:
        return self.content() == 1

    def to_json(self) -> list[int]:
        return list(self.coords)

    def __str__(self) -> str:
        return "[" + ", ".join(str(c) for c in self.coords) + "]"


@dataclass(frozen=True)
class SymMatrix:
    """Square symmetric matrix of exact rationals."""

    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(Fraction(x) for x in row) for row in self.entries)
        size = len(rows)
        if any(len(row) != size for row in rows):
            raise DimensionMismatchError("matrix is not square")
        for i in range(size):
            for j in range(i + 1, size):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"matrix is not symmetric at ({i}, {j})")
        object.__setattr__(self, "entries", rows)

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        i, j = index
        return self.entries[i][j]

    def submatrix(self, indices: Sequence[int]) -> SymMatrix:
        return SymMatrix(tuple(tuple(self.entries[i][j] for j in indices) for i in indices))

    def congruent(self, basis_change: Sequence[Sequence[int]]) -> SymMatrix:
        """B^T M B."""
        b = [list(row) for row in basis_change]
        size = self.size
        mb = [[sum(self.entries[i][k] * b[k][j] for k in range(size)) for j in range(size)] for i in range(size)]
        return SymMatrix(
            tuple(tuple(sum(b[k][i] * mb[k][j] for k in range(size)) for j in range(size)) for i in range(size))
        )


def _check_same_dimension(x: LatticeVector, y: LatticeVector):
    if len(x.coords) != len(y.coords):
        raise DimensionMismatchError(f"dimension mismatch: Z^({x.n},1) vs Z^({y.n},1)")


def inner(x: LatticeVector, y: LatticeVector) -> int:
    _check_same_dimension(x, y)
    return -x.coords[0] * y.coords[0] + sum(a * b for a, b in zip(x.coords[1:], y.coords[1:]))


def norm(x: LatticeVector) -> int:
    return inner(x, x)


def reflect(alpha: LatticeVector, x: LatticeVector) -> LatticeVector:
    """s_alpha(x) = x - 2(x, alpha) alpha / alpha^2."""
    a2 = norm(alpha)
    if a2 == 0:
        raise ZeroNormRootError(f"cannot reflect in the null vector {alpha}")
    numerator = 2 * inner(x, alpha)
    if numerator % a2:
        raise NonIntegralReflectionError(
            f"s_{alpha} does not preserve the lattice at {x}: 2(x,a)/a^2 = {Fraction(numerator, a2)}"
        )
    return x - (numerator // a2) * alpha


def primitive(x: LatticeVector) -> LatticeVector:
    """Primitive representative on the same ray: gcd 1, x_0 > 0 (or first nonzero coordinate > 0)."""
    c = x.content()
    if c == 0:
        raise ValueError("the zero vector has no primitive representative")
    coords = [a // c for a in x.coords]
    lead = coords[0] if coords[0] != 0 else next(a for a in coords if a != 0)
    if lead < 0:
        coords = [-a for a in coords]
    return LatticeVector(tuple(coords))


def gram_matrix(vectors: Sequence[LatticeVector]) -> SymMatrix:
    return SymMatrix(tuple(tuple(inner(u, v) for v in vectors) for u in vectors))


def _reduce_row(row: list[int]) -> list[int]:
    g = reduce(gcd, row, 0)
    return [a // g for a in row] if g > 1 else row


def solve_primitive_kernel(rows: Iterable[LatticeVector], n: int) -> LatticeVector:
    """
    Primitive vector v with (v, r) = 0 for every r in rows, oriented x_0 > 0.

    Args:
        rows: Roots whose Lorentzian orthogonal complement is sought.
        n: The lattice is Z^(n,1).

    Returns:
        The unique primitive kernel vector.

    Raises:
        KernelDimensionError: When the complement is not a line.
    """
    # (v, r) = sum_j (J r)_j v_j with J = diag(-1, 1, ..., 1)
    matrix = []
    for r in rows:
        if r.n != n:
            raise DimensionMismatchError(f"row {r} does not live in Z^({n},1)")
        matrix.append(_reduce_row([-r.coords[0], *r.coords[1:]]))

    width = n + 1
    pivots: list[int] = []
    top = 0
    for col in range(width):
        candidates = [i for i in range(top, len(matrix)) if matrix[i][col] != 0]
        if not candidates:
            continue
        best = min(candidates, key=lambda i: abs(matrix[i][col]))
        matrix[top], matrix[best] = matrix[best], matrix[top]
        pivot_row = matrix[top]
        a = pivot_row[col]
        for i in range(len(matrix)):
            if i == top or matrix[i][col] == 0:
                continue
            b = matrix[i][col]
            matrix[i] = _reduce_row([a * x - b * y for x, y in zip(matrix[i], pivot_row)])
        pivots.append(col)
        top += 1
        if top == len(matrix):
            break

    free = [col for col in range(width) if col not in pivots]
    if len(free) != 1:
        raise KernelDimensionError(len(free))
    f = free[0]
    scale = lcm(*(abs(matrix[i][c]) for i, c in enumerate(pivots))) if pivots else 1
    solution = [0] * width
    solution[f] = scale
    for i, c in enumerate(pivots):
        solution[c] = -matrix[i][f] * scale // matrix[i][c]
    return primitive(LatticeVector(tuple(solution)))


def signature(m: SymMatrix) -> tuple[int, int, int]:
    """
    Sylvester inertia (n_plus, n_zero, n_minus) by exact congruence elimination.

    A nonzero diagonal pivot is used when available, otherwise a hyperbolic
    2x2 block [[0, b], [b, 0]], which contributes one positive and one
    negative direction.
    """
    a = [list(row) for row in m.entries]
    n_plus = n_zero = n_minus = 0
    while a:
        size = len(a)
        k = next((i for i in range(size) if a[i][i] != 0), None)
        if k is not None:
            p = a[k][k]
            if p > 0:
                n_plus += 1
            else:
                n_minus += 1
            rest = [i for i in range(size) if i != k]
            a = [[a[i][j] - a[i][k] * a[k][j] / p for j in rest] for i in rest]
            continue
        pair = next(((i, j) for i in range(size) for j in range(i + 1, size) if a[i][j] != 0), None)
        if pair is None:
            n_zero += size
            break
        i, j = pair
        b = a[i][j]
        n_plus += 1
        n_minus += 1
        rest = [r for r in range(size) if r not in (i, j)]
        a = [[a[r][s] - (a[r][i] * a[j][s] + a[r][j] * a[i][s]) / b for s in rest] for r in rest]
    return n_plus, n_zero, n_minus
