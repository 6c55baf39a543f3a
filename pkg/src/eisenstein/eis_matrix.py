"""Rectangular matrices over the Eisenstein integers."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from src.eisenstein.eis_int import ONE, ZERO, EisInt, exact_div
from src.utils.errors import DimensionMismatchError


@dataclass(frozen=True)
class EisMatrix:
    rows: tuple[tuple[EisInt, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(EisInt.of(x) for x in row) for row in self.rows)
        if rows and any(len(row) != len(rows[0]) for row in rows):
            raise DimensionMismatchError("ragged Eisenstein matrix")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def of(cls, rows: Sequence[Sequence[EisInt | int]]) -> EisMatrix:
        return cls(tuple(tuple(row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> EisMatrix:
        return cls(tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0]) if self.rows else 0

    def __getitem__(self, index: tuple[int, int]) -> EisInt:
        i, j = index
        return self.rows[i][j]

    def conj_transpose(self) -> EisMatrix:
        m, n = self.shape
        return EisMatrix(tuple(tuple(self.rows[i][j].conj() for i in range(m)) for j in range(n)))

    def transpose(self) -> EisMatrix:
        m, n = self.shape
        return EisMatrix(tuple(tuple(self.rows[i][j] for i in range(m)) for j in range(n)))

    def is_hermitian(self) -> bool:
        return self.shape[0] == self.shape[1] and self == self.conj_transpose()

    def __matmul__(self, other: EisMatrix) -> EisMatrix:
        if self.shape[1] != other.shape[0]:
            raise DimensionMismatchError(f"cannot multiply {self.shape} by {other.shape}")
        columns = list(zip(*other.rows))
        return EisMatrix(
            tuple(tuple(_dot(row, col) for col in columns) for row in self.rows)
        )

    def submatrix(self, row_indices: Sequence[int]) -> EisMatrix:
        return EisMatrix(tuple(self.rows[i] for i in row_indices))

    def is_zero(self) -> bool:
        return all(x.is_zero() for row in self.rows for x in row)

    def determinant(self) -> EisInt:
        """Bareiss fraction-free elimination; every division is exact."""
        n, m = self.shape
        if n != m:
            raise DimensionMismatchError("determinant of a non-square matrix")
        a = [list(row) for row in self.rows]
        sign = ONE
        previous = ONE
        for k in range(n - 1):
            if a[k][k].is_zero():
                swap = next((i for i in range(k + 1, n) if not a[i][k].is_zero()), None)
                if swap is None:
                    return ZERO
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = exact_div(a[i][j] * a[k][k] - a[i][k] * a[k][j], previous)
            previous = a[k][k]
        return sign * a[n - 1][n - 1] if n else ONE

    def to_json(self) -> list[list[list[int]]]:
        return [[x.to_json() for x in row] for row in self.rows]


def _dot(u: Sequence[EisInt], v: Sequence[EisInt]) -> EisInt:
    acc = ZERO
    for x, y in zip(u, v):
        acc = acc + x * y
    return acc


def hermitian_product(x: Sequence[EisInt], y: Sequence[EisInt], gram: EisMatrix) -> EisInt:
    """<x, y> = x G conj(y)^T, linear in x."""
    acc = ZERO
    for i, xi in enumerate(x):
        if xi.is_zero():
            continue
        row = gram.rows[i]
        for j, yj in enumerate(y):
            if not yj.is_zero() and not row[j].is_zero():
                acc = acc + xi * row[j] * yj.conj()
    return acc
