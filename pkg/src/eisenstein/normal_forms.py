"""
Hermite and Smith normal forms over a Euclidean ring, with transforms.

The same code runs over Z and over the Eisenstein integers E; the ring is
passed in as a ``EuclideanRing`` describing its zero, one, division with
remainder, size function and canonical associates. Matrices are lists of
rows.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Generic, TypeVar

from src.eisenstein.eis_int import ONE, ZERO, EisInt, canonical_associate, eis_divmod, unit_inverse

T = TypeVar("T")
Matrix = list[list[Any]]


@dataclass(frozen=True)
class EuclideanRing(Generic[T]):
    name: str
    zero: T
    one: T
    divmod: Callable[[T, T], tuple[T, T]]
    size: Callable[[T], int]
    # x -> (canonical associate u*x, u)
    normalize: Callable[[T], tuple[T, T]]
    unit_inverse: Callable[[T], T]

    def is_zero(self, x: T) -> bool:
        return self.size(x) == 0

    def is_unit(self, x: T) -> bool:
        return self.size(x) == 1


def _int_normalize(x: int) -> tuple[int, int]:
    return (x, 1) if x >= 0 else (-x, -1)


INTEGERS: EuclideanRing[int] = EuclideanRing(
    name="Z",
    zero=0,
    one=1,
    divmod=divmod,
    size=abs,
    normalize=_int_normalize,
    unit_inverse=lambda u: u,
)

EISENSTEIN: EuclideanRing[EisInt] = EuclideanRing(
    name="E",
    zero=ZERO,
    one=ONE,
    divmod=eis_divmod,
    size=EisInt.norm,
    normalize=canonical_associate,
    unit_inverse=unit_inverse,
)


def identity(ring: EuclideanRing, n: int) -> Matrix:
    return [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)]


def mat_mul(ring: EuclideanRing, x: Matrix, y: Matrix) -> Matrix:
    if not x or not y:
        return [[] for _ in x]
    cols = len(y[0])
    out = []
    for row in x:
        new = []
        for j in range(cols):
            acc = ring.zero
            for k, value in enumerate(row):
                acc = acc + value * y[k][j]
            new.append(acc)
        out.append(new)
    return out


class _Tracked:
    """A matrix with left (P, P^-1) and right (Q, Q^-1) transforms kept in step: D = P A Q."""

    def __init__(self, ring: EuclideanRing, a: Matrix, track_columns: bool = True):
        self.ring = ring
        self.m = [list(row) for row in a]
        self.rows = len(a)
        self.cols = len(a[0]) if a else 0
        self.p = identity(ring, self.rows)
        self.p_inv = identity(ring, self.rows)
        self.track_columns = track_columns
        if track_columns:
            self.q = identity(ring, self.cols)
            self.q_inv = identity(ring, self.cols)

    # row i += c * row j
    def add_row(self, i: int, j: int, c):
        for target in (self.m, self.p):
            target[i] = [x + c * y for x, y in zip(target[i], target[j])]
        for row in self.p_inv:
            row[j] = row[j] - c * row[i]

    def swap_rows(self, i: int, j: int):
        if i == j:
            return
        for target in (self.m, self.p):
            target[i], target[j] = target[j], target[i]
        for row in self.p_inv:
            row[i], row[j] = row[j], row[i]

    def scale_row(self, i: int, u):
        inv = self.ring.unit_inverse(u)
        for target in (self.m, self.p):
            target[i] = [u * x for x in target[i]]
        for row in self.p_inv:
            row[i] = row[i] * inv

    # column i += c * column j
    def add_col(self, i: int, j: int, c):
        for row in self.m:
            row[i] = row[i] + c * row[j]
        if self.track_columns:
            for row in self.q:
                row[i] = row[i] + c * row[j]
            self.q_inv[j] = [x - c * y for x, y in zip(self.q_inv[j], self.q_inv[i])]

    def swap_cols(self, i: int, j: int):
        if i == j:
            return
        for row in self.m:
            row[i], row[j] = row[j], row[i]
        if self.track_columns:
            for row in self.q:
                row[i], row[j] = row[j], row[i]
            self.q_inv[i], self.q_inv[j] = self.q_inv[j], self.q_inv[i]

    def scale_col(self, i: int, u):
        for row in self.m:
            row[i] = u * row[i]
        if self.track_columns:
            inv = self.ring.unit_inverse(u)
            for row in self.q:
                row[i] = row[i] * u
            self.q_inv[i] = [inv * x for x in self.q_inv[i]]


@dataclass
class HermiteResult:
    h: Matrix
    u: Matrix
    u_inv: Matrix
    pivots: list[int]
    rank: int


def hermite_normal_form(ring: EuclideanRing, a: Matrix) -> HermiteResult:
    """
    Row Hermite form H = U A: row echelon, pivots canonical associates,
    entries above each pivot reduced modulo it. Unique for the row module of A.
    """
    t = _Tracked(ring, a, track_columns=False)
    top = 0
    pivots = []
    for col in range(t.cols):
        if top == t.rows:
            break
        while True:
            nonzero = [i for i in range(top, t.rows) if not ring.is_zero(t.m[i][col])]
            if not nonzero:
                break
            best = min(nonzero, key=lambda i: ring.size(t.m[i][col]))
            t.swap_rows(top, best)
            done = True
            for i in range(top + 1, t.rows):
                if ring.is_zero(t.m[i][col]):
                    continue
                q, r = ring.divmod(t.m[i][col], t.m[top][col])
                t.add_row(i, top, ring.zero - q)
                if not ring.is_zero(r):
                    done = False
            if done:
                break
        if ring.is_zero(t.m[top][col]):
            continue
        _, u = ring.normalize(t.m[top][col])
        t.scale_row(top, u)
        for i in range(top):
            q, _ = ring.divmod(t.m[i][col], t.m[top][col])
            t.add_row(i, top, ring.zero - q)
        pivots.append(col)
        top += 1
    return HermiteResult(h=t.m, u=t.p, u_inv=t.p_inv, pivots=pivots, rank=top)


@dataclass
class SmithResult:
    d: Matrix
    p: Matrix
    p_inv: Matrix
    q: Matrix
    q_inv: Matrix
    rank: int

    def invariants(self) -> list:
        return [self.d[i][i] for i in range(self.rank)]


def _clear_pivot(ring: EuclideanRing, t: _Tracked, k: int) -> bool:
    """Clear row k and column k beyond the pivot; False when a remainder was left behind."""
    clean = True
    pivot = t.m[k][k]
    for i in range(k + 1, t.rows):
        if not ring.is_zero(t.m[i][k]):
            q, r = ring.divmod(t.m[i][k], pivot)
            t.add_row(i, k, ring.zero - q)
            clean = clean and ring.is_zero(r)
    for j in range(k + 1, t.cols):
        if not ring.is_zero(t.m[k][j]):
            q, r = ring.divmod(t.m[k][j], pivot)
            t.add_col(j, k, ring.zero - q)
            clean = clean and ring.is_zero(r)
    return clean


def smith_normal_form(ring: EuclideanRing, a: Matrix) -> SmithResult:
    """D = P A Q with D diagonal, d_1 | d_2 | ..., each a canonical associate."""
    t = _Tracked(ring, a)
    k = 0
    while k < min(t.rows, t.cols):
        entries = [(i, j) for i in range(k, t.rows) for j in range(k, t.cols) if not ring.is_zero(t.m[i][j])]
        if not entries:
            break
        i, j = min(entries, key=lambda ij: (ring.size(t.m[ij[0]][ij[1]]), ij))
        t.swap_rows(k, i)
        t.swap_cols(k, j)
        if not _clear_pivot(ring, t, k):
            continue
        pivot = t.m[k][k]
        offender = next(
            (
                i
                for i in range(k + 1, t.rows)
                for j in range(k + 1, t.cols)
                if not ring.is_zero(ring.divmod(t.m[i][j], pivot)[1])
            ),
            None,
        )
        if offender is not None:
            t.add_row(k, offender, ring.one)
            continue
        _, u = ring.normalize(pivot)
        t.scale_row(k, u)
        k += 1
    return SmithResult(d=t.m, p=t.p, p_inv=t.p_inv, q=t.q, q_inv=t.q_inv, rank=k)
