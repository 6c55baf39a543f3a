"""
Eisenstein integers a + b*omega with omega^2 = -omega - 1.
"""
from __future__ import annotations

from dataclasses import dataclass

from src.utils.errors import EisensteinDivisionError


@dataclass(frozen=True)
class EisInt:
    a: int
    b: int = 0

    @classmethod
    def of(cls, x: int | EisInt) -> EisInt:
        return x if isinstance(x, EisInt) else cls(int(x), 0)

    def __add__(self, other: int | EisInt) -> EisInt:
        other = EisInt.of(other)
        return EisInt(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other: int | EisInt) -> EisInt:
        other = EisInt.of(other)
        return EisInt(self.a - other.a, self.b - other.b)

    def __rsub__(self, other: int | EisInt) -> EisInt:
        return EisInt.of(other) - self

    def __neg__(self) -> EisInt:
        return EisInt(-self.a, -self.b)

    def __mul__(self, other: int | EisInt) -> EisInt:
        # (a + b w)(c + d w) = (ac - bd) + (ad + bc - bd) w
        other = EisInt.of(other)
        a, b, c, d = self.a, self.b, other.a, other.b
        return EisInt(a * c - b * d, a * d + b * c - b * d)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> EisInt:
        result = ONE
        for _ in range(k):
            result = result * self
        return result

    def conj(self) -> EisInt:
        return EisInt(self.a - self.b, -self.b)

    def norm(self) -> int:
        return self.a * self.a - self.a * self.b + self.b * self.b

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_unit(self) -> bool:
        return self.norm() == 1

    def is_rational(self) -> bool:
        return self.b == 0

    def __divmod__(self, other: int | EisInt) -> tuple[EisInt, EisInt]:
        return eis_divmod(self, EisInt.of(other))

    def __floordiv__(self, other: int | EisInt) -> EisInt:
        return eis_divmod(self, EisInt.of(other))[0]

    def __mod__(self, other: int | EisInt) -> EisInt:
        return eis_divmod(self, EisInt.of(other))[1]

    def to_json(self) -> list[int]:
        return [self.a, self.b]

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}ω"
        return f"{self.a}{'+' if self.b > 0 else '-'}{abs(self.b)}ω"


ZERO = EisInt(0, 0)
ONE = EisInt(1, 0)
OMEGA = EisInt(0, 1)
THETA = EisInt(1, 2)
UNITS = (ONE, -ONE, OMEGA, -OMEGA, OMEGA * OMEGA, -(OMEGA * OMEGA))


def _floor_div(x: int, n: int) -> int:
    return x // n


def _ceil_div(x: int, n: int) -> int:
    return -((-x) // n)


def eis_divmod(a: EisInt, b: EisInt) -> tuple[EisInt, EisInt]:
    """
    a = q*b + r with norm(r) < norm(b).

    q rounds the exact quotient a*conj(b)/norm(b) to the corner of its
    lattice cell with the smallest remainder; corners are tried in a fixed
    order, so r depends only on a mod b.

    Raises:
        EisensteinDivisionError: b = 0.
    """
    n = b.norm()
    if n == 0:
        raise EisensteinDivisionError(f"division of {a} by zero")
    numerator = a * b.conj()
    best: tuple[EisInt, EisInt] | None = None
    for qa in (_floor_div(numerator.a, n), _ceil_div(numerator.a, n)):
        for qb in (_floor_div(numerator.b, n), _ceil_div(numerator.b, n)):
            q = EisInt(qa, qb)
            r = a - q * b
            if best is None or r.norm() < best[1].norm():
                best = (q, r)
    return best


def exact_div(a: EisInt, b: EisInt) -> EisInt:
    q, r = eis_divmod(a, b)
    if not r.is_zero():
        raise EisensteinDivisionError(f"{b} does not divide {a}")
    return q


def eis_gcd(a: EisInt, b: EisInt) -> EisInt:
    while not b.is_zero():
        a, b = b, eis_divmod(a, b)[1]
    return canonical_associate(a)[0]


def canonical_associate(x: EisInt) -> tuple[EisInt, EisInt]:
    """
    (u*x, u) for the unit u putting x in the sector 0 <= arg < pi/3,
    i.e. b >= 0 and a > b. Zero is returned with u = 1.
    """
    if x.is_zero():
        return x, ONE
    for u in UNITS:
        y = u * x
        if y.b >= 0 and y.a > y.b:
            return y, u
    raise AssertionError(f"no associate of {x} in the standard sector")


def unit_inverse(u: EisInt) -> EisInt:
    return u.conj()
