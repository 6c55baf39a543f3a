"""
Compact signature strings such as ``42^31^4`` for x = x_0 e_0 - sum c_p e_p.

The string is x_0 followed by the nonzero |c_p| in decreasing order, each with
``^m`` when it occurs m > 1 times. Values of two or more digits are written in
parentheses. An exponent is a single digit, except that a leading ``1``
followed by a digit is a two-digit exponent; multiplicity 1 is never written,
so this is unambiguous.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from src.lattice.lorentz import LatticeVector


@dataclass(frozen=True)
class SignatureString:
    x0: int
    parts: tuple[tuple[int, int], ...]

    @classmethod
    def from_vector(cls, x: LatticeVector) -> SignatureString:
        counts = Counter(abs(c) for c in x.coords[1:] if c)
        return cls(x0=x.coords[0], parts=tuple(sorted(counts.items(), reverse=True)))

    def render(self) -> str:
        out = [_value(self.x0)]
        for value, multiplicity in self.parts:
            out.append(_value(value) + (f"^{multiplicity}" if multiplicity > 1 else ""))
        return "".join(out)

    def multiset(self) -> Counter:
        return Counter({value: m for value, m in self.parts})

    @classmethod
    def parse(cls, text: str) -> SignatureString:
        pos = 0

        def read_value() -> int:
            nonlocal pos
            if text[pos] == "(":
                end = text.index(")", pos)
                value = int(text[pos + 1 : end])
                pos = end + 1
                return value
            value = int(text[pos])
            pos += 1
            return value

        x0 = read_value()
        parts = []
        while pos < len(text):
            value = read_value()
            multiplicity = 1
            if pos < len(text) and text[pos] == "^":
                pos += 1
                digits = text[pos]
                pos += 1
                if digits == "1" and pos < len(text) and text[pos].isdigit():
                    digits += text[pos]
                    pos += 1
                multiplicity = int(digits)
            parts.append((value, multiplicity))
        return cls(x0=x0, parts=tuple(parts))


def _value(v: int) -> str:
    return str(v) if 0 <= v <= 9 else f"({v})"


def render_signature(x: LatticeVector) -> str:
    return SignatureString.from_vector(x).render()


def parse_signature(text: str) -> SignatureString:
    return SignatureString.parse(text)
