"""Integer polynomials in one variable ``m``, coefficients constant-first."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Union

Number = Union[int, "IntPolynomial"]


class IntPolynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @classmethod
    def var(cls) -> "IntPolynomial":
        return cls((0, 1))

    @classmethod
    def linear(cls, root: int) -> "IntPolynomial":
        """``m - root``."""
        return cls((-root, 1))

    @staticmethod
    def _lift(x: Number) -> "IntPolynomial":
        if isinstance(x, IntPolynomial):
            return x
        if isinstance(x, int):
            return IntPolynomial((x,))
        return NotImplemented

    @property
    def degree(self) -> int | None:
        """Degree, or ``None`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __call__(self, m: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * m + c
        return acc

    evaluate = __call__

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        size = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self.coefficient(i) + other.coefficient(i) for i in range(size))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result = IntPolynomial((1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def divmod(self, divisor: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial"]:
        """Long division over the integers. Raises ``ArithmeticError`` if a
        quotient coefficient would not be an integer."""
        divisor = self._lift(divisor)
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = divisor.degree
        lead = divisor.coeffs[-1]
        quot = [0] * max(len(rem) - dd, 0)
        for k in range(len(rem) - dd - 1, -1, -1):
            c = rem[k + dd]
            if c % lead:
                raise ArithmeticError("non-integral quotient coefficient")
            q = c // lead
            quot[k] = q
            for i, dc in enumerate(divisor.coeffs):
                rem[k + i] -= q * dc
        return IntPolynomial(quot), IntPolynomial(rem)

    def exact_div(self, divisor: Number) -> "IntPolynomial":
        q, r = self.divmod(self._lift(divisor))
        if not r.is_zero:
            raise ArithmeticError(f"division of {self} by {divisor} leaves remainder {r}")
        return q

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("m" if i == 1 else f"m^{i}")
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def to_json(self) -> str:
        return json.dumps(list(self.coeffs))

    @classmethod
    def from_json(cls, text: str) -> "IntPolynomial":
        return cls(json.loads(text))

    @classmethod
    def interpolate(cls, values: list[int]) -> "IntPolynomial":
        """The polynomial of degree < len(values) taking ``values[i]`` at m = i.

        Newton forward differences in exact rationals; raises
        ``ArithmeticError`` if the result has a non-integer coefficient.
        """
        diffs = []
        row = [Fraction(v) for v in values]
        while row:
            diffs.append(row[0])
            row = [b - a for a, b in zip(row, row[1:])]
        coeffs = [Fraction(0)] * max(len(values), 1)
        binom = [Fraction(1)]  # coefficients of m(m-1)...(m-k+1)/k!
        for k, d in enumerate(diffs):
            if k:
                nxt = [Fraction(0)] * (len(binom) + 1)
                for i, c in enumerate(binom):
                    nxt[i + 1] += c / k
                    nxt[i] -= c * (k - 1) / k
                binom = nxt
            for i, c in enumerate(binom):
                coeffs[i] += d * c
        if any(c.denominator != 1 for c in coeffs):
            raise ArithmeticError("interpolated polynomial has non-integer coefficients")
        return cls(int(c) for c in coeffs)


M = IntPolynomial.var()
