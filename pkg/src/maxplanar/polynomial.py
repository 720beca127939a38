"""Exact univariate polynomials with integer coefficients."""

from __future__ import annotations

from typing import Iterable


class InexactDivision(ArithmeticError):
    """A division that was required to be exact left a remainder."""


class Polynomial:
    """Polynomial in ``t`` with Python ``int`` coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def monomial(cls, n: int, coeff: int = 1) -> "Polynomial":
        return cls([0] * n + [coeff])

    @classmethod
    def falling_factorial(cls, k: int) -> "Polynomial":
        """``t (t-1) ... (t-k+1)``; the empty product for ``k = 0``."""
        p = cls([1])
        for i in range(k):
            p = p * cls([-i, 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, t: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == Polynomial([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Polynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    def __neg__(self) -> "Polynomial":
        return Polynomial([-x for x in self.coeffs])

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial | int") -> "Polynomial":
        if isinstance(other, int):
            return Polynomial([x * other for x in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Polynomial(out)

    __rmul__ = __mul__

    def divmod(self, divisor: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        """Long division by a monic divisor."""
        d = divisor.coeffs
        if not d:
            raise ZeroDivisionError("polynomial division by zero")
        if d[-1] != 1:
            raise ValueError("divisor must be monic")
        rem = list(self.coeffs)
        if len(rem) < len(d):
            return Polynomial(), self
        quot = [0] * (len(rem) - len(d) + 1)
        for i in range(len(quot) - 1, -1, -1):
            q = rem[i + len(d) - 1]
            quot[i] = q
            if q:
                for j, y in enumerate(d):
                    rem[i + j] -= q * y
        return Polynomial(quot), Polynomial(rem[: len(d) - 1])

    def exact_div(self, divisor: "Polynomial") -> "Polynomial":
        q, r = self.divmod(divisor)
        if not r.is_zero():
            raise InexactDivision(f"{self} is not divisible by {divisor}")
        return q

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def signs_alternate(self) -> bool:
        """Nonzero coefficients alternate in sign from the leading term down."""
        nz = [c for c in self.coeffs if c]
        return all((a > 0) != (b > 0) for a, b in zip(nz, nz[1:]))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            mag = abs(c)
            body = f"{mag}{mono}" if mag != 1 or not mono else mono
            terms.append(("- " if c < 0 else "+ ") + body)
        s = " ".join(terms)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


def evaluate(p: Polynomial, t: int) -> int:
    """Horner evaluation."""
    return p(t)
