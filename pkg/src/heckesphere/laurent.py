"""Exact arithmetic in the ring Z[v, v^-1].

A Laurent polynomial is stored as a map from integer exponent to nonzero
integer coefficient, so equality is plain map equality.  Coefficients are
Python ints and therefore arbitrary precision.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

from .errors import DivisionByZero, NotDivisible


class LaurentPoly:
    """An element of Z[v, v^-1] in canonical form (no zero coefficients)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        store: dict[int, int] = {}
        for exp, c in items:
            if c:
                store[exp] = store.get(exp, 0) + c
                if not store[exp]:
                    del store[exp]
        self.coeffs = store

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        """coeff * v^exp"""
        return cls({exp: coeff})

    @classmethod
    def from_int(cls, n: int) -> "LaurentPoly":
        return cls({0: n})

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, exp: int) -> int:
        """Coefficient of v^exp (0 if absent)."""
        return self.coeffs.get(exp, 0)

    def min_exp(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no exponents")
        return min(self.coeffs)

    def max_exp(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no exponents")
        return max(self.coeffs)

    def terms(self) -> Iterator[tuple[int, int]]:
        """(exponent, coefficient) pairs in ascending exponent order."""
        return iter(sorted(self.coeffs.items()))

    def in_v_times_nonneg(self) -> bool:
        """True iff the polynomial lies in v*Z[v] (all exponents >= 1)."""
        return all(e >= 1 for e in self.coeffs)

    # -- ring operations ---------------------------------------------------

    @staticmethod
    def _coerce(other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly({0: other})
        return NotImplemented

    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
            if not out[e]:
                del out[e]
        result = LaurentPoly.__new__(LaurentPoly)
        result.coeffs = out
        return result

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        result = LaurentPoly.__new__(LaurentPoly)
        result.coeffs = {e: -c for e, c in self.coeffs.items()}
        return result

    def __sub__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
                if not out[e]:
                    del out[e]
        result = LaurentPoly.__new__(LaurentPoly)
        result.coeffs = out
        return result

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers not supported")
        out = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by v^k."""
        result = LaurentPoly.__new__(LaurentPoly)
        result.coeffs = {e + k: c for e, c in self.coeffs.items()}
        return result

    # -- bar involution and division ---------------------------------------

    def bar(self) -> "LaurentPoly":
        """The Kazhdan-Lusztig involution v -> v^-1."""
        result = LaurentPoly.__new__(LaurentPoly)
        result.coeffs = {-e: c for e, c in self.coeffs.items()}
        return result

    def divide_exact(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """Return q with q * divisor == self, by leading-term elimination.

        Raises NotDivisible if no such q exists over Z[v, v^-1], and
        DivisionByZero if divisor is zero.
        """
        if divisor.is_zero():
            raise DivisionByZero("division by the zero Laurent polynomial")
        if self.is_zero():
            return LaurentPoly.zero()
        top_b = divisor.max_exp()
        low_b = divisor.min_exp()
        rem = self
        quot: dict[int, int] = {}
        while not rem.is_zero():
            top_r = rem.max_exp()
            # The quotient's lowest possible exponent is bounded below;
            # dropping past it means the division cannot close.
            if top_r - top_b < rem.min_exp() - low_b:
                raise NotDivisible(f"{self!r} is not divisible by {divisor!r}")
            lead_r = rem.coeffs[top_r]
            lead_b = divisor.coeffs[top_b]
            if lead_r % lead_b:
                raise NotDivisible(f"{self!r} is not divisible by {divisor!r}")
            c = lead_r // lead_b
            e = top_r - top_b
            quot[e] = c
            rem = rem - divisor.shift(e) * c
        return LaurentPoly(quot)

    # -- comparison, hashing, rendering -------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for exp, c in self.terms():
            if exp == 0:
                body = str(abs(c))
            else:
                vpow = "v" if exp == 1 else f"v^{exp}"
                body = vpow if abs(c) == 1 else f"{abs(c)}{vpow}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({self!s})"

    # -- serialization -------------------------------------------------------

    def to_json(self) -> list[list[int]]:
        """List of [exponent, coefficient] pairs sorted by exponent."""
        return [[e, c] for e, c in self.terms()]

    @classmethod
    def from_json(cls, data: Iterable[Iterable[int]]) -> "LaurentPoly":
        return cls({int(e): int(c) for e, c in data})


ZERO = LaurentPoly.zero()
ONE = LaurentPoly.one()
V = LaurentPoly.monomial(1)
VINV = LaurentPoly.monomial(-1)
