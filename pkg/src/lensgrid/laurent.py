"""Exact one-variable Laurent polynomials with integer coefficients.

Coefficients are arbitrary-precision Python ints keyed by exponent; zero
coefficients are never stored.  The variable is called A in printed form.
"""

from __future__ import annotations

from typing import Dict, Iterable, Mapping, Tuple


class LaurentPoly:
    """Immutable Laurent polynomial in A over the integers."""

    __slots__ = ("_coeffs", "_key")

    def __init__(self, coeffs: Mapping[int, int] | Iterable[Tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        d: Dict[int, int] = {}
        for e, c in items:
            if c:
                d[int(e)] = d.get(int(e), 0) + int(c)
                if d[int(e)] == 0:
                    del d[int(e)]
        self._coeffs = d
        self._key = tuple(sorted(d.items()))

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def monomial(cls, coeff: int, exp: int) -> "LaurentPoly":
        return cls({exp: coeff})

    def coeff(self, exp: int) -> int:
        return self._coeffs.get(exp, 0)

    def items(self) -> Tuple[Tuple[int, int], ...]:
        return self._key

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly):
            return self._key == other._key
        if isinstance(other, int):
            return self._key == LaurentPoly({0: other})._key
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._key)

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        d = dict(self._coeffs)
        for e, c in other._coeffs.items():
            d[e] = d.get(e, 0) + c
        return LaurentPoly(d)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self._coeffs.items()})
        d: Dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                d[e] = d.get(e, 0) + c1 * c2
        return LaurentPoly(d)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise ValueError("negative power of a Laurent polynomial")
        out = LaurentPoly.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def substitute_inverse(self) -> "LaurentPoly":
        """The image under A -> A^(-1) (exponent negation)."""
        return LaurentPoly({-e: c for e, c in self._coeffs.items()})

    def is_palindromic(self) -> bool:
        """True iff invariant under A -> A^(-1)."""
        return self == self.substitute_inverse()

    def min_exp(self) -> int:
        if not self._coeffs:
            raise ValueError("zero polynomial has no valuation")
        return min(self._coeffs)

    def max_exp(self) -> int:
        if not self._coeffs:
            raise ValueError("zero polynomial has no degree")
        return max(self._coeffs)

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for e, c in sorted(self._coeffs.items(), reverse=True):
            sign = "-" if c < 0 else ("+" if parts else "")
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "A" if e == 1 else f"A^{e}"
                body = var if mag == 1 else f"{mag}{var}"
            parts.append(sign + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(self._key)!r})"


# The loop variable of the bracket state sum: d = -A^2 - A^(-2).
LOOP_FACTOR = LaurentPoly({2: -1, -2: -1})
