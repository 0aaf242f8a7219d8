"""Exact Laurent polynomials in one variable ``A`` with integer coefficients."""

from __future__ import annotations

from typing import Iterable, Mapping

from .errors import CodeSyntaxError


class LaurentPolynomial:
    """Immutable integer Laurent polynomial, stored as ``{exponent: coefficient}``.

    Zero coefficients are never stored, so equality is plain dict equality.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        acc: dict[int, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exp, coef in items:
            acc[int(exp)] = acc.get(int(exp), 0) + int(coef)
        self._terms = {e: c for e, c in sorted(acc.items()) if c != 0}
        self._hash = None

    @classmethod
    def monomial(cls, exp: int, coef: int = 1) -> LaurentPolynomial:
        return cls({exp: coef})

    @classmethod
    def constant(cls, value: int) -> LaurentPolynomial:
        return cls({0: value})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def min_degree(self) -> int:
        return min(self._terms)

    def max_degree(self) -> int:
        return max(self._terms)

    def coefficient(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def _coerce(self, other) -> LaurentPolynomial:
        if isinstance(other, LaurentPolynomial):
            return other
        if isinstance(other, int):
            return LaurentPolynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return LaurentPolynomial(acc)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("negative powers are only defined for monomials")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("negative powers need a unit coefficient")
            return LaurentPolynomial({e * k: c ** (-k)})
        result = LaurentPolynomial.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, value):
        return sum(c * value**e for e, c in self._terms.items())

    def serialize(self) -> str:
        """``coef:exp`` terms joined by ``;``, exponents ascending; zero is ``0``."""
        if not self._terms:
            return "0"
        return ";".join(f"{c}:{e}" for e, c in self._terms.items())

    @classmethod
    def parse(cls, text: str) -> LaurentPolynomial:
        text = text.strip()
        if text == "0":
            return cls()
        terms = []
        for chunk in text.split(";"):
            try:
                coef, exp = chunk.split(":")
                terms.append((int(exp), int(coef)))
            except ValueError:
                raise CodeSyntaxError(f"bad polynomial term {chunk!r}") from None
        return cls(terms)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items(), reverse=True):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                power = "A" if e == 1 else f"A^{e}"
                body = power if mag == 1 else f"{mag}*{power}"
            parts.append(("-" if c < 0 else "+") + body)
        out = " ".join(p[0] + " " + p[1:] for p in parts)
        return out[2:] if out.startswith("+ ") else "-" + out[2:]

    def __repr__(self):
        return f"LaurentPolynomial({self.serialize()!r})"


A = LaurentPolynomial.monomial(1)
DELTA = -(A**2) - A**-2
