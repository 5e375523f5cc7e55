"""Sparse bivariate polynomials over an exact coefficient field.

Terms are stored as {(i, j): coefficient} for u^i * v^j with nonzero
coefficients only.  Coefficients are Fractions by default but any exact
field element with +, -, * and truthiness works, so the same type backs
symbolic identity checks over Q and parser intermediates over Q(sqrt(D)).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping


class BiPoly:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], object] | None = None) -> None:
        clean = {}
        if terms:
            for key, coeff in terms.items():
                if coeff:
                    clean[key] = coeff
        self.terms = clean

    @classmethod
    def constant(cls, value) -> BiPoly:
        return cls({(0, 0): Fraction(value) if isinstance(value, int) else value})

    @classmethod
    def variable(cls, index: int) -> BiPoly:
        key = (1, 0) if index == 0 else (0, 1)
        return cls({key: Fraction(1)})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BiPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == BiPoly.constant(other).terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        if not self.terms:
            return "BiPoly(0)"
        bits = [f"{c}*u^{i}*v^{j}" for (i, j), c in sorted(self.terms.items())]
        return "BiPoly(" + " + ".join(bits) + ")"

    def _coerce(self, other) -> "BiPoly | None":
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return BiPoly.constant(other)
        return None

    def __add__(self, other) -> BiPoly:
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        out = dict(self.terms)
        for key, coeff in v.terms.items():
            out[key] = out.get(key, 0) + coeff
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self) -> BiPoly:
        return BiPoly({key: -coeff for key, coeff in self.terms.items()})

    def __sub__(self, other) -> BiPoly:
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return self + (-v)

    def __rsub__(self, other) -> BiPoly:
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return v + (-self)

    def __mul__(self, other) -> BiPoly:
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        out: dict[tuple[int, int], object] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in v.terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
        return BiPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> BiPoly:
        if isinstance(other, (int, Fraction)):
            inv = Fraction(1) / Fraction(other)
            return self * inv
        return NotImplemented

    def __pow__(self, exponent: int) -> BiPoly:
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = BiPoly.constant(1)
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def evaluate(self, u, v):
        """Exact evaluation; u and v may live in any common field."""
        total = 0
        for (i, j), coeff in self.terms.items():
            term = coeff
            for _ in range(i):
                term = term * u
            for _ in range(j):
                term = term * v
            total = total + term
        return total

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(i + j for i, j in self.terms)

    def coefficient(self, i: int, j: int):
        return self.terms.get((i, j), Fraction(0))

    def monomials(self) -> Iterable[tuple[int, int]]:
        return sorted(self.terms, key=lambda k: (-(k[0] + k[1]), -k[0]))
