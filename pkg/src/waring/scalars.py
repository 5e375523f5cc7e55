"""Exact scalar arithmetic: rationals and real quadratic field elements.

The rational coefficient field is ``fractions.Fraction`` (re-exported as
``Scalar``): always stored reduced with positive denominator, so equality
and hashing are componentwise for free.  Elements a + b*sqrt(D) of a real
quadratic field are ``QuadExt`` values built through a shared
``QuadraticField`` context; arithmetic between different fields is a hard
error, never a coercion.

No floating point lives here; ``QuadExt.as_float`` is the single exit
point used by the numeric layer.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from .errors import ValidationError

Scalar = Fraction

RationalLike = Union[int, Fraction]


class MixedFieldError(ValidationError):
    """Arithmetic mixing elements of distinct quadratic fields."""


def parse_scalar(text: str) -> Fraction:
    """Parse the textual form "p" or "p/q" into an exact rational."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValidationError(f"invalid rational literal {text!r}") from exc


def format_scalar(value) -> str:
    """Canonical text for a Scalar or QuadExt ("p/q" or "a+b*sqrt(D)")."""
    if isinstance(value, QuadExt):
        return str(value)
    return str(Fraction(value))


def is_squarefree_int(n: int) -> bool:
    if n <= 0:
        return False
    d = 2
    while d * d <= n:
        if n % (d * d) == 0:
            return False
        d += 1
    return True


class QuadraticField:
    """The field Q(sqrt(D)) for a fixed squarefree integer D >= 2.

    The field object is the shared context carrying D; elements keep a
    reference to it, and every binary operation checks the contexts match.
    """

    __slots__ = ("d",)

    def __init__(self, d: int) -> None:
        if not isinstance(d, int) or d < 2 or not is_squarefree_int(d):
            raise ValidationError(
                f"field discriminant must be a squarefree integer >= 2, got {d!r}"
            )
        self.d = d

    def __repr__(self) -> str:
        return f"QuadraticField({self.d})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, QuadraticField) and other.d == self.d

    def __hash__(self) -> int:
        return hash(("QuadraticField", self.d))

    def __call__(self, a: RationalLike = 0, b: RationalLike = 0) -> QuadExt:
        return QuadExt(self, Fraction(a), Fraction(b))

    @property
    def zero(self) -> QuadExt:
        return self(0, 0)

    @property
    def one(self) -> QuadExt:
        return self(1, 0)

    def sqrt(self) -> QuadExt:
        """The element sqrt(D) itself."""
        return self(0, 1)

    def from_rational(self, value: RationalLike) -> QuadExt:
        return self(value, 0)


class QuadExt:
    """An element a + b*sqrt(D) with exact rational components."""

    __slots__ = ("field", "a", "b")

    def __init__(self, field: QuadraticField, a: Fraction, b: Fraction) -> None:
        self.field = field
        self.a = a
        self.b = b

    def __repr__(self) -> str:
        return f"QuadExt({self.field.d}; {self.a}, {self.b})"

    def __str__(self) -> str:
        if not self.b:
            return str(self.a)
        if self.b < 0:
            return f"{self.a}-{-self.b}*sqrt({self.field.d})"
        return f"{self.a}+{self.b}*sqrt({self.field.d})"

    def _coerce(self, other) -> "QuadExt | None":
        if isinstance(other, QuadExt):
            if other.field.d != self.field.d:
                raise MixedFieldError(
                    f"cannot mix sqrt({self.field.d}) and sqrt({other.field.d}) elements"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt(self.field, Fraction(other), Fraction(0))
        return None

    def __bool__(self) -> bool:
        return bool(self.a or self.b)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if isinstance(other, QuadExt):
            if other.field.d != self.field.d:
                # distinct fields only share the rationals
                return self.b == 0 and other.b == 0 and self.a == other.a
            return self.a == other.a and self.b == other.b
        return NotImplemented

    def __hash__(self) -> int:
        if not self.b:
            return hash(self.a)
        return hash((self.field.d, self.a, self.b))

    def __neg__(self) -> QuadExt:
        return QuadExt(self.field, -self.a, -self.b)

    def __add__(self, other) -> QuadExt:
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return QuadExt(self.field, self.a + v.a, self.b + v.b)

    __radd__ = __add__

    def __sub__(self, other) -> QuadExt:
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return QuadExt(self.field, self.a - v.a, self.b - v.b)

    def __rsub__(self, other) -> QuadExt:
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return QuadExt(self.field, v.a - self.a, v.b - self.b)

    def __mul__(self, other) -> QuadExt:
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        d = self.field.d
        return QuadExt(
            self.field,
            self.a * v.a + d * self.b * v.b,
            self.a * v.b + self.b * v.a,
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> QuadExt:
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return self * v.inverse()

    def __rtruediv__(self, other) -> QuadExt:
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return v * self.inverse()

    def __pow__(self, exponent: int) -> QuadExt:
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.field.one
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def norm(self) -> Fraction:
        """a^2 - D*b^2, the field norm down to the rationals."""
        return self.a * self.a - self.field.d * self.b * self.b

    def conjugate(self) -> QuadExt:
        return QuadExt(self.field, self.a, -self.b)

    def inverse(self) -> QuadExt:
        n = self.norm()
        if not n:
            raise ZeroDivisionError(
                f"element {self} has zero norm and is not invertible"
            )
        return QuadExt(self.field, self.a / n, -self.b / n)

    def is_rational(self) -> bool:
        return not self.b

    def as_float(self) -> float:
        return float(self.a) + float(self.b) * self.field.d ** 0.5


def parse_quadext(text: str, field: QuadraticField) -> QuadExt:
    """Parse "a+b*sqrt(D)" (or a bare rational) in the given field."""
    s = text.strip().replace(" ", "")
    marker = f"*sqrt({field.d})"
    if marker not in s:
        return field.from_rational(parse_scalar(s))
    head, _, rest = s.partition(marker)
    if rest:
        raise ValidationError(f"invalid field element literal {text!r}")
    # split head into the rational part and the sqrt multiplier
    cut = max(head.rfind("+", 1), head.rfind("-", 1))
    if cut <= 0:
        a_text, b_text = "0", head
    else:
        a_text, b_text = head[:cut], head[cut:]
    return field(parse_scalar(a_text or "0"), parse_scalar(b_text))
