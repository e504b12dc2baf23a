"""Exact scalars over the rationals or a prime field F_p.

A ``Field`` is a small value object; ``Scalar`` pairs a field with a raw value
(a ``Fraction`` for Q, a reduced residue ``int`` for F_p).  The raw-value
helpers (``raw``, ``inv_raw``, ``reduce``) are what the dense linear algebra
uses in its inner loops.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import re

from .errors import BadParams, DivisionByZero, FieldMismatch, NoSuchRoot, ParseError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


_FRACTION_RE = re.compile(r"^\s*-?\d+\s*(/\s*\d+\s*)?$")


@dataclass(frozen=True)
class Field:
    """The rationals (``p is None``) or the prime field F_p."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not (isinstance(self.p, int) and is_prime(self.p)):
            raise BadParams(f"F_p needs a prime p, got {self.p!r}")

    @classmethod
    def rationals(cls) -> "Field":
        return cls(None)

    @classmethod
    def prime(cls, p: int) -> "Field":
        return cls(p)

    @property
    def is_rational(self) -> bool:
        return self.p is None

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    def __str__(self):
        return "Q" if self.p is None else f"F{self.p}"

    # raw values -----------------------------------------------------------
    def raw(self, x) -> Fraction | int:
        """Coerce an int, Fraction, "a/b" string or Scalar into a raw value."""
        if isinstance(x, Scalar):
            if x.field != self:
                raise FieldMismatch(f"{x.field} element used in {self}")
            return x.value
        if isinstance(x, bool):
            x = int(x)
        if isinstance(x, str):
            if not _FRACTION_RE.match(x):
                raise ParseError(f"not a scalar: {x!r}")
            x = Fraction(x.replace(" ", ""))
        if self.p is None:
            if isinstance(x, (int, Fraction)):
                return Fraction(x)
            raise ParseError(f"not a rational scalar: {x!r}")
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise DivisionByZero(f"{x} has no image in {self}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        raise ParseError(f"not a scalar: {x!r}")

    def reduce(self, v):
        return v if self.p is None else v % self.p

    def inv_raw(self, v):
        if v == 0:
            raise DivisionByZero(f"division by zero in {self}")
        if self.p is None:
            return 1 / v
        return pow(v, -1, self.p)

    # scalars --------------------------------------------------------------
    def __call__(self, x) -> "Scalar":
        return Scalar(self, self.raw(x))

    @property
    def zero(self) -> "Scalar":
        return self(0)

    @property
    def one(self) -> "Scalar":
        return self(1)

    def root_of_unity(self, n: int) -> "Scalar":
        """A primitive n-th root of unity; over F_p the smallest such residue."""
        if n < 1:
            raise BadParams("n must be positive")
        if self.p is None:
            if n == 1:
                return self.one
            if n == 2:
                return self(-1)
            raise NoSuchRoot(f"Q has no primitive {n}-th root of unity")
        if (self.p - 1) % n:
            raise NoSuchRoot(f"{n} does not divide {self.p - 1}")
        proper = [d for d in _divisors(n) if d < n]
        for q in range(1, self.p):
            if pow(q, n, self.p) == 1 and all(pow(q, d, self.p) != 1 for d in proper):
                return self(q)
        raise NoSuchRoot(f"no primitive {n}-th root in {self}")  # unreachable for prime p

    # JSON -----------------------------------------------------------------
    def encode(self, v) -> int | str:
        """JSON form of a raw value: bare int when integral, else "a/b"."""
        if isinstance(v, Scalar):
            v = v.value
        if self.p is not None:
            return int(v)
        v = Fraction(v)
        return v.numerator if v.denominator == 1 else f"{v.numerator}/{v.denominator}"

    def to_json(self):
        return "Q" if self.p is None else {"Fp": self.p}

    @classmethod
    def from_json(cls, obj) -> "Field":
        if obj == "Q":
            return cls(None)
        if isinstance(obj, dict) and set(obj) == {"Fp"}:
            try:
                return cls(obj["Fp"])
            except BadParams as exc:
                raise ParseError(str(exc), "field") from None
        if isinstance(obj, str):
            return cls.parse(obj)
        raise ParseError(f"bad field {obj!r}", "field")

    @classmethod
    def parse(cls, text: str) -> "Field":
        """Parse the command-line form: ``Q`` or ``Fp:7``."""
        t = text.strip()
        if t == "Q":
            return cls(None)
        m = re.fullmatch(r"F(?:p)?:?(\d+)", t)
        if not m:
            raise ParseError(f"bad field {text!r} (use Q or Fp:p)", "field")
        try:
            return cls(int(m.group(1)))
        except BadParams as exc:
            raise ParseError(str(exc), "field") from None


Q = Field(None)


@dataclass(frozen=True, eq=False)
class Scalar:
    field: Field
    value: Fraction | int

    def _other(self, o):
        if isinstance(o, Scalar):
            if o.field != self.field:
                raise FieldMismatch(f"{self.field} vs {o.field}")
            return o.value
        return self.field.raw(o)

    def __add__(self, o):
        return Scalar(self.field, self.field.reduce(self.value + self._other(o)))

    __radd__ = __add__

    def __sub__(self, o):
        return Scalar(self.field, self.field.reduce(self.value - self._other(o)))

    def __rsub__(self, o):
        return Scalar(self.field, self.field.reduce(self._other(o) - self.value))

    def __mul__(self, o):
        return Scalar(self.field, self.field.reduce(self.value * self._other(o)))

    __rmul__ = __mul__

    def __neg__(self):
        return Scalar(self.field, self.field.reduce(-self.value))

    def inverse(self) -> "Scalar":
        return Scalar(self.field, self.field.inv_raw(self.value))

    def __truediv__(self, o):
        return self * Scalar(self.field, self._other(o)).inverse()

    def __rtruediv__(self, o):
        return Scalar(self.field, self._other(o)) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        if self.field.p is None:
            return Scalar(self.field, self.value ** n)
        return Scalar(self.field, pow(self.value, n, self.field.p))

    def __eq__(self, o):
        if isinstance(o, Scalar):
            return self.field == o.field and self.value == o.value
        if isinstance(o, (int, Fraction)):
            return self.value == self.field.raw(o)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"Scalar({self.field}, {self.field.encode(self.value)})"

    def __str__(self):
        return str(self.field.encode(self.value))
