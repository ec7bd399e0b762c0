"""Exact scalar arithmetic over the rationals and over prime fields.

Scalars are plain Python values: `fractions.Fraction` over the rationals
(always stored reduced with positive denominator) and `int` residues in
[0, p) over a prime field.  A field object supplies the arithmetic, the
parsing/formatting of the textual syntax ("p/q" over the rationals, a
decimal residue over a prime field), and enumeration where finite.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Union

from zpbal.errors import InfiniteFieldError, ParseError

Scalar = Union[Fraction, int]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class Field:
    """Common interface of the two supported base fields."""

    name: str
    characteristic: int
    zero: Scalar
    one: Scalar

    def is_finite(self) -> bool:
        return self.characteristic != 0

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def div(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def of_int(self, n: int) -> Scalar:
        raise NotImplementedError

    def parse(self, text) -> Scalar:
        raise NotImplementedError

    def format(self, a) -> Union[str, int]:
        raise NotImplementedError

    def elements(self) -> Iterator[Scalar]:
        """Every field element exactly once, in a fixed deterministic order."""
        raise NotImplementedError

    def __ne__(self, other):
        return not self.__eq__(other)


class Rationals(Field):
    """The field of arbitrary-precision rationals."""

    name = "Q"
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in Q")
        return a / b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in Q")
        return 1 / Fraction(a)

    def of_int(self, n):
        return Fraction(n)

    def parse(self, text):
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"invalid rational scalar {text!r}") from exc

    def format(self, a):
        return str(a)

    def elements(self):
        raise InfiniteFieldError("the rationals cannot be enumerated")

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Rationals()"


class PrimeField(Field):
    """The prime field of p elements, residues stored normalized in [0, p)."""

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.name = f"F{p}"
        self.characteristic = p
        self.zero = 0
        self.one = 1 % p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def div(self, a, b):
        if b % self.p == 0:
            raise ZeroDivisionError(f"division by zero in {self.name}")
        return (a * pow(b, -1, self.p)) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"inverse of zero in {self.name}")
        return pow(a, -1, self.p)

    def of_int(self, n):
        return n % self.p

    def parse(self, text):
        try:
            return int(text) % self.p
        except (ValueError, TypeError) as exc:
            raise ParseError(f"invalid residue {text!r} for {self.name}") from exc

    def format(self, a):
        return a % self.p

    def elements(self):
        return iter(range(self.p))

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


QQ = Rationals()


def belongs(field: Field, a) -> bool:
    """Whether a value is a canonical scalar of the field."""
    if isinstance(field, Rationals):
        return isinstance(a, Fraction)
    return isinstance(a, int) and not isinstance(a, bool) and 0 <= a < field.characteristic


def scalar_arith(field: Field, a: Scalar, b: Scalar, op: str) -> Scalar:
    """Checked arithmetic dispatch; rejects operands from the wrong field."""
    from zpbal.errors import FieldMismatch

    if not belongs(field, a) or not belongs(field, b):
        raise FieldMismatch(f"operands {a!r}, {b!r} are not canonical {field.name} scalars")
    if op == "add":
        return field.add(a, b)
    if op == "sub":
        return field.sub(a, b)
    if op == "mul":
        return field.mul(a, b)
    if op == "div":
        return field.div(a, b)
    raise ValueError(f"unknown op {op!r}")


def field_from_name(name: str) -> Field:
    """Resolve "Q" or "F<p>" to a field object."""
    if name == "Q":
        return QQ
    if name.startswith("F"):
        try:
            p = int(name[1:])
        except ValueError:
            raise ParseError(f"unknown field {name!r}")
        try:
            return PrimeField(p)
        except ValueError as exc:
            raise ParseError(str(exc))
    raise ParseError(f"unknown field {name!r}")
