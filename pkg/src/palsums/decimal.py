"""Canonical arbitrary-precision base-10 natural numbers.

A value is stored as its decimal digit string, most significant digit
first.  The kernel provides exactly the arithmetic the palindrome
machinery needs (comparison, addition, subtraction, shifts, digit access)
and nothing more; in particular there is no general multiplication or
division.  All operations are pure and return canonical values.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, ParseError

__all__ = [
    "DecimalNat",
    "ZERO",
    "ONE",
    "parse",
    "format",
    "compare",
    "add",
    "sub",
    "shift_left",
    "digit_at",
    "magnitude",
]


@dataclass(frozen=True, slots=True)
class DecimalNat:
    """An immutable natural number in canonical decimal form.

    ``digits`` holds base-10 digit values, most significant first.  The
    only representation of zero is the single digit ``(0,)``; any longer
    string must not start with a zero.
    """

    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        d = self.digits
        if not d:
            raise ValueError("digit string must be non-empty")
        if any(not 0 <= x <= 9 for x in d):
            raise ValueError(f"digit out of range in {d!r}")
        if len(d) > 1 and d[0] == 0:
            raise ValueError(f"leading zero in {d!r}")

    @classmethod
    def from_int(cls, value: int) -> "DecimalNat":
        if value < 0:
            raise ValueError("DecimalNat is non-negative")
        return cls(tuple(ord(c) - 48 for c in str(value)))

    def __str__(self) -> str:
        return "".join(chr(x + 48) for x in self.digits)

    def __int__(self) -> int:
        return int(str(self))

    def __bool__(self) -> bool:
        return self.digits != (0,)

    # Numeric order: shorter canonical strings are smaller, equal lengths
    # compare lexicographically.
    def _key(self) -> tuple[int, tuple[int, ...]]:
        return (len(self.digits), self.digits)

    def __lt__(self, other: "DecimalNat") -> bool:
        return self._key() < other._key()

    def __le__(self, other: "DecimalNat") -> bool:
        return self._key() <= other._key()

    def __gt__(self, other: "DecimalNat") -> bool:
        return self._key() > other._key()

    def __ge__(self, other: "DecimalNat") -> bool:
        return self._key() >= other._key()

    def __add__(self, other: "DecimalNat") -> "DecimalNat":
        return add(self, other)

    def __sub__(self, other: "DecimalNat") -> "DecimalNat":
        return sub(self, other)


ZERO = DecimalNat((0,))
ONE = DecimalNat((1,))


def parse(text: str) -> DecimalNat:
    """Parse a canonical decimal string.

    Rejects (rather than repairs) anything non-canonical: the empty
    string, non-digit characters, and leading zeros on multi-digit input.
    """
    if not text:
        raise ParseError("empty decimal string")
    if not (text.isascii() and text.isdigit()):
        raise ParseError(f"not a decimal string: {text!r}")
    if len(text) > 1 and text[0] == "0":
        raise ParseError(f"leading zero: {text!r}")
    return DecimalNat(tuple(ord(c) - 48 for c in text))


def format(n: DecimalNat) -> str:
    """Render as a decimal string; inverse of :func:`parse`."""
    return str(n)


def compare(a: DecimalNat, b: DecimalNat) -> int:
    """Three-way numeric comparison: -1 (less), 0 (equal), or 1 (greater)."""
    ka, kb = a._key(), b._key()
    if ka < kb:
        return -1
    return 0 if ka == kb else 1


def add(a: DecimalNat, b: DecimalNat) -> DecimalNat:
    """Schoolbook addition, least significant digit first."""
    ra = a.digits[::-1]
    rb = b.digits[::-1]
    if len(ra) < len(rb):
        ra, rb = rb, ra
    nb = len(rb)
    out = []
    carry = 0
    for i, da in enumerate(ra):
        s = da + carry + (rb[i] if i < nb else 0)
        if s >= 10:
            s -= 10
            carry = 1
        else:
            carry = 0
        out.append(s)
    if carry:
        out.append(1)
    return DecimalNat(tuple(reversed(out)))


def sub(a: DecimalNat, b: DecimalNat) -> DecimalNat:
    """Subtraction on naturals; underflow raises instead of wrapping."""
    if compare(a, b) < 0:
        raise DomainError(f"subtraction underflow: {a} < {b}")
    ra = a.digits[::-1]
    rb = b.digits[::-1]
    nb = len(rb)
    out = []
    borrow = 0
    for i, da in enumerate(ra):
        s = da - borrow - (rb[i] if i < nb else 0)
        if s < 0:
            s += 10
            borrow = 1
        else:
            borrow = 0
        out.append(s)
    # strip leading zeros of the result, keeping at least one digit
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return DecimalNat(tuple(reversed(out)))


def shift_left(n: DecimalNat, e: int) -> DecimalNat:
    """Multiply by ``10**e`` by appending zeros; shifting zero stays zero."""
    if e < 0:
        raise ValueError("shift exponent must be >= 0")
    if not n or e == 0:
        return n
    return DecimalNat(n.digits + (0,) * e)


def digit_at(n: DecimalNat, j: int) -> int:
    """Digit at power-of-ten position ``j``; positions past the top read 0."""
    if j < 0:
        raise ValueError("digit position must be >= 0")
    d = n.digits
    if j >= len(d):
        return 0
    return d[len(d) - 1 - j]


def magnitude(n: DecimalNat) -> int:
    """Index of the most significant digit: one less than the digit count."""
    return len(n.digits) - 1
