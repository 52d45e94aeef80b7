"""Palindrome predicate, strict neighbors, and enumeration.

The neighbor searches run in time linear in the digit count.  Both use
the same idea: mirror the high half of the digit string onto the low
half; if the mirrored candidate lands on the wrong side of the input,
step the high half by one and mirror again.  Length changes at powers of
ten need extra care: the largest palindrome below ``10**k`` is the
all-nines string of length ``k``, and the smallest one above it is
``10**k + 1``.
"""

from __future__ import annotations

from collections.abc import Iterator

from .decimal import DecimalNat, ZERO, compare
from .errors import DomainError

__all__ = [
    "is_palindrome",
    "prev_palindrome",
    "next_palindrome",
    "floor_palindrome",
    "palindromes_between",
    "palindrome_count_upto",
]


def is_palindrome(n: DecimalNat) -> bool:
    """True when the digit string equals its reversal."""
    d = n.digits
    return d == d[::-1]


def _mirror(head: tuple[int, ...], length: int) -> tuple[int, ...]:
    # Palindrome of `length` digits whose high half is `head`
    # (len(head) == ceil(length / 2)).
    return head + head[: length // 2][::-1]


def _inc_head(head: tuple[int, ...]) -> tuple[int, ...] | None:
    """Head plus one, or None when it overflows to an extra digit."""
    out = list(head)
    for i in range(len(out) - 1, -1, -1):
        if out[i] < 9:
            out[i] += 1
            return tuple(out)
        out[i] = 0
    return None


def _dec_head(head: tuple[int, ...]) -> tuple[int, ...]:
    """Head minus one; a leading zero in the result marks a digit loss."""
    out = list(head)
    for i in range(len(out) - 1, -1, -1):
        if out[i] > 0:
            out[i] -= 1
            break
        out[i] = 9
    return tuple(out)


def prev_palindrome(n: DecimalNat) -> DecimalNat:
    """Largest palindrome strictly below ``n``; strict even on palindromes.

    ``n`` must be at least 1 so that a smaller palindrome exists.
    """
    d = n.digits
    if d == (0,):
        raise DomainError("0 has no palindromic precursor")
    length = len(d)
    if length == 1:
        return DecimalNat((d[0] - 1,))
    head = d[: (length + 1) // 2]
    cand = _mirror(head, length)
    if cand < d:  # same length, so lexicographic order is numeric order
        return DecimalNat(cand)
    head = _dec_head(head)
    if head[0] == 0:
        # the high half was 10...0, so every shorter palindrome wins
        return DecimalNat((9,) * (length - 1))
    return DecimalNat(_mirror(head, length))


def next_palindrome(n: DecimalNat) -> DecimalNat:
    """Smallest palindrome strictly above ``n``."""
    d = n.digits
    length = len(d)
    head = d[: (length + 1) // 2]
    cand = _mirror(head, length)
    if cand > d:
        return DecimalNat(cand)
    head = _inc_head(head)
    if head is None:
        # all nines: the next palindrome is 10...01, one digit longer
        return DecimalNat((1,) + (0,) * (length - 1) + (1,))
    return DecimalNat(_mirror(head, length))


def floor_palindrome(n: DecimalNat) -> DecimalNat:
    """Largest palindrome less than or equal to ``n`` (non-strict)."""
    if is_palindrome(n):
        return n
    return prev_palindrome(n)


def palindromes_between(lo: DecimalNat, hi: DecimalNat, order: str = "ascending") -> Iterator[DecimalNat]:
    """Lazily yield every palindrome ``p`` with ``lo <= p <= hi``, each once.

    ``order`` is ``"ascending"`` or ``"descending"``.
    """
    if order not in ("ascending", "descending"):
        raise ValueError(f"unknown order: {order!r}")
    if compare(lo, hi) > 0:
        raise DomainError(f"empty range: {lo} > {hi}")
    if order == "ascending":
        p = lo if is_palindrome(lo) else next_palindrome(lo)
        while compare(p, hi) <= 0:
            yield p
            p = next_palindrome(p)
    else:
        p = floor_palindrome(hi)
        while compare(p, lo) >= 0:
            yield p
            if not p:
                break
            p = prev_palindrome(p)


def palindrome_count_upto(n: DecimalNat) -> int:
    """Number of palindromes ``<= n``, computed from digit counts.

    No enumeration: there are 10 single-digit palindromes (zero included)
    and ``9 * 10**(ceil(d/2) - 1)`` of each longer length ``d``; within
    the top length the high half indexes the palindromes in order.
    """
    d = n.digits
    length = len(d)
    if length == 1:
        return d[0] + 1
    total = 10
    for k in range(2, length):
        total += 9 * 10 ** ((k + 1) // 2 - 1)
    half = (length + 1) // 2
    head_value = int("".join(chr(x + 48) for x in d[:half]))
    total += head_value - 10 ** (half - 1)
    if _mirror(d[:half], length) <= d:
        total += 1
    return total
