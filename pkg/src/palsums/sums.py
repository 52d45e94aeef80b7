"""Sums of two palindromes and the greedy palindromic partition.

The two-palindrome membership test is an exhaustive witness search with a
fixed, deterministic order: candidate larger summands descend from the
floor palindrome, and the first candidate whose remainder is palindromic
wins.  Any decomposition has a larger summand of at least half the
target, so the descent may stop as soon as the candidate falls below the
remainder.
"""

from __future__ import annotations

from dataclasses import dataclass

from .config import Budget, DEFAULT_BUDGET
from .decimal import DecimalNat, ONE, ZERO, add, compare, magnitude, shift_left, sub
from .errors import BudgetError, DomainError
from .palindrome import (
    floor_palindrome,
    is_palindrome,
    palindromes_between,
    prev_palindrome,
)

__all__ = [
    "PalindromeWitness",
    "GreedyDecomposition",
    "TwoPTable",
    "two_palindrome_witness",
    "in_2p",
    "two_p_table",
    "greedy_decompose",
    "a088601",
    "adversary_step",
    "greedy_adversary",
]


@dataclass(frozen=True, slots=True)
class PalindromeWitness:
    """A certified decomposition into two palindromes, smaller part first."""

    p: DecimalNat
    q: DecimalNat

    def __post_init__(self) -> None:
        if not (is_palindrome(self.p) and is_palindrome(self.q)):
            raise ValueError(f"witness parts must be palindromic: {self.p}, {self.q}")
        if compare(self.p, self.q) > 0:
            raise ValueError(f"witness parts out of order: {self.p} > {self.q}")

    @classmethod
    def for_sum(cls, n: DecimalNat, p: DecimalNat, q: DecimalNat) -> "PalindromeWitness":
        """Construct a witness and check that it actually decomposes ``n``."""
        if compare(add(p, q), n) != 0:
            raise ValueError(f"{p} + {q} != {n}")
        return cls(p, q)


@dataclass(frozen=True, slots=True)
class GreedyDecomposition:
    """Summands produced by repeatedly peeling off the floor palindrome."""

    target: DecimalNat
    summands: tuple[DecimalNat, ...]

    def __len__(self) -> int:
        return len(self.summands)


def two_palindrome_witness(n: DecimalNat) -> PalindromeWitness | None:
    """Canonical witness that ``n`` is a sum of two palindromes, if one exists.

    Deterministic: the larger summand is the greatest palindrome that
    works.  Returns None exactly when no decomposition exists.
    """
    q = floor_palindrome(n)
    while True:
        r = sub(n, q)
        if compare(r, q) > 0:
            return None  # q fell below n/2, no larger summand remains
        if is_palindrome(r):
            return PalindromeWitness.for_sum(n, r, q)
        if not q:
            return None
        q = prev_palindrome(q)


def in_2p(n: DecimalNat) -> bool:
    """True iff ``n`` is a sum of two palindromes."""
    return two_palindrome_witness(n) is not None


class TwoPTable:
    """Immutable membership bitmap: bit ``i`` set iff ``i`` is a sum of two palindromes.

    Built by marking ``p + q`` over all palindrome pairs with ``p <= q``
    up to the limit.  Intended for bulk scans; single queries should use
    :func:`in_2p`.
    """

    __slots__ = ("limit", "_bits")

    def __init__(self, limit: int, bits: bytes):
        self.limit = limit
        self._bits = bits

    @classmethod
    def build(cls, limit: DecimalNat | int, budget: Budget = DEFAULT_BUDGET) -> "TwoPTable":
        limit_int = int(limit)
        if limit_int < 0:
            raise ValueError("limit must be non-negative")
        if limit_int > budget.table_limit:
            raise BudgetError(f"table limit {limit_int} exceeds budget {budget.table_limit}")
        pals = [int(p) for p in palindromes_between(ZERO, DecimalNat.from_int(limit_int))]
        bits = bytearray(limit_int // 8 + 1)
        for qi in range(len(pals)):
            q = pals[qi]
            for pi in range(qi + 1):
                s = pals[pi] + q
                if s > limit_int:
                    break
                bits[s >> 3] |= 1 << (s & 7)
        return cls(limit_int, bytes(bits))

    def __contains__(self, value: DecimalNat | int) -> bool:
        i = int(value)
        if not 0 <= i <= self.limit:
            raise ValueError(f"{i} outside table range 0..{self.limit}")
        return bool(self._bits[i >> 3] & (1 << (i & 7)))


def two_p_table(limit: DecimalNat | int, budget: Budget = DEFAULT_BUDGET) -> TwoPTable:
    """Build the membership bitmap for all values up to ``limit``."""
    return TwoPTable.build(limit, budget)


def greedy_decompose(n: DecimalNat) -> GreedyDecomposition:
    """Partition ``n`` by repeatedly subtracting the floor palindrome.

    Each step strictly decreases the remainder, so the loop terminates;
    zero gets the empty partition.
    """
    summands = []
    r = n
    while r:
        p = floor_palindrome(r)
        summands.append(p)
        r = sub(r, p)
    return GreedyDecomposition(target=n, summands=tuple(summands))


def a088601(n: DecimalNat) -> int:
    """Number of summands the greedy palindromic partition uses for ``n``."""
    return len(greedy_decompose(n).summands)


def adversary_step(n: DecimalNat, m: int | None = None) -> DecimalNat:
    """One step of the adversary recursion: ``10**(2m) + 1 + n``.

    ``m`` must satisfy ``10**m > n``; by default the smallest such ``m``
    is used.  The result's first greedy step peels off ``10**(2m) + 1``
    and leaves exactly ``n``.
    """
    if not n:
        raise DomainError("adversary step needs n >= 1")
    if m is None:
        m = magnitude(n) + 1
    elif compare(shift_left(ONE, m), n) <= 0:
        raise DomainError(f"10^{m} does not exceed {n}")
    return add(add(shift_left(ONE, 2 * m), ONE), n)


def greedy_adversary(j: int) -> DecimalNat:
    """The ``j``-th member of the adversary family, starting from 1.

    Built with the smallest admissible exponent at every step, so the
    sequence is canonical; its greedy partition has exactly ``j``
    summands.
    """
    if j < 1:
        raise DomainError("adversary index starts at 1")
    n = ONE
    for _ in range(j - 1):
        n = adversary_step(n)
    return n
