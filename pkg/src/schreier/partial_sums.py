"""Seeded partial-sum operators on integer sequences.

For a seed b and a sequence (a_0, a_1, ...), the seeded partial-sum operator
produces the sequence whose n-th term is b + a_0 + ... + a_{n-1}; the 0-th
term is the seed itself.  Operators compose by feeding one output into the
next, each with its own seed; ``repeated_partial_sum`` is the k-fold
composition with every seed zero.

All operators preserve length: applied to a finite prefix they return a
prefix of the same length, which is exactly the prefix of the infinite
transform (term n only ever looks at terms before n).

Applied k-fold to the Fibonacci sequence, the n-th term has the closed form
sum_{j=0..l-1} C(j, l-1-j+k) at index l, which ``fib_partial_sum_closed``
evaluates literally; the verification suites compare the two routes and
check the displayed difference identities for shifted inputs and nonzero
seeds.
"""

from __future__ import annotations

from typing import Sequence

from .core import binom
from .errors import DomainError


def seeded_partial_sum(b: int, seq: Sequence[int]) -> tuple[int, ...]:
    """Apply the partial-sum operator with seed b to a finite prefix.

    Output term n is b + seq[0] + ... + seq[n-1]; the output has the same
    length as the input.
    """
    out = []
    acc = b
    for x in seq:
        out.append(acc)
        acc += x
    return tuple(out)


def iterated_partial_sum(seeds: Sequence[int], seq: Sequence[int]) -> tuple[int, ...]:
    """Compose seeded partial sums, innermost seed first.

    ``seeds = (b0, b1, ..., b_{k-1})`` applies the b0-seeded operator to the
    input, then the b1-seeded operator to that, and so on.
    """
    out = tuple(seq)
    for b in seeds:
        out = seeded_partial_sum(b, out)
    return out


def repeated_partial_sum(seq: Sequence[int], k: int) -> tuple[int, ...]:
    """Apply the zero-seeded partial-sum operator k times (k >= 0)."""
    if k < 0:
        raise DomainError(f"repeated_partial_sum: k must be >= 0, got {k}")
    return iterated_partial_sum((0,) * k, seq)


def fib_partial_sum_closed(k: int, l: int) -> int:
    """Term l of the k-fold zero-seeded partial sum of the Fibonacci
    sequence, as the literal binomial sum sum_{j=0..l-1} C(j, l-1-j+k)."""
    if k < 0:
        raise DomainError(f"fib_partial_sum_closed: k must be >= 0, got {k}")
    if l < 0:
        raise DomainError(f"fib_partial_sum_closed: l must be >= 0, got {l}")
    return sum(binom(j, l - 1 - j + k) for j in range(0, l))
