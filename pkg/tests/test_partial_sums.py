"""Seeded partial-sum operators and their binomial difference laws."""

import pytest
from hypothesis import given, strategies as st

from schreier.core import binom, fib
from schreier.errors import DomainError
from schreier.partial_sums import (
    fib_partial_sum_closed,
    iterated_partial_sum,
    repeated_partial_sum,
    seeded_partial_sum,
)

int_lists = st.lists(st.integers(-50, 50), max_size=25)


def test_seeded_partial_sum_examples():
    assert seeded_partial_sum(3, (1, 1, 1, 1)) == (3, 4, 5, 6)
    assert seeded_partial_sum(0, (0, 1, 1, 2, 3, 5)) == (0, 0, 1, 2, 4, 7)
    assert seeded_partial_sum(7, ()) == ()


def test_iterated_partial_sum_applies_innermost_seed_first():
    assert iterated_partial_sum((3, 5), (1, 1, 1, 1)) == (5, 8, 12, 17)
    assert iterated_partial_sum((), (4, 2)) == (4, 2)


def test_repeated_partial_sum_examples():
    assert repeated_partial_sum((0, 1, 1, 2, 3, 5), 1) == (0, 0, 1, 2, 4, 7)
    assert repeated_partial_sum((9, 9), 0) == (9, 9)
    with pytest.raises(DomainError):
        repeated_partial_sum((1,), -1)


@given(int_lists, st.integers(-100, 100))
def test_seeded_partial_sum_shape(seq, b):
    out = seeded_partial_sum(b, seq)
    assert len(out) == len(seq)
    if seq:
        assert out[0] == b
    for n in range(len(seq) - 1):
        assert out[n + 1] - out[n] == seq[n]


@given(int_lists, st.lists(st.integers(-100, 100), max_size=6))
def test_iterated_preserves_length(seq, seeds):
    assert len(iterated_partial_sum(seeds, seq)) == len(seq)


def test_seeded_difference_worked_example():
    # two seeds (3, 5) against the zero-seeded route, constant-ones input
    a = (1,) * 8
    seeded = iterated_partial_sum((3, 5), a)
    plain = repeated_partial_sum(a, 2)
    for n in range(8):
        assert seeded[n] - plain[n] == 5 + 3 * n  # C(n,0)*5 + C(n,1)*3
    assert seeded[2] - plain[2] == 11


def test_term_bump_difference_example():
    a = (4, -2, 7, 0, 3, 1, 1)
    bumped = tuple(x + 1 for x in a)
    for k in range(1, 5):
        base = repeated_partial_sum(a, k)
        lifted = repeated_partial_sum(bumped, k)
        for m in range(len(a)):
            assert lifted[m] - base[m] == binom(m, k)


def test_shifted_fib_decomposes():
    prefix = tuple(fib(i) for i in range(40))
    shifted = tuple(fib(i + 2) for i in range(39))
    for k in range(0, 8):
        plain = repeated_partial_sum(prefix, k)
        lifted = repeated_partial_sum(shifted, k)
        for l in range(0, 39):
            assert lifted[l] == plain[l] + plain[l + 1]


def test_fib_partial_sum_closed_values():
    assert fib_partial_sum_closed(0, 5) == 5
    assert fib_partial_sum_closed(1, 3) == 2
    assert fib_partial_sum_closed(3, 0) == 0
    with pytest.raises(DomainError):
        fib_partial_sum_closed(-1, 2)
    with pytest.raises(DomainError):
        fib_partial_sum_closed(2, -1)


def test_fib_partial_sum_closed_matches_operator_route():
    prefix = tuple(fib(i) for i in range(40))
    for k in range(0, 9):
        route = repeated_partial_sum(prefix, k)
        for l in range(0, 40):
            assert fib_partial_sum_closed(k, l) == route[l]
