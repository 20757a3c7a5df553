"""Exact arithmetic primitives: Fibonacci, binomials, their convolution."""

from concurrent.futures import ThreadPoolExecutor

import pytest
from hypothesis import given, strategies as st

from schreier.core import binom, fib, fib_binom_convolution
from schreier.errors import DomainError


def test_fib_small_values():
    assert [fib(n) for n in range(11)] == [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55]


def test_fib_frozen_values():
    # frozen from iterating the recurrence under F(0)=0, F(1)=1
    assert fib(17) == 1597
    assert fib(18) == 2584
    assert fib(30) == 832040
    assert fib(100) == 354224848179261915075


def test_fib_satisfies_recurrence_to_ten_thousand():
    top = 10_000
    fib(top)  # grow the cache once
    for n in range(2, top + 1):
        assert fib(n) == fib(n - 1) + fib(n - 2)


def test_fib_rejects_negative_index():
    with pytest.raises(DomainError):
        fib(-1)


def test_fib_concurrent_reads_are_consistent():
    import schreier.core as core

    with ThreadPoolExecutor(max_workers=8) as pool:
        results = list(pool.map(lambda _: core.fib(4000), range(32)))
    assert len(set(results)) == 1
    assert results[0] == core.fib(3999) + core.fib(3998)


def test_binom_values_and_conventions():
    assert binom(5, 2) == 10
    assert binom(5, 0) == 1
    assert binom(5, 5) == 1
    assert binom(0, 0) == 1
    assert binom(5, 6) == 0
    assert binom(5, -1) == 0


def test_binom_rejects_negative_n():
    with pytest.raises(DomainError):
        binom(-1, 0)


@given(st.integers(1, 80), st.integers(0, 80))
def test_binom_pascal_rule(n, k):
    assert binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k)


def test_hockey_stick_identity():
    for n in range(0, 40):
        for m in range(0, n + 1):
            assert sum(binom(i, m) for i in range(m, n + 1)) == binom(n + 1, m + 1)


def test_fib_antidiagonal_identity():
    for n in range(0, 120):
        assert sum(binom(n - k, k) for k in range(n // 2 + 1)) == fib(n + 1)


def test_fib_binom_convolution_values():
    assert fib_binom_convolution(5, 0) == 5  # single term C(0,0) F(5)
    assert fib_binom_convolution(4, 2) == 8  # 3 + 2*2 + 1 = F(6)
    # term-by-term at k = l + 1: C(2,0)F(3) + C(2,1)F(2) + C(2,2)F(1) = 2+2+1
    assert fib_binom_convolution(3, 2) == 5


def test_fib_binom_convolution_collapses_on_the_band():
    for l in range(0, 12):
        for k in range(l + 2, l + 40):
            assert fib_binom_convolution(k, l) == fib(k + l)


def test_fib_binom_convolution_domain():
    with pytest.raises(DomainError):
        fib_binom_convolution(2, 3)
    with pytest.raises(DomainError):
        fib_binom_convolution(3, -1)
