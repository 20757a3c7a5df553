"""Closed forms and recurrences against the brute-force oracles."""

import pytest

from schreier.closed_forms import (
    band_count,
    closed_count,
    diagonal_count,
    diagonal_double_sum,
    family_k_case_counts,
    family_k_count,
    ratio_recurrence,
    recurrence_table,
)
from schreier.core import fib
from schreier.enumeration import (
    count_family_a,
    count_ratio_family,
    enumerate_family_k,
)
from schreier.errors import DomainError


def test_closed_count_frozen_values():
    assert closed_count(4, 10) == 116
    assert closed_count(2, 3) == 4
    assert closed_count(5, 5) == 10
    assert closed_count(1, 16) == 1598
    assert closed_count(7, 6) == 13  # beyond the diagonal: F(7)


def test_closed_count_matches_both_oracles():
    for k in range(1, 11):
        for n in range(1, 13):
            want = count_family_a(k, n, "naive")
            assert closed_count(k, n) == want
            assert count_family_a(k, n, "by_min") == want


def test_closed_count_beyond_diagonal_is_fibonacci():
    for n in range(1, 40):
        for k in (n + 1, n + 5, 3 * n + 2):
            assert closed_count(k, n) == fib(n + 1)


def test_diagonal_count_values():
    assert diagonal_count(1) == 2
    assert diagonal_count(5) == 10
    assert diagonal_count(30) == 1664080
    for n in range(1, 60):
        assert diagonal_count(n) == 2 * fib(n)


def test_diagonal_double_sum_matches_diagonal():
    assert diagonal_double_sum(1) == 2
    assert diagonal_double_sum(5) == 10
    assert diagonal_double_sum(16) == 1974
    for n in range(1, 90):
        assert diagonal_double_sum(n) == diagonal_count(n)


def test_band_count_values_and_domain():
    assert band_count(6, 1) == 26
    assert band_count(2, 0) == 2
    for l in range(0, 7):
        for k in range(l + 2, 45):
            assert band_count(k, l) == closed_count(k, k + l)
    with pytest.raises(DomainError):
        band_count(3, -1)
    with pytest.raises(DomainError):
        band_count(3, 2)


def test_recurrence_table_matches_closed_form():
    cells = recurrence_table(7, 16)
    assert len(cells) == 7 * 16
    # row-major: k ascending, n ascending inside each row
    assert (cells[0].k, cells[0].n) == (1, 1)
    assert (cells[16].k, cells[16].n) == (2, 1)
    for cell in cells:
        assert cell.value == closed_count(cell.k, cell.n)


def test_recurrence_table_seeded_and_interior_cells():
    values = {(c.k, c.n): c.value for c in recurrence_table(4, 10)}
    assert values[(1, 7)] == 22  # k=1 row comes from the closed form
    assert values[(2, 5)] == values[(2, 4)] + values[(1, 3)]  # 11 = 7 + 4
    assert values[(2, 5)] == 11
    with pytest.raises(DomainError):
        recurrence_table(0, 5)


def test_family_k_count_values():
    assert family_k_count(2) == 1
    assert family_k_count(5) == 3
    assert family_k_count(16) == 610
    with pytest.raises(DomainError):
        family_k_count(1)


def test_family_k_case_counts_values():
    c3 = family_k_case_counts(3)
    assert (c3.with_both, c3.with_two_only, c3.with_three_only, c3.with_neither) == (
        1, 0, 0, 1,
    )
    c4 = family_k_case_counts(4)
    assert (c4.with_both, c4.with_two_only, c4.with_three_only, c4.with_neither) == (
        1, 0, 1, 1,
    )
    c10 = family_k_case_counts(10)
    assert (c10.with_both, c10.with_two_only, c10.with_three_only, c10.with_neither) == (
        1, 0, 7, 47,
    )
    for n in range(3, 30):
        assert family_k_case_counts(n).total == fib(n)
    with pytest.raises(DomainError):
        family_k_case_counts(2)


def test_family_k_case_counts_match_enumeration():
    for n in range(3, 13):
        want = family_k_case_counts(n)
        both = two_only = three_only = neither = 0
        for E in enumerate_family_k(n + 1):
            has2, has3 = 2 in E, 3 in E
            if has2 and has3:
                both += 1
            elif has2:
                two_only += 1
            elif has3:
                three_only += 1
            else:
                neither += 1
        assert (both, two_only, three_only, neither) == (
            want.with_both,
            want.with_two_only,
            want.with_three_only,
            want.with_neither,
        )


def test_ratio_recurrence_matches_oracle():
    for p in (1, 2, 3):
        for q in (1, 2, 3):
            for n in range(1, 13):
                assert ratio_recurrence(p, q, n) == count_ratio_family(p, q, n)


def test_ratio_recurrence_frozen_sequences():
    assert [ratio_recurrence(1, 1, n) for n in range(1, 19)] == [
        fib(n) for n in range(1, 19)
    ]
    assert [ratio_recurrence(1, 2, n) for n in range(1, 11)] == [
        1, 2, 3, 5, 9, 16, 28, 49, 86, 151,
    ]
    assert [ratio_recurrence(2, 1, n) for n in range(1, 11)] == [
        0, 1, 1, 1, 2, 3, 4, 6, 9, 13,
    ]


def test_ratio_recurrence_domain():
    with pytest.raises(DomainError):
        ratio_recurrence(0, 1, 3)
    with pytest.raises(DomainError):
        ratio_recurrence(1, 1, 0)
