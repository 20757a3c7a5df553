"""Brute-force oracles and structured enumeration for the set families.

Everything here is deliberately dumb: the naive routines scan every subset
of the universe by bitmask and test the defining inequality directly, so
they serve as the independent ground truth for the closed forms elsewhere
in the package.  A second, structured counting route (``by_min``) partitions
on the minimum element and on whether the zero-weighted index k occurs,
summing binomial coefficients without materializing sets; the two routes
check each other.

Canonical enumeration order (EnumOrder): ascending cardinality, then
lexicographic on the element tuple; the empty set sorts first.  Every
enumeration function returns its results in this order, and parallel scans
merge and re-sort so serial and parallel results are byte-identical.

Bitmask convention: bit i-1 of a mask corresponds to element i.

Size caps: naive scans refuse universes beyond 24 elements unless the
``SCHREIER_MAX_ORACLE_N`` environment variable overrides the cap; the
structured routes have fixed caps (40 for enumeration, 64 for counting)
well past anything the verification suites request.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ThreadPoolExecutor

from .core import binom
from .errors import DomainError, SizeLimitError
from .finite_sets import FiniteSet

DEFAULT_MAX_ORACLE_N = 24
ORACLE_N_ENV = "SCHREIER_MAX_ORACLE_N"
STRUCTURED_MAX_N = 40
BY_MIN_MAX_N = 64


def oracle_cap() -> int:
    """Current cap on naive scan universes, env-overridable per process."""
    raw = os.environ.get(ORACLE_N_ENV)
    if raw is None:
        return DEFAULT_MAX_ORACLE_N
    try:
        return int(raw)
    except ValueError as exc:
        raise DomainError(f"{ORACLE_N_ENV} must be an integer, got {raw!r}") from exc


def _require_naive_size(n: int, what: str) -> None:
    cap = oracle_cap()
    if n > cap:
        raise SizeLimitError(
            f"{what}: universe of {n} elements exceeds the naive scan cap of "
            f"{cap} (set {ORACLE_N_ENV} to raise it)"
        )


def enum_order_key(E: FiniteSet) -> tuple[int, tuple[int, ...]]:
    """Sort key realizing EnumOrder: cardinality first, then lexicographic."""
    return (len(E.elements), E.elements)


def _mask_to_set(mask: int) -> FiniteSet:
    elems = []
    i = 1
    while mask:
        if mask & 1:
            elems.append(i)
        mask >>= 1
        i += 1
    return FiniteSet(tuple(elems))


def _chunk_ranges(lo: int, hi: int, workers: int) -> list[tuple[int, int]]:
    span = hi - lo
    if span <= 0:
        return []
    step = (span + workers - 1) // workers
    return [(s, min(s + step, hi)) for s in range(lo, hi, step)]


def _run_chunks(fn, lo: int, hi: int, workers: int) -> list:
    """Apply fn(lo, hi) over contiguous chunks, in chunk order."""
    if workers <= 1:
        return [fn(lo, hi)]
    ranges = _chunk_ranges(lo, hi, workers)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda r: fn(*r), ranges))


# -- family A: weight-k admissible sets with max <= n -----------------------


def _count_a_chunk(k: int, n: int, lo: int, hi: int) -> int:
    """Count nonempty member masks in [lo, hi) by the raw definition."""
    kshift = k - 1
    count = 0
    for m in range(lo, hi):
        wsize = m.bit_count() - ((m >> kshift) & 1)
        if (m & -m).bit_length() > wsize:
            count += 1
    return count


def _collect_a_chunk(k: int, n: int, lo: int, hi: int) -> list[int]:
    kshift = k - 1
    hits = []
    for m in range(lo, hi):
        wsize = m.bit_count() - ((m >> kshift) & 1)
        if (m & -m).bit_length() > wsize:
            hits.append(m)
    return hits


def _count_a_by_min(k: int, n: int) -> int:
    """Binomial count partitioned on min element and membership of k.

    A nonempty member with min element m consists of m, possibly k, and t
    further elements drawn from {m+1..n} minus {k}; admissibility caps t at
    m-2 (m-1 when k = m, since k contributes nothing to the weight).
    """
    total = 1  # the empty set
    for m in range(1, n + 1):
        if m == k:
            avail = n - m
            total += sum(binom(avail, t) for t in range(0, min(m - 1, avail) + 1))
            continue
        k_inside = m < k <= n
        avail = (n - m) - (1 if k_inside else 0)
        ways = sum(binom(avail, t) for t in range(0, min(m - 2, avail) + 1))
        total += 2 * ways if k_inside else ways
    return total


def _iter_a_structured(k: int, n: int):
    """Yield every member of the bounded weight-k family, min element first.

    Mirrors the by_min partition, so it only visits actual members and never
    scans the full powerset.
    """
    yield FiniteSet()
    for m in range(1, n + 1):
        rest = range(m + 1, n + 1)
        if m == k:
            cap = min(m - 1, n - m)
            for t in range(0, cap + 1):
                for tail in itertools.combinations(rest, t):
                    yield FiniteSet((m,) + tail)
            continue
        pool = tuple(x for x in rest if x != k)
        cap = min(m - 2, len(pool))
        for t in range(0, cap + 1):
            for tail in itertools.combinations(pool, t):
                yield FiniteSet(tuple(sorted((m,) + tail)))
                if m < k <= n:
                    yield FiniteSet(tuple(sorted((m, k) + tail)))


def count_family_a(k: int, n: int, strategy: str = "naive", *, workers: int = 1) -> int:
    """Count the bounded weight-k family over {1..n}, empty set included.

    strategy "naive" scans all 2**n subsets and tests the definition;
    strategy "by_min" sums binomials over a partition of the members.  The
    two must agree; the verification suites check that they do.
    """
    if k < 1:
        raise DomainError(f"count_family_a: k must be >= 1, got {k}")
    if n < 1:
        raise DomainError(f"count_family_a: n must be >= 1, got {n}")
    if strategy == "naive":
        _require_naive_size(n, "count_family_a")
        parts = _run_chunks(
            lambda lo, hi: _count_a_chunk(k, n, lo, hi), 1, 1 << n, max(1, workers)
        )
        return 1 + sum(parts)
    if strategy == "by_min":
        if n > BY_MIN_MAX_N:
            raise SizeLimitError(
                f"count_family_a: by_min strategy capped at n <= {BY_MIN_MAX_N}, got {n}"
            )
        return _count_a_by_min(k, n)
    raise DomainError(f"count_family_a: unknown strategy {strategy!r}")


def enumerate_family_a(
    k: int, n: int, *, strategy: str = "auto", workers: int = 1
) -> list[FiniteSet]:
    """Return every member of the bounded weight-k family, in EnumOrder."""
    if k < 1:
        raise DomainError(f"enumerate_family_a: k must be >= 1, got {k}")
    if n < 1:
        raise DomainError(f"enumerate_family_a: n must be >= 1, got {n}")
    if strategy == "auto":
        strategy = "naive" if n <= oracle_cap() else "structured"
    if strategy == "naive":
        _require_naive_size(n, "enumerate_family_a")
        parts = _run_chunks(
            lambda lo, hi: _collect_a_chunk(k, n, lo, hi), 1, 1 << n, max(1, workers)
        )
        members = [FiniteSet()]
        for chunk in parts:
            members.extend(_mask_to_set(m) for m in chunk)
    elif strategy == "structured":
        if n > STRUCTURED_MAX_N:
            raise SizeLimitError(
                f"enumerate_family_a: structured strategy capped at n <= "
                f"{STRUCTURED_MAX_N}, got {n}"
            )
        members = list(_iter_a_structured(k, n))
    else:
        raise DomainError(f"enumerate_family_a: unknown strategy {strategy!r}")
    members.sort(key=enum_order_key)
    return members


# -- family K: pinned max, weight zero on 2 and 3, size != 2 ----------------


def _k_member_mask(m: int, n: int) -> bool:
    """Test mask m over {1..n-1}, implicitly joined with {n}."""
    size = m.bit_count() + 1
    if size == 2:
        return False
    wsize = size
    if n == 2 or (m >> 1) & 1:
        wsize -= 1
    if n == 3 or (m >> 2) & 1:
        wsize -= 1
    min_elem = (m & -m).bit_length() if m else n
    return min_elem > wsize


def enumerate_family_k(n: int, *, workers: int = 1) -> list[FiniteSet]:
    """Return every member of the pinned family at level n, in EnumOrder."""
    if n < 2:
        raise DomainError(f"enumerate_family_k: n must be >= 2, got {n}")
    _require_naive_size(n - 1, "enumerate_family_k")

    def collect(lo: int, hi: int) -> list[int]:
        return [m for m in range(lo, hi) if _k_member_mask(m, n)]

    parts = _run_chunks(collect, 0, 1 << (n - 1), max(1, workers))
    members = []
    for chunk in parts:
        members.extend(_mask_to_set(m).with_element(n) for m in chunk)
    members.sort(key=enum_order_key)
    return members


# -- ratio family: q * min >= p * size, pinned max --------------------------


def _ratio_member_mask(m: int, p: int, q: int, n: int) -> bool:
    size = m.bit_count() + 1
    min_elem = (m & -m).bit_length() if m else n
    return q * min_elem >= p * size


def count_ratio_family(p: int, q: int, n: int) -> int:
    """Count sets with max = n and q * min >= p * size, by exhaustive scan."""
    if p < 1 or q < 1:
        raise DomainError(f"count_ratio_family: p, q must be >= 1, got p={p}, q={q}")
    if n < 1:
        raise DomainError(f"count_ratio_family: n must be >= 1, got {n}")
    _require_naive_size(n - 1, "count_ratio_family")
    return sum(1 for m in range(1 << (n - 1)) if _ratio_member_mask(m, p, q, n))


def enumerate_ratio_family(p: int, q: int, n: int) -> list[FiniteSet]:
    """Return every member of the ratio family at level n, in EnumOrder."""
    if p < 1 or q < 1:
        raise DomainError(
            f"enumerate_ratio_family: p, q must be >= 1, got p={p}, q={q}"
        )
    if n < 1:
        raise DomainError(f"enumerate_ratio_family: n must be >= 1, got {n}")
    _require_naive_size(n - 1, "enumerate_ratio_family")
    members = [
        _mask_to_set(m).with_element(n)
        for m in range(1 << (n - 1))
        if _ratio_member_mask(m, p, q, n)
    ]
    members.sort(key=enum_order_key)
    return members
