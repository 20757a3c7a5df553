"""Named verification suites: every identity re-checked on its stated range.

Each suite runs one or more checks and yields a ``Report`` per check: the
identity's name, the parameter range actually covered, how many instances
were evaluated, and the first counterexample if any instance failed.  The
suites never trust a formula: one side of every comparison is either a
brute-force oracle or an independently computed route.

The randomized checks (the seeded partial-sum difference lemmas) draw their
seed vectors and input sequences from ``random.Random`` with the fixed
default seed below, so failures reproduce; the seed can be overridden.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from .bijections import verify_partition
from .closed_forms import (
    band_count,
    closed_count,
    diagonal_count,
    diagonal_double_sum,
    family_k_case_counts,
    family_k_count,
    ratio_recurrence,
    recurrence_table,
)
from .core import binom, fib, fib_binom_convolution
from .enumeration import count_family_a, count_ratio_family, enumerate_family_k
from .errors import DomainError
from .finite_sets import FiniteSet, SchreierClass, classify, in_weighted_family
from .partial_sums import (
    fib_partial_sum_closed,
    iterated_partial_sum,
    repeated_partial_sum,
)

DEFAULT_SEED = 170339
RANDOM_TRIALS = 50
ENTRY_RANGE = 100  # pseudo-random entries are drawn from [-100, 100]


@dataclass(frozen=True)
class Report:
    """Outcome of one verification check over a parameter range."""

    identity: str
    params: str
    passed: bool
    checks: int
    counterexample: Optional[str] = None

    def render(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.identity} [{self.params}] ({self.checks} checks)"
        if not self.passed and self.counterexample:
            line += f": first counterexample {self.counterexample}"
        return line


def _run_checks(
    identity: str, params: str, cases: Iterable[tuple]
) -> Report:
    """Evaluate (description, got, want) triples; first mismatch wins."""
    checks = 0
    failure: Optional[str] = None
    for desc, got, want in cases:
        checks += 1
        if failure is None and got != want:
            failure = f"{desc}: got {got}, expected {want}"
    return Report(identity, params, failure is None, checks, failure)


# -- individual suites -------------------------------------------------------


def suite_thm1_1(n_max=None, k_max=None, seed=None) -> list[Report]:
    enum_top = n_max if n_max is not None else 22
    formula_top = n_max if n_max is not None else 500
    part_top = n_max if n_max is not None else 16
    reports = [
        _run_checks(
            "diagonal-count-vs-enumeration",
            f"n=1..{enum_top}",
            (
                (f"n={n}", count_family_a(n, n, "naive"), diagonal_count(n))
                for n in range(1, enum_top + 1)
            ),
        ),
        _run_checks(
            "diagonal-closed-vs-double-sum-vs-2fib",
            f"n=1..{formula_top}",
            (
                (
                    f"n={n}",
                    (closed_count(n, n), diagonal_double_sum(n)),
                    (2 * fib(n), 2 * fib(n)),
                )
                for n in range(1, formula_top + 1)
            ),
        ),
        _run_checks(
            "diagonal-partition",
            f"n=2..{part_top}",
            (
                (f"n={n}", verify_partition("thm1_1", n).ok, True)
                for n in range(2, part_top + 1)
            ),
        ),
    ]
    return reports


def suite_thm1_2(n_max=None, k_max=None, seed=None) -> list[Report]:
    n_top = n_max if n_max is not None else 20
    k_top = k_max if k_max is not None else 12

    def cases():
        for k in range(1, k_top + 1):
            for n in range(1, n_top + 1):
                want = count_family_a(k, n, "naive")
                got = (closed_count(k, n), count_family_a(k, n, "by_min"))
                yield (f"k={k} n={n}", got, (want, want))

    expansion = _run_checks(
        "worked-expansion-(4,10)",
        "k=4 n=10",
        [
            ("convolution part", 2 * sum(binom(6, i) * fib(4 - i) for i in range(3)), 60),
            ("top binomial part", 2 * binom(6, 3), 40),
            ("tail part j=5", binom(5, 5), 1),
            ("tail part j=6", binom(6, 4), 15),
            ("tail other j", sum(binom(j, 10 - j) for j in (1, 2, 3, 4)), 0),
            ("total", closed_count(4, 10), 116),
        ],
    )
    return [
        _run_checks("closed-vs-both-oracles", f"k=1..{k_top} n=1..{n_top}", cases()),
        expansion,
    ]


def suite_thm1_3(n_max=None, k_max=None, seed=None) -> list[Report]:
    l_top = n_max if n_max is not None else 30
    k_top = k_max if k_max is not None else 400

    def cases():
        for l in range(0, l_top + 1):
            for k in range(l + 2, k_top + 1):
                want = 2 * fib(k + l)
                yield (
                    f"k={k} l={l}",
                    (band_count(k, l), closed_count(k, k + l)),
                    (want, want),
                )

    return [_run_checks("band-vs-closed-vs-2fib", f"l=0..{l_top} k=l+2..{k_top}", cases())]


def suite_thm1_4(n_max=None, k_max=None, seed=None) -> list[Report]:
    count_top = n_max if n_max is not None else 22
    case_top = n_max if n_max is not None else 22
    part_top = n_max if n_max is not None else 18
    claim_top = n_max if n_max is not None else 18

    def case_split(n: int):
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
        return (both, two_only, three_only, neither)

    def case_cases():
        for n in range(3, case_top + 1):
            want = family_k_case_counts(n)
            yield (
                f"n={n}",
                case_split(n),
                (want.with_both, want.with_two_only, want.with_three_only, want.with_neither),
            )
            yield (f"n={n} total", want.total, fib(n))
            yield (f"n={n} nonneg", all(
                c >= 0 for c in (want.with_both, want.with_two_only,
                                 want.with_three_only, want.with_neither)
            ), True)

    def claim_min2():
        for n in range(3, claim_top + 1):
            members = [
                F for F in enumerate_family_k(n - 1) if len(F) > 1 and F.min == 2
            ]
            if n < 5:
                yield (f"n={n} vacuous", [str(F) for F in members], [])
            else:
                yield (
                    f"n={n}",
                    [str(F) for F in members],
                    [str(FiniteSet.of(2, 3, n - 1))],
                )

    def claim_min3():
        for n in range(3, claim_top + 1):
            members = [
                F for F in enumerate_family_k(n - 1) if len(F) > 1 and F.min == 3
            ]
            if n < 6:
                yield (f"n={n} vacuous", [str(F) for F in members], [])
            else:
                yield (f"n={n}", [len(F) for F in members], [3] * len(members))

    return [
        _run_checks(
            "pinned-count-vs-enumeration",
            f"n=2..{count_top}",
            (
                (f"n={n}", len(enumerate_family_k(n)), family_k_count(n))
                for n in range(2, count_top + 1)
            ),
        ),
        _run_checks("pinned-case-split", f"n=3..{case_top}", case_cases()),
        _run_checks(
            "pinned-partition",
            f"n=3..{part_top}",
            (
                (f"n={n}", verify_partition("thm1_4", n).ok, True)
                for n in range(3, part_top + 1)
            ),
        ),
        _run_checks("pinned-min2-members", f"n=3..{claim_top}", claim_min2()),
        _run_checks("pinned-min3-members", f"n=3..{claim_top}", claim_min3()),
    ]


def suite_prop3_1(n_max=None, k_max=None, seed=None) -> list[Report]:
    closed_top = n_max if n_max is not None else 300
    oracle_top = min(14, closed_top)

    def closed_cases():
        for n in range(1, closed_top + 1):
            for k in (n + 1, n + 2, 2 * n + 1):
                yield (f"k={k} n={n}", closed_count(k, n), fib(n + 1))

    def oracle_cases():
        for n in range(1, oracle_top + 1):
            for k in (n + 1, n + 3):
                want = fib(n + 1)
                yield (
                    f"k={k} n={n}",
                    (count_family_a(k, n, "naive"), count_family_a(k, n, "by_min")),
                    (want, want),
                )

    return [
        _run_checks("beyond-diagonal-closed", f"n=1..{closed_top}, k>n", closed_cases()),
        _run_checks("beyond-diagonal-oracle", f"n=1..{oracle_top}, k>n", oracle_cases()),
    ]


def suite_rec3_1(n_max=None, k_max=None, seed=None) -> list[Report]:
    table_k = k_max if k_max is not None else 12
    table_n = n_max if n_max is not None else 40
    part_k = k_max if k_max is not None else 8
    part_n = n_max if n_max is not None else 16

    def table_cases():
        cells = recurrence_table(table_k, table_n)
        for cell in cells:
            if cell.k >= 2 and cell.n > max(cell.k, 2):
                yield (
                    f"k={cell.k} n={cell.n}",
                    cell.value,
                    closed_count(cell.k, cell.n),
                )

    def part_cases():
        for k in range(2, part_k + 1):
            for n in range(max(k, 2) + 1, part_n + 1):
                yield (f"k={k} n={n}", verify_partition("rec3_1", n, k=k).ok, True)

    return [
        _run_checks(
            "recurrence-interior-vs-closed",
            f"k=2..{table_k} n=1..{table_n}",
            table_cases(),
        ),
        _run_checks(
            "column-partition", f"k=2..{part_k} n<= {part_n}", part_cases()
        ),
    ]


def _random_vectors(seed: int, k_top: int, n_top: int):
    rng = random.Random(seed)
    for trial in range(RANDOM_TRIALS):
        b = [rng.randint(-ENTRY_RANGE, ENTRY_RANGE) for _ in range(k_top)]
        a = [rng.randint(-ENTRY_RANGE, ENTRY_RANGE) for _ in range(n_top + 1)]
        yield trial, b, a


def suite_lemma3_3(n_max=None, k_max=None, seed=None) -> list[Report]:
    n_top = n_max if n_max is not None else 60
    k_top = k_max if k_max is not None else 12
    rng_seed = seed if seed is not None else DEFAULT_SEED

    def cases():
        for trial, b, a in _random_vectors(rng_seed, k_top, n_top):
            zero_route = {
                k: repeated_partial_sum(a, k) for k in range(1, k_top + 1)
            }
            for k in range(1, k_top + 1):
                seeds = b[:k]
                seeded = iterated_partial_sum(seeds, a)
                plain = zero_route[k]
                for n in range(0, n_top + 1):
                    want = sum(binom(n, i) * seeds[k - 1 - i] for i in range(k))
                    yield (
                        f"trial={trial} k={k} n={n}",
                        seeded[n] - plain[n],
                        want,
                    )

    return [
        _run_checks(
            "seeded-difference",
            f"k=1..{k_top} n=0..{n_top} trials={RANDOM_TRIALS} seed={rng_seed}",
            cases(),
        )
    ]


def suite_lemma3_4(n_max=None, k_max=None, seed=None) -> list[Report]:
    n_top = n_max if n_max is not None else 60
    k_top = k_max if k_max is not None else 12
    rng_seed = seed if seed is not None else DEFAULT_SEED

    def cases():
        for trial, _b, a in _random_vectors(rng_seed, k_top, n_top):
            bumped = [x + 1 for x in a]
            for k in range(1, k_top + 1):
                base = repeated_partial_sum(a, k)
                lifted = repeated_partial_sum(bumped, k)
                for m in range(0, n_top + 1):
                    yield (
                        f"trial={trial} k={k} m={m}",
                        lifted[m] - base[m],
                        binom(m, k),
                    )

    return [
        _run_checks(
            "term-bump-difference",
            f"k=1..{k_top} m=0..{n_top} trials={RANDOM_TRIALS} seed={rng_seed}",
            cases(),
        )
    ]


def suite_lemma3_5(n_max=None, k_max=None, seed=None) -> list[Report]:
    l_top = n_max if n_max is not None else 60
    k_top = k_max if k_max is not None else 12
    fib_prefix = [fib(i) for i in range(l_top + 2)]
    shifted = [fib(i + 2) for i in range(l_top + 1)]

    def cases():
        for k in range(0, k_top + 1):
            plain = repeated_partial_sum(fib_prefix, k)
            lifted = repeated_partial_sum(shifted, k)
            for l in range(0, l_top + 1):
                yield (f"k={k} l={l}", lifted[l], plain[l] + plain[l + 1])

    return [_run_checks("shifted-fib-transform", f"k=0..{k_top} l=0..{l_top}", cases())]


def suite_eq3_8(n_max=None, k_max=None, seed=None) -> list[Report]:
    l_top = n_max if n_max is not None else 20
    k_top = k_max if k_max is not None else 10
    first_row = [closed_count(1, j + 1) for j in range(l_top + 1)]

    def cases():
        for k in range(2, k_top + 1):
            transformed = repeated_partial_sum(first_row, k - 1)
            for l in range(0, l_top + 1):
                want = sum(
                    binom(l, i) * closed_count(k - i, k - i) for i in range(k - 1)
                )
                yield (
                    f"k={k} l={l}",
                    closed_count(k, k + l) - transformed[l],
                    want,
                )

    return [
        _run_checks(
            "column-minus-transformed-first-row",
            f"k=2..{k_top} l=0..{l_top}",
            cases(),
        )
    ]


def suite_eq3_9(n_max=None, k_max=None, seed=None) -> list[Report]:
    l_top = n_max if n_max is not None else 60
    k_top = k_max if k_max is not None else 12
    fib_prefix = [fib(i) for i in range(l_top + 1)]

    def cases():
        for k in range(0, k_top + 1):
            route = repeated_partial_sum(fib_prefix, k)
            for l in range(0, l_top + 1):
                yield (f"k={k} l={l}", fib_partial_sum_closed(k, l), route[l])

    return [
        _run_checks(
            "fib-transform-closed-vs-operator", f"k=0..{k_top} l=0..{l_top}", cases()
        )
    ]


def suite_eq1_2(n_max=None, k_max=None, seed=None) -> list[Report]:
    universe = n_max if n_max is not None else 14
    k_top = k_max if k_max is not None else 10

    subsets = []
    for mask in range(1 << universe):
        elems = tuple(i + 1 for i in range(universe) if (mask >> i) & 1)
        subsets.append(FiniteSet(elems))

    def cases():
        for k in range(1, k_top + 1):
            for E in subsets:
                cls = classify(E)
                expected = cls in (SchreierClass.EMPTY, SchreierClass.NONMAXIMAL) or (
                    cls is SchreierClass.MAXIMAL and k in E
                )
                yield (f"k={k} E={E}", in_weighted_family(E, k), expected)

    return [
        _run_checks(
            "weighted-family-decomposition",
            f"k=1..{k_top}, E within {{1..{universe}}}",
            cases(),
        )
    ]


def suite_eq3_10(n_max=None, k_max=None, seed=None) -> list[Report]:
    l_top = n_max if n_max is not None else 25
    k_desc = str(k_max) if k_max is not None else "l+200"

    def cases():
        for l in range(0, l_top + 1):
            k_top = k_max if k_max is not None else l + 200
            for k in range(l + 2, k_top + 1):
                yield (f"k={k} l={l}", fib_binom_convolution(k, l), fib(k + l))

    return [
        _run_checks("fib-binom-collapse", f"l=0..{l_top} k=l+2..{k_desc}", cases())
    ]


def suite_mpq(n_max=None, k_max=None, seed=None) -> list[Report]:
    n_top = n_max if n_max is not None else 18
    reports = []
    for p in (1, 2, 3):
        for q in (1, 2, 3):
            reports.append(
                _run_checks(
                    f"ratio-recurrence-p{p}q{q}",
                    f"n=1..{n_top}",
                    (
                        (
                            f"p={p} q={q} n={n}",
                            ratio_recurrence(p, q, n),
                            count_ratio_family(p, q, n),
                        )
                        for n in range(1, n_top + 1)
                    ),
                )
            )
    return reports


def suite_identities(n_max=None, k_max=None, seed=None) -> list[Report]:
    hs_top = n_max if n_max is not None else 60
    diag_top = n_max if n_max is not None else 200

    def hockey_cases():
        for n in range(0, hs_top + 1):
            for m in range(0, n + 1):
                yield (
                    f"m={m} n={n}",
                    sum(binom(i, m) for i in range(m, n + 1)),
                    binom(n + 1, m + 1),
                )

    def diagonal_cases():
        for n in range(0, diag_top + 1):
            yield (
                f"n={n}",
                sum(binom(n - k, k) for k in range(0, n // 2 + 1)),
                fib(n + 1),
            )

    reports = [
        _run_checks("hockey-stick", f"0<=m<=n<={hs_top}", hockey_cases()),
        _run_checks("fib-antidiagonal", f"n=0..{diag_top}", diagonal_cases()),
    ]
    reports.extend(suite_eq3_10(n_max=n_max, k_max=k_max))
    reports.extend(suite_eq1_2(n_max=min(n_max, 14) if n_max is not None else None))
    return reports


def suite_all(n_max=None, k_max=None, seed=None) -> list[Report]:
    reports = []
    for name in SUITE_ORDER:
        if name == "all":
            continue
        reports.extend(SUITES[name](n_max=n_max, k_max=k_max, seed=seed))
    return reports


SUITES: dict[str, Callable[..., list[Report]]] = {
    "thm1_1": suite_thm1_1,
    "thm1_2": suite_thm1_2,
    "thm1_3": suite_thm1_3,
    "thm1_4": suite_thm1_4,
    "prop3_1": suite_prop3_1,
    "rec3_1": suite_rec3_1,
    "lemma3_3": suite_lemma3_3,
    "lemma3_4": suite_lemma3_4,
    "lemma3_5": suite_lemma3_5,
    "eq3_8": suite_eq3_8,
    "eq3_9": suite_eq3_9,
    "eq1_2": suite_eq1_2,
    "eq3_10": suite_eq3_10,
    "mpq": suite_mpq,
    "identities": suite_identities,
    "all": suite_all,
}
SUITE_ORDER = (
    "thm1_1",
    "thm1_2",
    "thm1_3",
    "thm1_4",
    "prop3_1",
    "rec3_1",
    "lemma3_3",
    "lemma3_4",
    "lemma3_5",
    "eq3_8",
    "eq3_9",
    "eq1_2",
    "eq3_10",
    "mpq",
    "identities",
)


def run_suite(
    name: str,
    n_max: Optional[int] = None,
    k_max: Optional[int] = None,
    seed: Optional[int] = None,
) -> list[Report]:
    """Run a named suite and return its reports."""
    if name not in SUITES:
        raise DomainError(f"run_suite: unknown suite {name!r}")
    return SUITES[name](n_max=n_max, k_max=k_max, seed=seed)
