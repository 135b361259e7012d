"""Expected run, segment and ball statistics over uniform x in Z_m^n.

Closed forms are evaluated exactly as printed; the enumeration oracle sums
over all m^n words with exact rationals. Neither side is adjusted to agree
with the other, so any gap shows up as a nonzero delta.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .balls import ball_size_table
from .errors import RangeError, UsageError
from .sweep import DEFAULT_MAX_SPACE, check_capacity, sweep, word_space
from .words import count_runs, segment_bounds

QUANTITIES = ("sum_si", "a", "rho", "sum_si_sq", "ball1")


def _check(n: int, m: int, n_min: int = 2) -> None:
    if n < n_min or m < 2:
        raise RangeError(f"need n >= {n_min} and m > 1, got n={n}, m={m}")


def expected_sum_si(n: int, m: int) -> Fraction:
    _check(n, m)
    return n + Fraction((n - 2) * (m - 1) * (m - 2), m * m)


def expected_a(n: int, m: int) -> Fraction:
    _check(n, m)
    return 1 + Fraction((n - 2) * (m - 1) * (m - 2), m * m) + Fraction(n - 1, m)


def expected_rho(n: int, m: int) -> Fraction:
    _check(n, m, n_min=1)
    return n - Fraction(n - 1, m)


def expected_sum_si_sq(n: int, m: int) -> Fraction:
    _check(n, m)
    return (Fraction(n * (4 * m * m - 3 * m + 2), m * m)
            + Fraction(6 * m - 4, m * m)
            - 4
            - Fraction(2, m - 1) * (1 - Fraction(1, m**n)))


def expected_ball_size_closed(n: int, m: int) -> Fraction:
    _check(n, m)
    return (n * n * (m + Fraction(1, m) - 2)
            - Fraction(n, m)
            - Fraction((m - 1) * (m - 2), m * m)
            + 3 - Fraction(3, m) + Fraction(2, m * m)
            + Fraction(m**n - 1, m**n * (m - 1)))


CLOSED_FORMS = {
    "sum_si": expected_sum_si,
    "a": expected_a,
    "rho": expected_rho,
    "sum_si_sq": expected_sum_si_sq,
    "ball1": expected_ball_size_closed,
}


def _segment_totals_chunk(n: int, m: int, start: int, stop: int) -> tuple[int, int, int, int]:
    sum_si = a = rho = sum_si_sq = 0
    for row in word_space(n, m, start, stop).tolist():
        bounds = segment_bounds(row)
        a += len(bounds)
        rho += count_runs(row)
        for i, j in bounds:
            s = j - i + 1
            sum_si += s
            sum_si_sq += s * s
    return sum_si, a, rho, sum_si_sq


def segment_totals(n: int, m: int, workers: int = 1) -> dict[str, int]:
    parts = sweep(_segment_totals_chunk, n, m, workers)
    keys = ("sum_si", "a", "rho", "sum_si_sq")
    return {k: sum(p[i] for p in parts) for i, k in enumerate(keys)}


def exact_average_oracle(n: int, m: int, quantity: str, workers: int = 1,
                         max_space: int | None = DEFAULT_MAX_SPACE) -> Fraction:
    """Exact mean of ``quantity`` over all of Z_m^n."""
    if quantity not in QUANTITIES:
        raise UsageError(f"unknown quantity {quantity!r}; choose from {QUANTITIES}")
    total = check_capacity(n, m, max_space)
    if quantity == "ball1":
        return Fraction(sum(ball_size_table(n, m, 1, workers, max_space)), total)
    return Fraction(segment_totals(n, m, workers)[quantity], total)


@dataclass(frozen=True)
class QuantityComparison:
    quantity: str
    closed: Fraction
    oracle: Fraction

    @property
    def delta(self) -> Fraction:
        return self.closed - self.oracle


@dataclass(frozen=True)
class ExpectationReport:
    n: int
    m: int
    rows: tuple[QuantityComparison, ...]

    def __getitem__(self, quantity: str) -> QuantityComparison:
        for row in self.rows:
            if row.quantity == quantity:
                return row
        raise KeyError(quantity)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "quantities": {
                r.quantity: {"closed": str(r.closed), "oracle": str(r.oracle), "delta": str(r.delta)}
                for r in self.rows
            },
        }


def expectation_report(n: int, m: int, workers: int = 1,
                       max_space: int | None = DEFAULT_MAX_SPACE) -> ExpectationReport:
    total = check_capacity(n, m, max_space)
    totals = segment_totals(n, m, workers)
    totals["ball1"] = sum(ball_size_table(n, m, 1, workers, max_space))
    rows = tuple(
        QuantityComparison(q, CLOSED_FORMS[q](n, m), Fraction(totals[q], total)) for q in QUANTITIES
    )
    return ExpectationReport(n, m, rows)
