"""Minimum and maximum radius-one ball sizes and their centres.

The binary maximum is governed by alpha-balanced words: words with ``alpha``
maximal alternating segments whose lengths are all ``ceil(n/alpha)`` or one
less. The optimal segment counts are the integers nearest to
``sqrt(1 + 2n) / 2``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb, isqrt, sqrt

from .balls import ball_size_table, hamming_ball_size
from .errors import DomainError, RangeError
from .words import Word, all_words, alternating_segments, runs


@dataclass(frozen=True)
class BalancedProfile:
    n: int
    alpha: int
    c: int
    k: int

    @classmethod
    def of(cls, n: int, alpha: int) -> BalancedProfile:
        if not 1 <= alpha <= n:
            raise RangeError(f"need 1 <= alpha <= n, got alpha={alpha}, n={n}")
        c = -(-n // alpha)
        k = n % alpha or alpha
        return cls(n, alpha, c, k)


@dataclass(frozen=True)
class ExtremalResult:
    value: int
    alpha_set: frozenset[int] = frozenset()
    argmax_set: frozenset[Word] | None = field(default=None, compare=False)


def min_ball_size(n: int, m: int, t: int) -> int:
    if not (n > t >= 0) or m < 2:
        raise RangeError(f"need n > t >= 0 and m > 1, got n={n}, m={m}, t={t}")
    return hamming_ball_size(n, m, t)


def max_ball_size_nonbinary(n: int, m: int) -> int:
    if m <= 2:
        raise DomainError("non-binary maximum needs m > 2")
    if n < 1:
        raise RangeError(f"need n >= 1, got {n}")
    return n * n * (m - 1) - n + 2


def max_center_nonbinary(n: int, m: int) -> Word:
    """The word 012012... which has n runs and x_i != x_{i+2}."""
    if m < 3:
        raise DomainError("non-binary maximum centre needs m >= 3")
    return Word(tuple(i % 3 for i in range(n)), m)


def has_max_nonbinary_shape(x: Word) -> bool:
    s = x.symbols
    return runs(x) == len(s) and all(s[i] != s[i + 2] for i in range(len(s) - 2))


def _word_from_segments(lengths, first: int) -> Word:
    # each segment restarts with the previous segment's last symbol
    out: list[int] = []
    symbol = first
    for length in lengths:
        for j in range(length):
            out.append(symbol if j % 2 == 0 else 1 - symbol)
        symbol = out[-1]
    return Word(tuple(out), 2)


def balanced_word(n: int, alpha: int) -> Word:
    """Canonical alpha-balanced binary word: long segments first, starting with 0."""
    p = BalancedProfile.of(n, alpha)
    return _word_from_segments([p.c] * p.k + [p.c - 1] * (alpha - p.k), 0)


def balanced_words(n: int, alpha: int) -> frozenset[Word]:
    """Every alpha-balanced binary word of length n, built segment by segment."""
    p = BalancedProfile.of(n, alpha)
    out = set()
    for longs in combinations(range(alpha), p.k):
        lengths = [p.c - 1] * alpha
        for i in longs:
            lengths[i] = p.c
        for first in (0, 1):
            out.add(_word_from_segments(lengths, first))
    return frozenset(out)


def is_alpha_balanced(x: Word, alpha: int) -> bool:
    if x.m != 2 or not 1 <= alpha <= len(x):
        return False
    profile = alternating_segments(x)
    c = -(-len(x) // alpha)
    return profile.a == alpha and all(s in (c, c - 1) for s in profile.lengths)


def balanced_ball_size(n: int, alpha: int) -> int:
    p = BalancedProfile.of(n, alpha)
    c, k = p.c, p.k
    return ((n + 1 - alpha) * (n - 1) + 2
            - k * (c - 1) * (c - 2) // 2
            - (alpha - k) * (c - 2) * (c - 3) // 2)


def t_selector(n: int) -> frozenset[int]:
    """Positive integers alpha minimising |2*alpha - sqrt(1 + 2n)|, in exact arithmetic."""
    if n < 1:
        raise RangeError(f"need n >= 1, got {n}")
    d = 1 + 2 * n
    lo = isqrt(d) // 2  # 2*lo <= sqrt(d) < 2*lo + 2
    if lo < 1:
        return frozenset({1})
    # sqrt(d) vs the midpoint 2*lo + 1
    mid = (2 * lo + 1) ** 2
    if d < mid:
        return frozenset({lo})
    if d > mid:
        return frozenset({lo + 1})
    return frozenset({lo, lo + 1})


def max_ball_size_binary(n: int, with_centers: bool = False) -> ExtremalResult:
    alphas = t_selector(n)
    values = {balanced_ball_size(n, a) for a in alphas}
    if len(values) != 1:
        raise AssertionError(f"selector values disagree for n={n}: {values}")
    centers = None
    if with_centers:
        centers = frozenset().union(*(balanced_words(n, a) for a in alphas))
    return ExtremalResult(values.pop(), frozenset(alphas), centers)


def max_ball_asymptotic(n: int) -> float:
    return n * n - sqrt(2) * n**1.5


def crossover_predicate(n: int, alpha: int) -> bool:
    if alpha < 2 or alpha > n:
        raise RangeError(f"need 2 <= alpha <= n, got alpha={alpha}, n={n}")
    return n > 2 * (alpha - 1) * alpha


def balanced_count(n: int, alpha: int) -> int:
    p = BalancedProfile.of(n, alpha)
    return 2 * comb(alpha, p.k)


@dataclass(frozen=True)
class ExhaustiveExtremes:
    n: int
    m: int
    min_value: int
    minimizers: frozenset[Word]
    max_value: int
    maximizers: frozenset[Word]


def exhaustive_extremes(n: int, m: int, workers: int = 1, max_space: int | None = None) -> ExhaustiveExtremes:
    """Min/max of |L_1| over Z_m^n and their arg sets, from the llcs-filter oracle."""
    kwargs = {} if max_space is None else {"max_space": max_space}
    sizes = ball_size_table(n, m, 1, workers, **kwargs)
    lo, hi = min(sizes), max(sizes)
    words = list(all_words(n, m))
    return ExhaustiveExtremes(
        n, m, lo, frozenset(w for w, s in zip(words, sizes) if s == lo),
        hi, frozenset(w for w, s in zip(words, sizes) if s == hi),
    )
