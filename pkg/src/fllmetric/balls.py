"""Hamming and FLL balls: enumeration, sizes and the radius-one closed form."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from math import comb

import numpy as np

from .errors import RangeError
from .lcs import llcs_many
from .spheres import WordSet, deletions_insertions
from .sweep import DEFAULT_MAX_SPACE, check_capacity, sweep, word_space
from .words import Word, alternating_segments


@dataclass(frozen=True)
class BallResult:
    center: Word
    radius: int
    size: int
    members: WordSet | None = None


def _check_radius(n: int, t: int) -> None:
    if not 0 <= t <= n:
        raise RangeError(f"need 0 <= t <= n, got t={t}, n={n}")


def hamming_ball_size(n: int, m: int, t: int) -> int:
    _check_radius(n, t)
    if m < 1:
        raise RangeError(f"need m >= 1, got {m}")
    return sum(comb(n, i) * (m - 1) ** i for i in range(t + 1))


def hamming_ball(x: Word, t: int) -> BallResult:
    n, m = len(x), x.m
    _check_radius(n, t)
    members = set()
    for r in range(t + 1):
        for positions in combinations(range(n), r):
            choices = [[s for s in range(m) if s != x[p]] for p in positions]
            for repl in product(*choices):
                y = list(x.symbols)
                for p, s in zip(positions, repl):
                    y[p] = s
                members.add(tuple(y))
    ws = WordSet.from_tuples(members, n, m)
    return BallResult(x, t, len(ws), ws)


def fll_ball(x: Word, t: int, method: str = "filter", max_space: int | None = DEFAULT_MAX_SPACE,
             enumerate_members: bool = True) -> BallResult:
    """L_t(x) by filtering Z_m^n on ``llcs >= n - t`` or by BFS on the unit-distance graph."""
    n, m = len(x), x.m
    _check_radius(n, t)
    if method == "filter":
        check_capacity(n, m, max_space)
        space = word_space(n, m)
        inside = llcs_many(x.symbols, space) >= n - t
        if not enumerate_members:
            return BallResult(x, t, int(inside.sum()))
        seqs = (tuple(int(v) for v in row) for row in space[inside])
    elif method == "bfs":
        seqs = _bfs_ball(x.symbols, t, m)
    else:
        raise ValueError(f"unknown method {method!r}")
    ws = WordSet.from_tuples(seqs, n, m)
    return BallResult(x, t, len(ws), ws if enumerate_members else None)


def _bfs_ball(seq: tuple[int, ...], t: int, m: int) -> set[tuple[int, ...]]:
    # neighbours at distance one are the DI_{1,1} words other than the word itself
    seen = {seq}
    frontier = deque([(seq, 0)])
    while frontier:
        y, depth = frontier.popleft()
        if depth == t:
            continue
        for z in deletions_insertions(y, 1, 1, m):
            if z not in seen:
                seen.add(z)
                frontier.append((z, depth + 1))
    return seen


def ball1_size_from_profile(n: int, m: int, rho: int, lengths) -> int:
    return rho * (n * (m - 1) - 1) + 2 - sum((s - 1) * (s - 2) // 2 for s in lengths)


def fll_ball1_size_closed_form(x: Word) -> int:
    """|L_1(x)| from the number of runs and the alternating-segment lengths."""
    if len(x) < 1:
        raise RangeError("closed form needs n >= 1")
    profile = alternating_segments(x)
    return ball1_size_from_profile(len(x), x.m, profile.rho, profile.lengths)


def _ball_sizes_chunk(n: int, m: int, start: int, stop: int, t: int) -> list[int]:
    space = word_space(n, m)
    return [int((llcs_many(space[i], space) >= n - t).sum()) for i in range(start, stop)]


@lru_cache(maxsize=64)
def _ball_size_table(n: int, m: int, t: int, workers: int) -> tuple[int, ...]:
    parts = sweep(_ball_sizes_chunk, n, m, workers, extra=(t,))
    return tuple(v for part in parts for v in part)


def ball_size_table(n: int, m: int, t: int = 1, workers: int = 1,
                    max_space: int | None = DEFAULT_MAX_SPACE) -> tuple[int, ...]:
    """|L_t(x)| for every x in Z_m^n (lexicographic order), by the llcs filter."""
    _check_radius(n, t)
    check_capacity(n, m, max_space)
    return _ball_size_table(n, m, t, max(1, workers))


def closed_form_table(n: int, m: int) -> tuple[int, ...]:
    return tuple(fll_ball1_size_closed_form(Word(tuple(int(v) for v in row), m))
                 for row in word_space(n, m))


def ball_sizes_array(n: int, m: int, t: int = 1, workers: int = 1) -> np.ndarray:
    return np.asarray(ball_size_table(n, m, t, workers), dtype=np.int64)
