"""Longest common subsequences and the FLL distance d = n - llcs."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import AlphabetError, LengthError
from .sweep import check_capacity, sweep, word_space
from .words import Word

# an N x N matrix of int16; 2^12 words is 32 MB
MAX_MATRIX_SPACE = 2**12


@dataclass(frozen=True)
class DistanceResult:
    llcs: int
    distance: int
    n: int


def _same_alphabet(x: Word, y: Word) -> None:
    if x.m != y.m:
        raise AlphabetError(f"alphabet mismatch: Z_{x.m} vs Z_{y.m}")


def llcs_seq(x, y) -> int:
    """LCS length of two integer sequences, one DP row at a time."""
    if len(x) < len(y):
        x, y = y, x
    prev = [0] * (len(y) + 1)
    for a in x:
        cur = [0] * (len(y) + 1)
        for j, b in enumerate(y, 1):
            if a == b:
                cur[j] = prev[j - 1] + 1
            else:
                cur[j] = prev[j] if prev[j] > cur[j - 1] else cur[j - 1]
        prev = cur
    return prev[-1]


def llcs(x: Word, y: Word) -> int:
    _same_alphabet(x, y)
    return llcs_seq(x.symbols, y.symbols)


def fll_distance(x: Word, y: Word) -> int:
    if len(x) != len(y):
        raise LengthError(f"FLL distance needs equal lengths, got {len(x)} and {len(y)}")
    return len(x) - llcs(x, y)


def compare(x: Word, y: Word) -> DistanceResult:
    d = fll_distance(x, y)
    return DistanceResult(llcs=len(x) - d, distance=d, n=len(x))


def is_subsequence(y: Word, x: Word) -> bool:
    """True iff ``y`` is obtained from ``x`` by deleting ``|x| - |y|`` symbols."""
    it = iter(x.symbols)
    return all(any(s == c for c in it) for s in y.symbols)


def llcs_many(x, Y: np.ndarray) -> np.ndarray:
    """LCS length between ``x`` and every row of ``Y``.

    Same recurrence as :func:`llcs_seq`, vectorised across the rows of ``Y``.
    Used by the exhaustive sweeps, where ``Y`` is a whole word space.
    """
    Y = np.asarray(Y)
    count, width = Y.shape
    cols = np.ascontiguousarray(Y.T)
    prev = np.zeros((width + 1, count), dtype=np.int16)
    for a in x:
        match = cols == a
        cur = np.zeros_like(prev)
        for j in range(width):
            np.maximum(prev[j + 1], cur[j], out=cur[j + 1])
            np.maximum(cur[j + 1], np.where(match[j], prev[j] + 1, 0), out=cur[j + 1])
        prev = cur
    return prev[width]


def _distance_rows(n: int, m: int, start: int, stop: int) -> np.ndarray:
    space = word_space(n, m)
    return np.stack([n - llcs_many(space[i], space) for i in range(start, stop)]) if stop > start \
        else np.zeros((0, m**n), dtype=np.int16)


@lru_cache(maxsize=16)
def _distance_matrix(n: int, m: int, workers: int) -> np.ndarray:
    out = np.concatenate(sweep(_distance_rows, n, m, workers)).astype(np.int16)
    out.setflags(write=False)
    return out


def distance_matrix(n: int, m: int, workers: int = 1, max_space: int | None = MAX_MATRIX_SPACE) -> np.ndarray:
    """All pairwise FLL distances on Z_m^n, rows and columns in lexicographic order."""
    check_capacity(n, m, max_space, parameter="distance matrix")
    return _distance_matrix(n, m, max(1, workers))
