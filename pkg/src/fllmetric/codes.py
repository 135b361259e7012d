"""Deletion-, insertion- and deletion-insertion-correcting code predicates.

Each predicate can be evaluated from sphere disjointness directly; the
deletion predicate also has the LCS shortcut. Keeping both routes lets the
equivalence results be tested as genuine cross-checks.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

import numpy as np

from .errors import AlphabetError, CapacityError, LengthError, RangeError, SingletonError
from .lcs import llcs, llcs_many
from .spheres import deletions, deletions_insertions, insertions
from .sweep import DEFAULT_MAX_SPACE, check_capacity, word_space
from .words import Word, parse_word

# n + t above this makes insertion spheres too large to enumerate comfortably
MAX_INSERTION_LENGTH = 16


@dataclass(frozen=True)
class Codebook:
    codewords: tuple[Word, ...]

    def __post_init__(self) -> None:
        words = tuple(sorted(set(self.codewords)))
        if not words:
            raise SingletonError("a codebook needs at least one codeword")
        if len({len(w) for w in words}) != 1:
            raise LengthError("codewords must share one length")
        if len({w.m for w in words}) != 1:
            raise AlphabetError("codewords must share one alphabet")
        object.__setattr__(self, "codewords", words)

    @classmethod
    def of(cls, words: Iterable[Word]) -> Codebook:
        return cls(tuple(words))

    @property
    def n(self) -> int:
        return len(self.codewords[0])

    @property
    def m(self) -> int:
        return self.codewords[0].m

    def __len__(self) -> int:
        return len(self.codewords)

    def __iter__(self):
        return iter(self.codewords)

    def pairs(self):
        """Distinct pairs in lexicographic order."""
        return combinations(self.codewords, 2)


def _spheres_disjoint(code: Codebook, sphere) -> bool:
    cache = {w: sphere(w.symbols) for w in code}
    return all(cache[a].isdisjoint(cache[b]) for a, b in code.pairs())


def first_violating_pair(code: Codebook, t: int) -> tuple[Word, Word] | None:
    """Lexicographically first pair whose deletion t-spheres meet."""
    for a, b in code.pairs():
        if llcs(a, b) >= code.n - t:
            return a, b
    return None


def is_t_deletion_correcting(code: Codebook, t: int, method: str = "llcs") -> bool:
    if not 0 <= t <= code.n:
        raise RangeError(f"need 0 <= t <= n, got t={t}, n={code.n}")
    if method == "llcs":
        return first_violating_pair(code, t) is None
    if method == "spheres":
        return _spheres_disjoint(code, lambda s: deletions(s, t))
    raise ValueError(f"unknown method {method!r}")


def is_t_insertion_correcting(code: Codebook, t: int) -> bool:
    if t < 0:
        raise RangeError(f"need t >= 0, got {t}")
    if code.n + t > MAX_INSERTION_LENGTH:
        raise CapacityError("n + t", code.n + t, MAX_INSERTION_LENGTH)
    return _spheres_disjoint(code, lambda s: insertions(s, t, code.m))


def is_del_ins_correcting(code: Codebook, t1: int, t2: int) -> bool:
    if not 0 <= t1 <= code.n or t2 < 0:
        raise RangeError(f"need 0 <= t1 <= n and t2 >= 0, got {t1}, {t2}")
    if code.n - t1 + t2 > MAX_INSERTION_LENGTH:
        raise CapacityError("n - t1 + t2", code.n - t1 + t2, MAX_INSERTION_LENGTH)
    return _spheres_disjoint(code, lambda s: deletions_insertions(s, t1, t2, code.m))


def min_fll_distance(code: Codebook) -> int:
    if len(code) < 2:
        raise SingletonError("minimum distance needs at least two codewords")
    return code.n - max(llcs(a, b) for a, b in code.pairs())


def detects_next_error(code: Codebook, t: int, max_space: int | None = DEFAULT_MAX_SPACE,
                       dist_matrix: np.ndarray | None = None) -> bool:
    """A word exactly t+1 FLL errors from one codeword is never within t of another.

    Evaluated geometrically over Z_m^n rather than through the minimum distance.
    ``dist_matrix``, if given, holds all pairwise distances on Z_m^n.
    """
    if dist_matrix is not None:
        dist = [dist_matrix[c.index] for c in code]
    else:
        check_capacity(code.n, code.m, max_space)
        space = word_space(code.n, code.m)
        dist = [code.n - llcs_many(c.symbols, space) for c in code]
    for i, j in combinations(range(len(dist)), 2):
        for a, b in ((i, j), (j, i)):
            if np.any((dist[a] == t + 1) & (dist[b] <= t)):
                return False
    return True


def correct_and_detect_profile(code: Codebook, t: int, max_space: int | None = DEFAULT_MAX_SPACE,
                               dist_matrix: np.ndarray | None = None) -> bool:
    """Corrects t FLL errors (as a (t,t) deletion-insertion code) and detects t+1."""
    if len(code) < 2:
        raise SingletonError("the profile needs at least two codewords")
    return is_del_ins_correcting(code, t, t) and detects_next_error(code, t, max_space, dist_matrix)


def random_codebook(rng: random.Random, n: int, m: int, size: int) -> Codebook:
    """Uniformly chosen distinct codewords."""
    indices = rng.sample(range(m**n), size)
    return Codebook.of(Word.from_index(i, n, m) for i in indices)


def read_code_file(path) -> Codebook:
    """First line ``n m``, then one codeword per line."""
    with open(path) as f:
        lines = [line.strip() for line in f if line.strip()]
    if not lines:
        raise LengthError(f"{path}: empty code file")
    n, m = (int(v) for v in lines[0].split())
    words = [parse_word(line, m) for line in lines[1:]]
    for w in words:
        if len(w) != n:
            raise LengthError(f"{path}: codeword {w} has length {len(w)}, header says {n}")
    return Codebook.of(words)
