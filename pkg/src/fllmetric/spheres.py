"""Deletion, insertion and deletion-insertion spheres.

Spheres are sets. The tuple-level helpers are cached because the code and
intersection sweeps ask for the same spheres many times.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator

import numpy as np

from .errors import LengthError, RangeError
from .words import Word

Seq = tuple[int, ...]


@dataclass(frozen=True)
class SphereSpec:
    t_del: int = 0
    t_ins: int = 0

    def __post_init__(self) -> None:
        if self.t_del < 0 or self.t_ins < 0:
            raise RangeError(f"negative sphere parameters {self.t_del}, {self.t_ins}")


@dataclass(frozen=True)
class WordSet:
    words: frozenset[Word]
    n_out: int

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self) -> Iterator[Word]:
        return iter(sorted(self.words))

    def __contains__(self, item: object) -> bool:
        return item in self.words

    @classmethod
    def from_tuples(cls, seqs, n_out: int, m: int) -> WordSet:
        return cls(frozenset(Word(s, m) for s in seqs), n_out)


def _one_deletion(seqs) -> set[Seq]:
    return {s[:i] + s[i + 1:] for s in seqs for i in range(len(s))}


def _one_insertion(seqs, m: int) -> set[Seq]:
    return {s[:i] + (a,) + s[i:] for s in seqs for i in range(len(s) + 1) for a in range(m)}


@lru_cache(maxsize=1 << 16)
def deletions(seq: Seq, t: int) -> frozenset[Seq]:
    level = {seq}
    for _ in range(t):
        level = _one_deletion(level)
    return frozenset(level)


@lru_cache(maxsize=1 << 16)
def insertions(seq: Seq, t: int, m: int) -> frozenset[Seq]:
    level = {seq}
    for _ in range(t):
        level = _one_insertion(level, m)
    return frozenset(level)


@lru_cache(maxsize=1 << 16)
def deletions_insertions(seq: Seq, t_del: int, t_ins: int, m: int) -> frozenset[Seq]:
    """Deletions first, then insertions."""
    out: set[Seq] = set()
    for y in deletions(seq, t_del):
        out |= insertions(y, t_ins, m)
    return frozenset(out)


def insertions_deletions(seq: Seq, t_del: int, t_ins: int, m: int) -> frozenset[Seq]:
    """Insertions first, then deletions; kept to cross-check the default order."""
    out: set[Seq] = set()
    for y in insertions(seq, t_ins, m):
        out |= deletions(y, t_del)
    return frozenset(out)


def _check_t(x: Word, t: int) -> None:
    if t < 0 or t > len(x):
        raise RangeError(f"need 0 <= t <= n, got t={t}, n={len(x)}")


def deletion_sphere(x: Word, t: int) -> WordSet:
    _check_t(x, t)
    return WordSet.from_tuples(deletions(x.symbols, t), len(x) - t, x.m)


def insertion_sphere(x: Word, t: int) -> WordSet:
    if t < 0:
        raise RangeError(f"need t >= 0, got {t}")
    return WordSet.from_tuples(insertions(x.symbols, t, x.m), len(x) + t, x.m)


def del_ins_sphere(x: Word, spec: SphereSpec, insertions_first: bool = False) -> WordSet:
    _check_t(x, spec.t_del)
    build = insertions_deletions if insertions_first else deletions_insertions
    seqs = build(x.symbols, spec.t_del, spec.t_ins, x.m)
    return WordSet.from_tuples(seqs, len(x) - spec.t_del + spec.t_ins, x.m)


def pairwise_intersection_sizes(x: Word, y: Word) -> tuple[int, int]:
    """``(|D_1(x) & D_1(y)|, |I_1(x) & I_1(y)|)``."""
    if len(x) != len(y):
        raise LengthError("words must have equal length")
    d = len(deletions(x.symbols, 1) & deletions(y.symbols, 1)) if len(x) else 0
    i = len(insertions(x.symbols, 1, x.m) & insertions(y.symbols, 1, y.m))
    return d, i


def _incidence(sets: list[frozenset[Seq]]) -> np.ndarray:
    keys = sorted(set().union(*sets))
    pos = {k: i for i, k in enumerate(keys)}
    out = np.zeros((len(sets), len(keys)), dtype=np.float32)
    for r, s in enumerate(sets):
        out[r, [pos[k] for k in s]] = 1
    return out


def intersection_size_matrices(n: int, m: int) -> tuple[np.ndarray, np.ndarray]:
    """``|D_1(x) & D_1(y)|`` and ``|I_1(x) & I_1(y)|`` for all x, y in Z_m^n.

    Rows and columns follow the lexicographic order of Z_m^n.
    """
    seqs = list(product(range(m), repeat=n))
    d = _incidence([deletions(s, 1) for s in seqs])
    i = _incidence([insertions(s, 1, m) for s in seqs])
    return (d @ d.T).astype(np.int64), (i @ i.T).astype(np.int64)
