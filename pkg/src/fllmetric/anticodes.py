"""Anticodes in the FLL metric and maximal-clique enumeration on the FLL graph.

An anticode of diameter t is a clique in the graph on Z_m^n whose edges join
words at FLL distance at most t, so maximal anticodes are maximal cliques.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

import numpy as np

from .errors import LengthError, RangeError
from .lcs import distance_matrix, fll_distance, llcs_many
from .sweep import DEFAULT_MAX_SPACE, check_capacity, parallel_map, word_space
from .words import Word, all_words

DEFAULT_MAX_VERTICES = 2**10


@dataclass(frozen=True)
class AnticodeSet:
    words: tuple[Word, ...]
    diameter_bound: int

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def __str__(self) -> str:
        return ",".join(str(w) for w in self.words)


@dataclass(frozen=True)
class FLLGraph:
    n: int
    m: int
    t: int
    vertices: tuple[Word, ...]
    adjacency: tuple[frozenset[int], ...]

    def neighbors(self, x: Word) -> set[Word]:
        return {self.vertices[j] for j in self.adjacency[x.index]}

    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2


def fll_graph(n: int, m: int, t: int = 1, max_vertices: int | None = DEFAULT_MAX_VERTICES) -> FLLGraph:
    if t < 0:
        raise RangeError(f"diameter must be >= 0, got {t}")
    check_capacity(n, m, max_vertices, parameter="graph vertices")
    dist = distance_matrix(n, m, max_space=None)
    adjacency = []
    for i in range(len(dist)):
        row = np.flatnonzero(dist[i] <= t)
        adjacency.append(frozenset(int(j) for j in row if j != i))
    return FLLGraph(n, m, t, tuple(all_words(n, m)), tuple(adjacency))


def _common_length(words: Iterable[Word]) -> tuple[list[Word], int | None]:
    words = list(words)
    lengths = {len(w) for w in words}
    if len(lengths) > 1:
        raise LengthError(f"anticode words have mixed lengths {sorted(lengths)}")
    return words, (lengths.pop() if lengths else None)


def is_anticode(words: Iterable[Word], t: int) -> bool:
    words, _ = _common_length(words)
    return all(fll_distance(x, y) <= t for x, y in combinations(words, 2))


def is_maximal_anticode(words: Iterable[Word], t: int, max_space: int | None = DEFAULT_MAX_SPACE) -> bool:
    """True iff no word outside the set can join it without breaking the diameter bound."""
    words, n = _common_length(words)
    if not words:
        return False
    m = words[0].m
    check_capacity(n, m, max_space)
    space = word_space(n, m)
    extends = np.ones(len(space), dtype=bool)
    for w in words:
        extends &= (n - llcs_many(w.symbols, space)) <= t
        extends[w.index] = False
    return not extends.any()


def _expand(adj, r: list[int], p: set[int], x: set[int], out: list[tuple[int, ...]]) -> None:
    if not p:
        if not x:
            out.append(tuple(sorted(r)))
        return
    pivot = max(sorted(p | x), key=lambda u: len(p & adj[u]))
    for v in sorted(p - adj[pivot]):
        _expand(adj, r + [v], p & adj[v], x & adj[v], out)
        p = p - {v}
        x = x | {v}


def _root_branches(adj) -> list[tuple[int, set[int], set[int]]]:
    # the top level of the pivoted recursion, unrolled so branches can be farmed out
    p = set(range(len(adj)))
    x: set[int] = set()
    if not p:
        return []
    pivot = max(sorted(p), key=lambda u: len(p & adj[u]))
    branches = []
    for v in sorted(p - adj[pivot]):
        branches.append((v, p & adj[v], x & adj[v]))
        p = p - {v}
        x = x | {v}
    return branches


def _branch_cliques(adj, v: int, p: set[int], x: set[int]) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []
    _expand(adj, [v], p, x, out)
    return out


def maximal_cliques(adjacency, workers: int = 1) -> list[tuple[int, ...]]:
    """All maximal cliques (pivoted Bron-Kerbosch), each as a sorted vertex tuple, sorted."""
    adj = [set(a) for a in adjacency]
    tasks = [(adj, v, p, x) for v, p, x in _root_branches(adj)]
    parts = parallel_map(_branch_cliques, tasks, workers)
    return sorted(c for part in parts for c in part)


def enumerate_maximal_anticodes(n: int, m: int, t: int = 1, workers: int = 1,
                                max_vertices: int | None = DEFAULT_MAX_VERTICES) -> list[AnticodeSet]:
    graph = fll_graph(n, m, t, max_vertices)
    return [AnticodeSet(tuple(graph.vertices[i] for i in clique), t)
            for clique in maximal_cliques(graph.adjacency, workers)]


def max_min_maximal_anticode_sizes(n: int, m: int, t: int = 1, workers: int = 1,
                                   max_vertices: int | None = DEFAULT_MAX_VERTICES) -> tuple[int, int]:
    sizes = [len(a) for a in enumerate_maximal_anticodes(n, m, t, workers, max_vertices)]
    return max(sizes), min(sizes)


def weight_le_one_anticode(n: int) -> AnticodeSet:
    if n < 1:
        raise RangeError(f"need n >= 1, got {n}")
    words = [Word((0,) * n, 2)]
    words += [Word(tuple(int(j == i) for j in range(n)), 2) for i in range(n)]
    return AnticodeSet(tuple(sorted(words)), 1)


def puncture(words: Iterable[Word]) -> set[Word]:
    """Drop the last coordinate of every word."""
    words, n = _common_length(words)
    if n is not None and n < 1:
        raise LengthError("cannot puncture words of length 0")
    return {w[:-1] for w in words}


def _suffix(w: Word) -> tuple[int, ...]:
    return w.symbols[-2:]


def suffix_counts(words: Iterable[Word]) -> dict[str, int]:
    counts = {"00": 0, "01": 0, "10": 0, "11": 0}
    for w in words:
        if len(w) >= 2:
            counts["".join(map(str, _suffix(w)))] += 1
    return counts


def suffix00_lemma_holds(words: Iterable[Word]) -> bool:
    """Three words ending 00 leave room for at most one ending 01."""
    c = suffix_counts(words)
    return c["00"] < 3 or c["01"] <= 1


def suffix01_lemma_holds(words: Iterable[Word]) -> bool:
    c = suffix_counts(words)
    return c["01"] < 3 or c["00"] <= 1


def twin_prefix_lemma_holds(words: Iterable[Word]) -> bool:
    """At most one length-(n-1) prefix is shared by a word ending 00 and one ending 01."""
    words = set(words)
    twins = [w for w in words
             if len(w) >= 2 and _suffix(w) == (0, 0) and Word(w.symbols[:-1] + (1,), w.m) in words]
    return len(twins) <= 1


def puncture_preserves(words: Iterable[Word]) -> bool:
    """Puncturing keeps the size and keeps diameter one."""
    words = list(words)
    punctured = puncture(words)
    return len(punctured) == len(words) and is_anticode(punctured, 1)


def puncture_lemmas_hold(words: Iterable[Word]) -> bool:
    """Check both puncturing lemmas on every qualifying sub-anticode.

    Sub-anticodes: the words ending in 0, the words ending in 1, and the words
    ending in 01 or 10.
    """
    words = [w for w in words if len(w) >= 1]
    groups = [
        [w for w in words if w.symbols[-1] == 0],
        [w for w in words if w.symbols[-1] == 1],
        [w for w in words if len(w) >= 2 and _suffix(w) in ((0, 1), (1, 0))],
    ]
    return all(puncture_preserves(g) for g in groups if g)
