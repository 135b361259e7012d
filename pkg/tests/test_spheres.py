from __future__ import annotations

from itertools import product

import numpy as np
import pytest

from fllmetric.balls import fll_ball
from fllmetric.errors import LengthError, RangeError
from fllmetric.lcs import is_subsequence
from fllmetric.spheres import (
    SphereSpec,
    del_ins_sphere,
    deletion_sphere,
    deletions_insertions,
    insertion_sphere,
    insertions_deletions,
    intersection_size_matrices,
    pairwise_intersection_sizes,
)
from fllmetric.words import Word, all_words, parse_word
from oracles import subsequences, supersequences


def w(text: str, m: int = 2) -> Word:
    return parse_word(text, m)


def strs(ws) -> list[str]:
    return [str(x) for x in ws]


def test_deletion_sphere_examples():
    assert strs(deletion_sphere(w("000"), 1)) == ["00"]
    assert strs(deletion_sphere(w("010"), 1)) == ["00", "01", "10"]
    assert strs(deletion_sphere(w("0110"), 0)) == ["0110"]


def test_deletion_sphere_range():
    with pytest.raises(RangeError):
        deletion_sphere(w("01"), 3)


def test_insertion_sphere_examples():
    assert strs(insertion_sphere(w("0"), 1)) == ["00", "01", "10"]
    assert strs(insertion_sphere(w("", 3), 1)) == ["0", "1", "2"]


@pytest.mark.parametrize("n", range(0, 9))
def test_insertion_sphere_size_independent_of_center(n):
    sizes = {len(insertion_sphere(x, 1)) for x in all_words(n, 2)}
    assert len(sizes) == 1


@pytest.mark.parametrize("n, m, t", [(4, 2, 1), (4, 2, 2), (3, 3, 1), (3, 3, 2)])
def test_spheres_match_definitions(n, m, t):
    for x in all_words(n, m):
        if t <= n:
            assert {y.symbols for y in deletion_sphere(x, t)} == subsequences(x.symbols, n - t)
        assert {y.symbols for y in insertion_sphere(x, t)} == supersequences(x.symbols, t, m)


@pytest.mark.parametrize("n", range(1, 6))
def test_deletion_insertion_duality(n):
    # y in D_1(x) iff x in I_1(y)
    for x in all_words(n, 2):
        for y in all_words(n - 1, 2):
            assert (y in deletion_sphere(x, 1)) == (x in insertion_sphere(y, 1))
            assert (y in deletion_sphere(x, 1)) == is_subsequence(y, x)


def test_del_ins_examples():
    x = w("0110")
    assert strs(del_ins_sphere(x, SphereSpec(0, 0))) == ["0110"]
    assert w("10") in del_ins_sphere(w("01"), SphereSpec(1, 1))
    di = del_ins_sphere(w("0101"), SphereSpec(1, 1))
    assert di.words == fll_ball(w("0101"), 1).members.words
    assert len(di) == 11


def test_sphere_spec_validation():
    with pytest.raises(RangeError):
        SphereSpec(-1, 0)


@pytest.mark.parametrize("m, n_max", [(2, 7), (3, 7)])
def test_deletion_order_does_not_matter(m, n_max):
    # checked as a property over the whole stated range; no counterexample exists there
    for n in range(n_max + 1):
        for x in product(range(m), repeat=n):
            for t1, t2 in product(range(min(2, n) + 1), range(3)):
                assert deletions_insertions(x, t1, t2, m) == insertions_deletions(x, t1, t2, m)


def test_pairwise_examples():
    assert pairwise_intersection_sizes(w("01"), w("10")) == (2, 2)
    assert pairwise_intersection_sizes(w("00"), w("11")) == (0, 0)
    with pytest.raises(LengthError):
        pairwise_intersection_sizes(w("0"), w("00"))


@pytest.mark.parametrize("n, m", [(4, 2), (5, 2), (3, 3)])
def test_intersection_matrices_match_pairwise(n, m):
    d, i = intersection_size_matrices(n, m)
    ws = list(all_words(n, m))
    for a, x in enumerate(ws):
        for b, y in enumerate(ws):
            assert (int(d[a, b]), int(i[a, b])) == pairwise_intersection_sizes(x, y)


@pytest.mark.parametrize("n", range(2, 11))
def test_intersections_at_most_two(n):
    d, i = intersection_size_matrices(n, 2)
    off = ~np.eye(len(d), dtype=bool)
    assert d[off].max() == 2
    assert i[off].max() == 2
