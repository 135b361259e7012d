from __future__ import annotations

from itertools import product

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from fllmetric.errors import AlphabetError, CapacityError, LengthError
from fllmetric.lcs import compare, distance_matrix, fll_distance, is_subsequence, llcs, llcs_many
from fllmetric.spheres import deletions
from fllmetric.sweep import word_space
from fllmetric.words import Word, all_words, parse_word
from oracles import llcs_oracle, subsequences


def w(text: str, m: int = 2) -> Word:
    return parse_word(text, m)


@pytest.mark.parametrize("x, y, expected", [
    ("0011", "0101", 3),
    ("00110100", "00110100", 8),
    ("0000", "1111", 0),
    ("", "", 0),
])
def test_llcs_examples(x, y, expected):
    assert llcs(w(x), w(y)) == expected


@pytest.mark.parametrize("x, y, expected", [("01", "10", 1), ("0110", "0110", 0), ("00", "11", 2)])
def test_distance_examples(x, y, expected):
    assert fll_distance(w(x), w(y)) == expected


def test_compare():
    r = compare(w("0011"), w("0101"))
    assert (r.llcs, r.distance, r.n) == (3, 1, 4)


def test_errors():
    with pytest.raises(AlphabetError):
        llcs(w("01"), w("01", 3))
    with pytest.raises(LengthError):
        fll_distance(w("01"), w("011"))


@pytest.mark.parametrize("y, x, expected", [
    ("010", "00110100", True),
    ("", "0110", True),
    ("11", "00", False),
    ("0110", "0101", False),
])
def test_is_subsequence(y, x, expected):
    assert is_subsequence(w(y), w(x)) is expected


pairs = st.integers(2, 4).flatmap(lambda m: st.integers(0, 7).flatmap(lambda n: st.tuples(
    st.lists(st.integers(0, m - 1), min_size=n, max_size=n),
    st.lists(st.integers(0, m - 1), min_size=n, max_size=n),
    st.just(m),
)))


@given(pairs)
def test_llcs_matches_subsequence_enumeration(p):
    x, y, m = p
    assert llcs(Word(tuple(x), m), Word(tuple(y), m)) == llcs_oracle(x, y)


@given(pairs)
def test_is_subsequence_matches_enumeration(p):
    x, y, m = p
    y = y[: len(y) // 2]
    assert is_subsequence(Word(tuple(y), m), Word(tuple(x), m)) == (tuple(y) in subsequences(x, len(y)))


@pytest.mark.parametrize("n, m", [(5, 2), (4, 3), (3, 4)])
def test_llcs_many_matches_scalar(n, m):
    space = word_space(n, m)
    for x in all_words(n, m):
        got = llcs_many(x.symbols, space)
        assert got.tolist() == [llcs(x, y) for y in all_words(n, m)]


@pytest.mark.parametrize("n", range(1, 8))
def test_distance_is_first_t_with_common_deletion(n):
    # d(x, y) = min{t : D_t(x) & D_t(y) nonempty}
    for x, y in product(list(all_words(n, 2))[:: max(1, 2**n // 24)], all_words(n, 2)):
        t = next(t for t in range(n + 1) if deletions(x.symbols, t) & deletions(y.symbols, t))
        assert fll_distance(x, y) == t


@pytest.mark.parametrize("n, m", [(6, 2), (4, 3)])
def test_metric_axioms(n, m):
    d = distance_matrix(n, m).astype(np.int32)
    assert (d == d.T).all()
    assert (np.diag(d) == 0).all()
    assert (d[~np.eye(len(d), dtype=bool)] > 0).all()
    # triangle inequality: d[i, k] <= d[i, j] + d[j, k] for all j
    assert (d[:, None, :] <= d[:, :, None] + d[None, :, :]).all()


def test_distance_matrix_read_only_and_cached():
    a = distance_matrix(4, 2)
    assert a is distance_matrix(4, 2)
    with pytest.raises(ValueError):
        a[0, 0] = 3


def test_distance_matrix_capacity():
    with pytest.raises(CapacityError):
        distance_matrix(13, 2)


def test_distance_matrix_parallel_matches_serial():
    assert (distance_matrix(5, 2, workers=2) == distance_matrix(5, 2)).all()
