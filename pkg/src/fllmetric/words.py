"""Words over Z_m, the text format, runs and maximal alternating segments."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from .errors import AlphabetError, ParseError


@dataclass(frozen=True, order=True)
class Word:
    """An immutable word over the alphabet ``{0, ..., m-1}``.

    Ordering is lexicographic on the symbols, which is also the order used by
    every enumeration in the package.
    """

    symbols: tuple[int, ...]
    m: int = 2

    def __post_init__(self) -> None:
        if not isinstance(self.symbols, tuple):
            object.__setattr__(self, "symbols", tuple(self.symbols))
        if self.m < 1:
            raise AlphabetError(f"alphabet size must be >= 1, got {self.m}")
        for s in self.symbols:
            if not 0 <= s < self.m:
                raise AlphabetError(f"symbol {s} not in Z_{self.m}")

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(self.symbols[item], self.m)
        return self.symbols[item]

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r}, m={self.m})"

    @property
    def n(self) -> int:
        return len(self.symbols)

    @property
    def index(self) -> int:
        """Position of the word in the lexicographic order of Z_m^n."""
        value = 0
        for s in self.symbols:
            value = value * self.m + s
        return value

    @classmethod
    def from_index(cls, index: int, n: int, m: int) -> Word:
        digits = []
        for _ in range(n):
            index, r = divmod(index, m)
            digits.append(r)
        return cls(tuple(reversed(digits)), m)

    @classmethod
    def constant(cls, symbol: int, n: int, m: int) -> Word:
        return cls((symbol,) * n, m)


def parse_word(text: str, m: int) -> Word:
    """Parse the shared text format: digits for ``m <= 10``, else comma-separated."""
    text = text.strip()
    if m < 1:
        raise AlphabetError(f"alphabet size must be >= 1, got {m}")
    if not text:
        return Word((), m)
    if m <= 10:
        if not text.isdigit() or not text.isascii():
            raise ParseError(f"expected a digit string, got {text!r}")
        symbols = tuple(int(ch) for ch in text)
    else:
        try:
            symbols = tuple(int(part) for part in text.split(","))
        except ValueError:
            raise ParseError(f"expected comma-separated integers, got {text!r}") from None
        if any(s < 0 for s in symbols):
            raise AlphabetError(f"negative symbol in {text!r}")
    return Word(symbols, m)


def format_word(x: Word) -> str:
    if x.m <= 10:
        return "".join(str(s) for s in x.symbols)
    return ",".join(str(s) for s in x.symbols)


def all_words(n: int, m: int) -> Iterator[Word]:
    """Yield Z_m^n in lexicographic order."""
    for symbols in product(range(m), repeat=n):
        yield Word(symbols, m)


def weight(x: Word) -> int:
    return sum(1 for s in x.symbols if s)


def hamming_distance(x: Word, y: Word) -> int:
    return sum(a != b for a, b in zip(x.symbols, y.symbols, strict=True))


def count_runs(seq: Sequence[int]) -> int:
    return sum(1 for i in range(len(seq)) if i == 0 or seq[i] != seq[i - 1])


def runs(x: Word) -> int:
    """Number of maximal blocks of identical symbols; 0 for the empty word."""
    return count_runs(x.symbols)


@dataclass(frozen=True)
class SegmentProfile:
    rho: int
    segments: tuple[tuple[int, int], ...]  # 1-based inclusive (start, end)
    lengths: tuple[int, ...]

    @property
    def a(self) -> int:
        return len(self.segments)


def segment_bounds(seq: Sequence[int]) -> list[tuple[int, int]]:
    """0-based inclusive bounds of the maximal alternating segments of ``seq``.

    ``reach[i]`` is the last index j such that seq[i..j] alternates between
    two symbols. The reach is non-decreasing, and seq[i..reach[i]] is maximal
    exactly when it cannot be extended to the left, i.e. when reach[i-1]
    stops short of reach[i].
    """
    n = len(seq)
    if n == 0:
        return []
    reach = [0] * n
    reach[n - 1] = n - 1
    for i in range(n - 2, -1, -1):
        if seq[i] == seq[i + 1]:
            reach[i] = i
        elif reach[i + 1] >= i + 2 and seq[i] == seq[i + 2]:
            reach[i] = reach[i + 1]
        else:
            reach[i] = i + 1
    return [(i, reach[i]) for i in range(n) if i == 0 or reach[i - 1] < reach[i]]


def alternating_segments(x: Word) -> SegmentProfile:
    bounds = segment_bounds(x.symbols)
    return SegmentProfile(
        rho=runs(x),
        segments=tuple((i + 1, j + 1) for i, j in bounds),
        lengths=tuple(j - i + 1 for i, j in bounds),
    )


def segment_count(x: Word) -> int:
    return len(segment_bounds(x.symbols))
