"""Gray codes on m-bit integers and on k-subsets derived from stepping sequences.

Subset S of {0, ..., m-1} corresponds to the integer sum(2**e for e in S).
Binary words are printed high bit first, so element m-1 is the leftmost
digit.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional

from .core import (
    VERIFY_LIMIT,
    ChainWalker,
    DomainError,
    SteppingSequence,
    elements_of,
    verify,
)

BRGC_LIMIT = 20

A6 = SteppingSequence(6, (
    5, 4, 5, 4, 3, 2, 3, 4, 5, 4, 3, 2, 3, 4, 3, 2, 3, 2, 1, 2, 3, 4, 5, 4, 3, 4, 3, 2,
    3, 4, 3, 2, 3, 2, 1, 2, 3, 4, 5, 4, 3, 4, 3, 2, 3, 4, 3, 2, 1, 2, 3, 4, 3, 2, 1, 2, 1,
))


@dataclass(frozen=True)
class GrayOrdering:
    m: int
    words: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "words", tuple(self.words))

    def __len__(self) -> int:
        return len(self.words)

    def is_permutation(self) -> bool:
        return len(self.words) == 1 << self.m and set(self.words) == set(range(1 << self.m))

    def format(self, fmt: str = "binary") -> str:
        return "\n".join(format_word(w, self.m, fmt) for w in self.words)


@dataclass(frozen=True)
class KSubsetOrdering:
    m: int
    k: int
    sets: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "sets", tuple(self.sets))

    def __len__(self) -> int:
        return len(self.sets)

    def as_tuples(self) -> list[tuple[int, ...]]:
        return [elements_of(s) for s in self.sets]

    def format(self) -> str:
        return "\n".join(format_subset(s) for s in self.sets)


def format_word(word: int, m: int, fmt: str = "binary") -> str:
    if fmt == "binary":
        return format(word, f"0{m}b")
    if fmt == "decimal":
        return str(word)
    raise DomainError(f"unknown word format {fmt!r}")


def format_subset(bits: int) -> str:
    return "{" + ",".join(map(str, elements_of(bits))) + "}"


def _require_valid(seq: SteppingSequence, limit: int) -> None:
    report = verify(seq, limit)
    if not report.valid:
        raise DomainError(f"not a stepping sequence: {report.describe()}")


def to_ordering(seq: SteppingSequence, limit: int = VERIFY_LIMIT) -> GrayOrdering:
    """Initial sets S_0..S_m followed by every set the moves produce."""
    _require_valid(seq, limit)
    walker = ChainWalker(seq.m)
    words = list(walker.sets)
    words.extend(walker.move(i) for i in seq.moves)
    return GrayOrdering(seq.m, tuple(words))


def is_contiguous(seq: SteppingSequence) -> bool:
    moves = seq.moves
    return all(abs(a - b) == 1 for a, b in zip(moves, moves[1:]))


def is_strongly_contiguous(seq: SteppingSequence) -> bool:
    if not seq.moves:
        raise DomainError("an empty sequence has no first or last move")
    return seq.moves[0] == seq.m - 1 and seq.moves[-1] == 1 and is_contiguous(seq)


def _one_bit(a: int, b: int) -> bool:
    x = a ^ b
    return x != 0 and x & (x - 1) == 0


def is_cyclic_gray(ordering: GrayOrdering) -> bool:
    words = ordering.words
    if len(words) < 2:
        return False
    return all(_one_bit(a, b) for a, b in zip(words, words[1:])) and _one_bit(words[-1], words[0])


def restrict_to_k(seq: SteppingSequence, k: int, limit: int = VERIFY_LIMIT) -> KSubsetOrdering:
    if not 0 <= k <= seq.m:
        raise DomainError(f"k={k} outside [0, {seq.m}]")
    ordering = to_ordering(seq, limit)
    sets = tuple(w for w in ordering.words if w.bit_count() == k)
    assert len(sets) == comb(seq.m, k)
    return KSubsetOrdering(seq.m, k, sets)


def brgc(m: int) -> GrayOrdering:
    """Binary reflected Gray code: G_m = 0.G_{m-1} then 1.reverse(G_{m-1})."""
    if not 1 <= m <= BRGC_LIMIT:
        raise DomainError(f"m={m} outside [1, {BRGC_LIMIT}]")
    words = [0, 1]
    for width in range(1, m):
        high = 1 << width
        words = words + [high | w for w in reversed(words)]
    return GrayOrdering(m, tuple(words))


def nesting_scan(ordering: GrayOrdering) -> Optional[tuple[int, list[int]]]:
    """First position where the latest set of each size stops forming a chain.

    Returns the position together with the family of current representatives
    ordered by size, or None if the ordering never breaks nesting.
    Sizes not yet seen impose no constraint.
    """
    latest: dict[int, int] = {}
    for pos, word in enumerate(ordering.words):
        latest[word.bit_count()] = word
        family = [latest[size] for size in sorted(latest)]
        if any(a & ~b for a, b in zip(family, family[1:])):
            return pos, family
    return None


def nesting_violation(ordering: GrayOrdering) -> Optional[int]:
    hit = nesting_scan(ordering)
    return None if hit is None else hit[0]
