"""Nested chains of subsets and the moves that walk through them.

A chain S_0 < S_1 < ... < S_m with |S_i| = i over the ground set
{0, ..., m-1} is stored as its difference sequence q, where q[i-1] is the
one element of S_i not in S_{i-1}.  Subsets are bitmasks (element e is bit
2**e).  Move indices are 1-based throughout, so move i alters S_i.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator, Optional

MAX_WIDTH = 64
VERIFY_LIMIT = 28


class StepseqError(Exception):
    pass


class DomainError(StepseqError, ValueError):
    """An argument lies outside the domain of the operation."""


class ResourceLimitError(StepseqError):
    """The request would exceed a configured size limit."""


def v2(c: int) -> int:
    """2-adic valuation: the largest v with 2**v dividing c."""
    if c <= 0:
        raise DomainError(f"valuation at 2 is undefined for {c}")
    return (c & -c).bit_length() - 1


def hamming_weight(c: int) -> int:
    if c < 0:
        raise DomainError(f"hamming weight of negative integer {c}")
    return c.bit_count()


def mask_of(elements: Iterable[int]) -> int:
    bits = 0
    for e in elements:
        bits |= 1 << e
    return bits


def elements_of(bits: int) -> tuple[int, ...]:
    out = []
    e = 0
    while bits:
        if bits & 1:
            out.append(e)
        bits >>= 1
        e += 1
    return tuple(out)


@dataclass(frozen=True)
class SubsetMask:
    """A subset of {0, ..., width-1} packed into an integer."""

    bits: int
    width: int

    def __post_init__(self):
        if not 0 <= self.bits < (1 << self.width):
            raise DomainError(f"mask {self.bits} does not fit in {self.width} bits")

    @classmethod
    def from_elements(cls, elements: Iterable[int], width: int) -> "SubsetMask":
        return cls(mask_of(elements), width)

    @property
    def cardinality(self) -> int:
        return self.bits.bit_count()

    def elements(self) -> tuple[int, ...]:
        return elements_of(self.bits)

    def to_binary(self) -> str:
        # high bit first, exactly `width` digits
        return format(self.bits, f"0{self.width}b") if self.width else ""

    def __int__(self) -> int:
        return self.bits

    def __contains__(self, element: int) -> bool:
        return bool(self.bits >> element & 1)


def _check_width(m: int) -> None:
    if not 2 <= m <= MAX_WIDTH:
        raise DomainError(f"chain length m={m} outside [2, {MAX_WIDTH}]")


@dataclass(frozen=True)
class DifferenceSequence:
    q: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "q", tuple(self.q))
        if sorted(self.q) != list(range(len(self.q))):
            raise DomainError(f"{self.q} is not a permutation of 0..{len(self.q) - 1}")

    @property
    def m(self) -> int:
        return len(self.q)

    def __str__(self) -> str:
        return format_chain(self)


def new_chain(m: int) -> DifferenceSequence:
    """The identity chain, S_i = {0, ..., i-1}."""
    _check_width(m)
    return DifferenceSequence(tuple(range(m)))


def subset_at(chain: DifferenceSequence, i: int) -> SubsetMask:
    if not 0 <= i <= chain.m:
        raise DomainError(f"set index {i} outside [0, {chain.m}]")
    return SubsetMask(mask_of(chain.q[:i]), chain.m)


def apply_move(chain: DifferenceSequence, i: int) -> tuple[DifferenceSequence, SubsetMask]:
    """Alter S_i by swapping q_i and q_{i+1}; returns the new chain and new S_i."""
    if not 1 <= i <= chain.m - 1:
        raise DomainError(f"move {i} outside [1, {chain.m - 1}]")
    q = list(chain.q)
    q[i - 1], q[i] = q[i], q[i - 1]
    moved = DifferenceSequence(tuple(q))
    return moved, subset_at(moved, i)


def format_chain(chain: DifferenceSequence, base: int = 0) -> str:
    """Comma-separated labels; ``base=1`` gives the {1, ..., m} display labels."""
    return ",".join(str(label + base) for label in chain.q)


def parse_chain(text: str, base: int = 0) -> DifferenceSequence:
    try:
        labels = [int(tok) - base for tok in text.strip().split(",")]
    except ValueError as exc:
        raise DomainError(f"cannot parse difference sequence {text!r}") from exc
    return DifferenceSequence(tuple(labels))


class ChainWalker:
    """Mutable chain state for fast simulation.

    Keeps the difference sequence and the prefix masks S_0..S_m side by side
    so a move costs O(1).
    """

    __slots__ = ("m", "q", "sets")

    def __init__(self, m: int):
        self.m = m
        self.q = list(range(m))
        self.sets = [(1 << i) - 1 for i in range(m + 1)]

    def peek(self, i: int) -> int:
        """Mask that move i would produce, without applying it."""
        return self.sets[i - 1] | (1 << self.q[i])

    def move(self, i: int) -> int:
        q = self.q
        q[i - 1], q[i] = q[i], q[i - 1]
        new = self.sets[i - 1] | (1 << q[i - 1])
        self.sets[i] = new
        return new

    def chain(self) -> DifferenceSequence:
        return DifferenceSequence(tuple(self.q))


@dataclass(frozen=True, order=True)
class SteppingSequence:
    """A candidate list of 1-based move indices for chain length m.

    Construction does not validate; use :func:`verify` for that.
    """

    m: int
    moves: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "moves", tuple(self.moves))
        if self.m < 1:
            raise DomainError(f"chain length m={self.m} must be positive")

    def __len__(self) -> int:
        return len(self.moves)

    def __iter__(self) -> Iterator[int]:
        return iter(self.moves)

    def __getitem__(self, index):
        return self.moves[index]

    def __str__(self) -> str:
        return format_moves(self)

    @property
    def expected_length(self) -> int:
        return expected_length(self.m)

    def is_well_formed(self) -> bool:
        prev = 0
        for i in self.moves:
            if not 1 <= i < self.m or i == prev:
                return False
            prev = i
        return True


def expected_length(m: int) -> int:
    return (1 << m) - m - 1


def format_moves(seq: SteppingSequence) -> str:
    return " ".join(map(str, seq.moves))


def parse_moves(text: str, m: int) -> SteppingSequence:
    try:
        moves = tuple(int(tok) for tok in text.split())
    except ValueError as exc:
        raise DomainError(f"cannot parse move list {text!r}") from exc
    return SteppingSequence(m, moves)


class FailureReason(enum.Enum):
    REPEATED_SUBSET = "RepeatedSubset"
    INITIAL_SUBSET_REVISITED = "InitialSubsetRevisited"
    WRONG_LENGTH = "WrongLength"
    INDEX_OUT_OF_RANGE = "IndexOutOfRange"
    CONSECUTIVE_EQUAL_MOVES = "ConsecutiveEqualMoves"


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of :func:`verify`.

    ``failure_step`` is the 1-based position of the offending move.  It is
    None for a valid sequence and for WRONG_LENGTH, which is only detected
    once the whole list has been simulated.
    """

    valid: bool
    failure_step: Optional[int] = None
    failure_reason: Optional[FailureReason] = None
    repeated_subset: Optional[SubsetMask] = None

    def __bool__(self) -> bool:
        return self.valid

    def describe(self) -> str:
        if self.valid:
            return "valid"
        text = f"invalid: {self.failure_reason.value}"
        if self.failure_step is not None:
            text += f" at step {self.failure_step}"
        if self.repeated_subset is not None:
            text += f" (subset {self.repeated_subset.to_binary()})"
        return text


def _is_initial(bits: int) -> bool:
    # initial sets of the identity chain are exactly the masks 2**i - 1
    return bits & (bits + 1) == 0


def verify(seq: SteppingSequence, limit: int = VERIFY_LIMIT) -> VerificationReport:
    """Simulate ``seq`` from the identity chain and report the first violation."""
    m = seq.m
    if m > limit:
        raise ResourceLimitError(f"m={m} exceeds verification limit {limit}")
    if m > MAX_WIDTH:
        raise DomainError(f"m={m} exceeds mask width {MAX_WIDTH}")

    seen = bytearray(1 << m)
    q = list(range(m))
    sets = [(1 << i) - 1 for i in range(m + 1)]
    for s in sets:
        seen[s] = 1

    prev = 0
    for step, i in enumerate(seq.moves, start=1):
        if not 1 <= i < m:
            return VerificationReport(False, step, FailureReason.INDEX_OUT_OF_RANGE)
        if i == prev:
            return VerificationReport(False, step, FailureReason.CONSECUTIVE_EQUAL_MOVES)
        q[i - 1], q[i] = q[i], q[i - 1]
        new = sets[i - 1] | (1 << q[i - 1])
        if seen[new]:
            reason = (
                FailureReason.INITIAL_SUBSET_REVISITED
                if _is_initial(new)
                else FailureReason.REPEATED_SUBSET
            )
            return VerificationReport(False, step, reason, SubsetMask(new, m))
        seen[new] = 1
        sets[i] = new
        prev = i

    if len(seq.moves) != expected_length(m):
        return VerificationReport(False, None, FailureReason.WRONG_LENGTH)
    return VerificationReport(True)


def occurrence_profile(seq: SteppingSequence) -> tuple[int, ...]:
    """Counts of each move; entry i-1 holds the number of occurrences of i."""
    counts = Counter(seq.moves)
    return tuple(counts[i] for i in range(1, seq.m))


def expected_profile(m: int) -> tuple[int, ...]:
    return tuple(comb(m, i) - 1 for i in range(1, m))
