"""Constructions of the canonical stepping sequence R_m.

R_m can be built four ways that all give the same list: the recursion
R_m = (R_{m-1} + 1) + [1..m-1] + R_{m-1}, a greedy walk, and two loops
driven by the 2-adic valuation.  The loop forms are exposed as streams so
that very large m can be consumed without materialising the list.
"""

from __future__ import annotations

from typing import Iterator

from .core import (
    MAX_WIDTH,
    DomainError,
    ResourceLimitError,
    SteppingSequence,
    expected_length,
    hamming_weight,
    v2,
    verify,
)

MATERIALIZE_LIMIT = 30
GREEDY_LIMIT = 24


def _check_m(m: int, limit: int) -> None:
    if m < 2:
        raise DomainError(f"m={m} must be at least 2")
    if m > limit:
        raise ResourceLimitError(f"m={m} exceeds limit {limit}")


def recursive_r(m: int, limit: int = MATERIALIZE_LIMIT) -> SteppingSequence:
    _check_m(m, limit)
    moves = [1]
    for k in range(3, m + 1):
        moves = [i + 1 for i in moves] + list(range(1, k)) + moves
    return SteppingSequence(m, tuple(moves))


def _walk(m: int, largest: bool) -> list[int]:
    # Seen sets live in a flat table indexed by mask; J is never built, the
    # first unseen S_i^* in scan order is max J (or min J).
    seen = bytearray(1 << m)
    q = list(range(m))
    sets = [(1 << i) - 1 for i in range(m + 1)]
    for s in sets:
        seen[s] = 1
    order = range(m - 1, 0, -1) if largest else range(1, m)
    out = []
    while True:
        for i in order:
            alt = sets[i - 1] | (1 << q[i])
            if not seen[alt]:
                break
        else:
            return out
        q[i - 1], q[i] = q[i], q[i - 1]
        sets[i] = alt
        seen[alt] = 1
        out.append(i)


def greedy(m: int, limit: int = GREEDY_LIMIT) -> SteppingSequence:
    """Always alter the largest set whose alteration has not been seen."""
    _check_m(m, limit)
    return SteppingSequence(m, tuple(_walk(m, largest=True)))


def humble(m: int, limit: int = GREEDY_LIMIT) -> SteppingSequence:
    """Always alter the smallest set whose alteration has not been seen."""
    _check_m(m, limit)
    return SteppingSequence(m, tuple(_walk(m, largest=False)))


class MoveStream:
    """Iterator over the moves of R_m holding a fixed set of integer registers.

    ``state_words`` counts the registers; it depends on neither m nor the
    number of moves pulled so far.
    """

    __slots__ = ("m", "emitted", "total_expected")

    def __init__(self, m: int):
        if not 2 <= m <= MAX_WIDTH:
            raise DomainError(f"m={m} outside [2, {MAX_WIDTH}]")
        self.m = m
        self.emitted = 0
        self.total_expected = expected_length(m)

    def __iter__(self) -> Iterator[int]:
        return self

    def __next__(self) -> int:
        raise NotImplementedError

    @property
    def exhausted(self) -> bool:
        return self.emitted == self.total_expected

    @property
    def state_words(self) -> int:
        return sum(len(getattr(cls, "__slots__", ())) for cls in type(self).__mro__)

    def state_bits(self) -> int:
        """Total bit length of all registers currently held."""
        total = 0
        for cls in type(self).__mro__:
            for name in getattr(cls, "__slots__", ()):
                total += abs(getattr(self, name)).bit_length()
        return total


class ForCStream(MoveStream):
    """For c = 1 .. 2**(m-1) - 1 emit [d, ..., d+v] with v = v2(c), d = m - v - hw(c)."""

    __slots__ = ("c", "last_c", "cur", "end")

    def __init__(self, m: int):
        super().__init__(m)
        self.c = 0
        self.last_c = (1 << (m - 1)) - 1
        self.cur = 1
        self.end = 0

    def __next__(self) -> int:
        if self.cur > self.end:
            if self.c >= self.last_c:
                raise StopIteration
            self.c += 1
            v = v2(self.c)
            self.cur = self.m - v - hamming_weight(self.c)
            self.end = self.cur + v
        out = self.cur
        self.cur += 1
        self.emitted += 1
        return out


class ForJStream(MoveStream):
    """Emit [m-1], then for j = 1 .. 2**(m-2) - 1 emit [t, ..., t+v+1] + [t+v]
    with v = v2(j), followed by t += v - 1.  ``t`` ends at 0."""

    __slots__ = ("j", "last_j", "t", "v", "cur", "phase")

    _HEAD, _NEXT, _RUN, _TAIL, _DONE = range(5)

    def __init__(self, m: int):
        super().__init__(m)
        self.j = 0
        self.last_j = (1 << (m - 2)) - 1
        self.t = m - 2
        self.v = 0
        self.cur = 0
        self.phase = self._HEAD

    def __next__(self) -> int:
        phase = self.phase
        if phase == self._RUN:
            out = self.cur
            self.cur += 1
            if out == self.t + self.v + 1:
                self.phase = self._TAIL
        elif phase == self._TAIL:
            out = self.t + self.v
            self.t += self.v - 1
            self.phase = self._NEXT
        elif phase == self._NEXT:
            if self.j >= self.last_j:
                self.phase = self._DONE
                raise StopIteration
            self.j += 1
            self.v = v2(self.j)
            out = self.t
            self.cur = self.t + 1
            self.phase = self._RUN
        elif phase == self._HEAD:
            out = self.m - 1
            self.phase = self._NEXT
        else:
            raise StopIteration
        self.emitted += 1
        return out

    @property
    def final_t(self):
        """t after the loop, or None while the stream is still running."""
        return self.t if self.phase == self._DONE else None


def stream_for_c(m: int) -> ForCStream:
    return ForCStream(m)


def stream_for_j(m: int) -> ForJStream:
    return ForJStream(m)


def for_c_blocks(m: int) -> Iterator[tuple[int, list[int]]]:
    """(c, block) pairs of the for-c loop."""
    for c in range(1, 1 << (m - 1)):
        v = v2(c)
        d = m - v - hamming_weight(c)
        yield c, list(range(d, d + v + 1))


def for_j_blocks(m: int) -> Iterator[tuple[int, list[int]]]:
    """(j, block) pairs of the for-j loop; the leading [m-1] is not included."""
    t = m - 2
    for j in range(1, 1 << (m - 2)):
        v = v2(j)
        yield j, list(range(t, t + v + 2)) + [t + v]
        t += v - 1


def _pair_width(a: SteppingSequence, b: SteppingSequence, strict: bool) -> int:
    if a.m != b.m:
        raise DomainError(f"sequences have different m ({a.m} and {b.m})")
    if strict:
        for s in (a, b):
            report = verify(s)
            if not report.valid:
                raise DomainError(f"{s} is not a stepping sequence: {report.describe()}")
    return a.m + 1


def combine_first(a: SteppingSequence, b: SteppingSequence, strict: bool = False) -> SteppingSequence:
    """(a + 1) + [1, ..., m-1] + b, a stepping sequence for m = a.m + 1."""
    m = _pair_width(a, b, strict)
    return SteppingSequence(m, tuple(i + 1 for i in a.moves) + tuple(range(1, m)) + b.moves)


def combine_second(a: SteppingSequence, b: SteppingSequence, strict: bool = False) -> SteppingSequence:
    """a + [m-1, ..., 1] + (b + 1), a stepping sequence for m = a.m + 1."""
    m = _pair_width(a, b, strict)
    return SteppingSequence(m, a.moves + tuple(range(m - 1, 0, -1)) + tuple(i + 1 for i in b.moves))
