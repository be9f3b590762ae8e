"""Symmetries of stepping sequences: reverse, complement and commutation."""

from __future__ import annotations

from collections import deque
from typing import Iterable

from .core import DomainError, ResourceLimitError, SteppingSequence

OPERATIONS = frozenset({"reverse", "complement", "commutation"})
ORBIT_M_LIMIT = 8
ORBIT_SIZE_LIMIT = 1_000_000


def complement(seq: SteppingSequence) -> SteppingSequence:
    m = seq.m
    return SteppingSequence(m, tuple(m - i for i in seq.moves))


def reverse(seq: SteppingSequence) -> SteppingSequence:
    return SteppingSequence(seq.m, seq.moves[::-1])


def is_self_dual(seq: SteppingSequence) -> bool:
    """True when the reverse equals the complement."""
    m, moves = seq.m, seq.moves
    n = len(moves)
    return all(moves[p] + moves[n - 1 - p] == m for p in range(n))


def commutations(seq: SteppingSequence) -> list[SteppingSequence]:
    """All single swaps of adjacent moves that differ by at least 2."""
    moves = seq.moves
    out = []
    for p in range(len(moves) - 1):
        if abs(moves[p] - moves[p + 1]) >= 2:
            swapped = moves[:p] + (moves[p + 1], moves[p]) + moves[p + 2:]
            out.append(SteppingSequence(seq.m, swapped))
    return out


def _neighbours(seq: SteppingSequence, ops: frozenset) -> Iterable[SteppingSequence]:
    if "reverse" in ops:
        yield reverse(seq)
    if "complement" in ops:
        yield complement(seq)
    if "commutation" in ops:
        yield from commutations(seq)


def orbit_closure(
    seeds: Iterable[SteppingSequence],
    ops: Iterable[str] = OPERATIONS,
    m_limit: int = ORBIT_M_LIMIT,
    size_limit: int = ORBIT_SIZE_LIMIT,
) -> list[SteppingSequence]:
    """Smallest set containing ``seeds`` and closed under ``ops``, sorted by moves."""
    ops = frozenset(ops)
    unknown = ops - OPERATIONS
    if unknown:
        raise DomainError(f"unknown operations {sorted(unknown)}")
    seeds = list(seeds)
    if len({s.m for s in seeds}) > 1:
        raise DomainError("seeds must share the same m")
    if seeds and seeds[0].m > m_limit:
        raise ResourceLimitError(f"m={seeds[0].m} exceeds orbit limit {m_limit}")

    found = set(seeds)
    frontier = deque(found)
    while frontier:
        seq = frontier.popleft()
        for nb in _neighbours(seq, ops):
            if nb not in found:
                found.add(nb)
                if len(found) > size_limit:
                    raise ResourceLimitError(f"orbit exceeds {size_limit} sequences")
                frontier.append(nb)
    return sorted(found, key=lambda s: s.moves)
