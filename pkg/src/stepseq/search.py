"""Exhaustive backtracking over move choices.

The search keeps one mutable chain, a visited table indexed by mask and the
move stack.  A move is admissible when the set it would produce is neither
an initial set nor already seen; initial sets are marked seen up front.
"""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .core import DomainError, ResourceLimitError, SteppingSequence, expected_length
from .generators import combine_first, combine_second
from .transforms import is_self_dual, orbit_closure, reverse


class Filter(enum.Enum):
    ALL = "all"
    CONTIGUOUS = "contiguous"
    STRONGLY_CONTIGUOUS = "strong"


class Mode(enum.Enum):
    COUNT = "count"
    COLLECT = "collect"


FEASIBILITY_LIMITS = {
    Filter.ALL: 5,
    Filter.CONTIGUOUS: 6,
    Filter.STRONGLY_CONTIGUOUS: 6,
}
COLLECT_LIMIT = 6


class BudgetExhausted(ResourceLimitError):
    """Raised when the node budget runs out before the search finishes."""

    def __init__(self, nodes: int, count: int):
        super().__init__(f"node budget exhausted after {nodes} nodes ({count} sequences so far)")
        self.nodes = nodes
        self.count = count


@dataclass(frozen=True)
class SearchConfig:
    m: int
    filter: Filter = Filter.ALL
    mode: Mode = Mode.COUNT
    node_budget: Optional[int] = None
    # overrides for the default feasibility / collect limits
    limit: Optional[int] = None
    collect_limit: int = COLLECT_LIMIT
    workers: int = 1

    def __post_init__(self):
        if self.m < 2:
            raise DomainError(f"m={self.m} must be at least 2")
        limit = FEASIBILITY_LIMITS[self.filter] if self.limit is None else self.limit
        if self.m > limit:
            raise ResourceLimitError(f"m={self.m} exceeds {self.filter.value} search limit {limit}")
        if self.mode is Mode.COLLECT and self.m > self.collect_limit:
            raise ResourceLimitError(f"collect mode needs m <= {self.collect_limit}")


@dataclass
class SearchResult:
    count: int
    sequences: Optional[list[SteppingSequence]] = None
    nodes: int = 0


@dataclass
class _Frame:
    count: int = 0
    nodes: int = 0
    found: list = field(default_factory=list)


def _explore(m: int, filt: Filter, collect: bool, first_moves, budget) -> _Frame:
    total = expected_length(m)
    q = list(range(m))
    sets = [(1 << i) - 1 for i in range(m + 1)]
    seen = bytearray(1 << m)
    for s in sets:
        seen[s] = 1
    stack = []
    out = _Frame()
    contiguous = filt is not Filter.ALL
    need_last_one = filt is Filter.STRONGLY_CONTIGUOUS
    every = tuple(range(1, m))
    neighbours = [()] + [tuple(j for j in (i - 1, i + 1) if 1 <= j < m) for i in range(1, m)]

    def rec(depth, prev):
        out.nodes += 1
        if budget is not None and out.nodes > budget:
            raise BudgetExhausted(out.nodes, out.count)
        if depth == total:
            if not need_last_one or prev == 1:
                out.count += 1
                if collect:
                    out.found.append(SteppingSequence(m, tuple(stack)))
            return
        if depth == 0:
            choices = first_moves
        elif contiguous:
            choices = neighbours[prev]
        else:
            choices = every
        for i in choices:
            if i == prev:
                continue
            new = sets[i - 1] | (1 << q[i])
            if seen[new]:
                continue
            seen[new] = 1
            old = sets[i]
            sets[i] = new
            q[i - 1], q[i] = q[i], q[i - 1]
            stack.append(i)
            rec(depth + 1, i)
            stack.pop()
            q[i - 1], q[i] = q[i], q[i - 1]
            sets[i] = old
            seen[new] = 0

    rec(0, 0)
    return out


def _explore_job(args):
    return _explore(*args)


def enumerate_sequences(config: SearchConfig) -> SearchResult:
    """Count (or collect) every stepping sequence passing ``config.filter``.

    Collected sequences come out in lexicographic order of their moves.
    With ``workers > 1`` the first move is split across processes; the node
    budget then applies to each first-move subtree separately.
    """
    m = config.m
    collect = config.mode is Mode.COLLECT
    if config.filter is Filter.STRONGLY_CONTIGUOUS:
        firsts = (m - 1,)
    else:
        firsts = tuple(range(1, m))

    if config.workers > 1 and len(firsts) > 1:
        jobs = [(m, config.filter, collect, (i,), config.node_budget) for i in firsts]
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            frames = list(pool.map(_explore_job, jobs))
    else:
        frames = [_explore(m, config.filter, collect, firsts, config.node_budget)]

    count = sum(f.count for f in frames)
    nodes = sum(f.nodes for f in frames)
    sequences = [s for f in frames for s in f.found] if collect else None
    return SearchResult(count, sequences, nodes)


def collect(m: int, filt: Filter = Filter.ALL, **kwargs) -> list[SteppingSequence]:
    return enumerate_sequences(SearchConfig(m, filt, Mode.COLLECT, **kwargs)).sequences


def count(m: int, filt: Filter = Filter.ALL, **kwargs) -> int:
    return enumerate_sequences(SearchConfig(m, filt, Mode.COUNT, **kwargs)).count


# The two m=4 seeds that Theorem-2.1 style products do not reach.
REMAINING_SEEDS_M4 = (
    SteppingSequence(4, (2, 1, 2, 3, 2, 3, 1, 2, 3, 2, 1)),
    SteppingSequence(4, (2, 3, 1, 2, 3, 2, 1, 2, 3, 1, 2)),
)


@dataclass
class CensusM4:
    sequences: list[SteppingSequence]
    self_dual: list[SteppingSequence]
    products: list[SteppingSequence]
    commutation_orbit: list[SteppingSequence]
    remaining_orbit: list[SteppingSequence]

    @property
    def total(self) -> int:
        return len(self.sequences)

    @property
    def orbits_disjoint(self) -> bool:
        return not set(self.commutation_orbit) & set(self.remaining_orbit)

    @property
    def orbits_cover_all(self) -> bool:
        return set(self.commutation_orbit) | set(self.remaining_orbit) == set(self.sequences)

    def summary(self) -> str:
        lines = [
            f"stepping sequences: {self.total}",
            f"reverse equals complement: {len(self.self_dual)}",
            f"products of the two combinators: {len(self.products)}",
            f"closure of products under commutation: {len(self.commutation_orbit)}",
            f"closure of remaining seeds under reverse/complement/commutation: {len(self.remaining_orbit)}",
            f"orbits disjoint: {'yes' if self.orbits_disjoint else 'no'}",
            f"orbits cover all: {'yes' if self.orbits_cover_all else 'no'}",
        ]
        return "\n".join(lines)


def census_m4() -> CensusM4:
    seqs = collect(4)
    base = collect(3)
    products = set()
    for a in base:
        for b in base:
            products.add(combine_first(a, b))
            products.add(combine_second(a, b))
    products = sorted(products, key=lambda s: s.moves)
    return CensusM4(
        sequences=seqs,
        self_dual=[s for s in seqs if is_self_dual(s)],
        products=products,
        commutation_orbit=orbit_closure(products, {"commutation"}),
        remaining_orbit=orbit_closure(REMAINING_SEEDS_M4),
    )


def parity_check(m: int, limit: Optional[int] = None) -> bool:
    """Check the endpoint parity rules on every contiguous stepping sequence.

    For even m both ends must be odd.  For any m, the sequence or its reverse
    must start with a move of the parity of m-1 and end with an odd move.
    """
    for s in collect(m, Filter.CONTIGUOUS, limit=limit, collect_limit=max(m, COLLECT_LIMIT)):
        if m % 2 == 0 and not (s[0] % 2 == 1 and s[-1] % 2 == 1):
            return False
        if not any(t[0] % 2 == (m - 1) % 2 and t[-1] % 2 == 1 for t in (s, reverse(s))):
            return False
    return True
