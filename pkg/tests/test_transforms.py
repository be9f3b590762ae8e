import pytest
from hypothesis import given, strategies as st

from stepseq.core import DomainError, ResourceLimitError, SteppingSequence, verify
from stepseq.generators import recursive_r
from stepseq.transforms import (
    commutations,
    complement,
    is_self_dual,
    orbit_closure,
    reverse,
)

R4 = recursive_r(4)

PRODUCTS = [
    SteppingSequence(4, m) for m in (
        (3, 2, 3, 2, 1, 2, 3, 2, 1, 2, 1),
        (2, 3, 2, 3, 1, 2, 3, 1, 2, 1, 2),
        (3, 2, 3, 2, 1, 2, 3, 1, 2, 1, 2),
        (2, 3, 2, 3, 1, 2, 3, 2, 1, 2, 1),
    )
]
PRODUCTS += [reverse(s) for s in PRODUCTS]

REMAINING = [
    SteppingSequence(4, (2, 1, 2, 3, 2, 3, 1, 2, 3, 2, 1)),
    SteppingSequence(4, (2, 3, 1, 2, 3, 2, 1, 2, 3, 1, 2)),
]

sequences = st.integers(2, 8).flatmap(
    lambda m: st.builds(SteppingSequence, st.just(m), st.lists(st.integers(1, m - 1), max_size=40)))


def test_complement():
    assert list(complement(SteppingSequence(3, [2, 1, 2, 1]))) == [1, 2, 1, 2]
    assert list(complement(R4)) == [1, 2, 1, 2, 3, 2, 1, 2, 3, 2, 3]


def test_reverse():
    assert list(reverse(SteppingSequence(3, [2, 1, 2, 1]))) == [1, 2, 1, 2]


@given(sequences)
def test_involutions_and_commuting(s):
    assert complement(complement(s)) == s
    assert reverse(reverse(s)) == s
    assert complement(reverse(s)) == reverse(complement(s))


@pytest.mark.parametrize("m", range(2, 17))
def test_reverse_of_r_is_complement(m):
    r = recursive_r(m)
    assert reverse(r) == complement(r)
    assert is_self_dual(r)


def _commutation_positions(moves):
    return [p for p in range(len(moves) - 1) if abs(moves[p] - moves[p + 1]) >= 2]


def test_commutations():
    assert commutations(R4) == []  # R_4 has only unit gaps
    assert commutations(SteppingSequence(3, [1, 2, 1, 2])) == []
    s = SteppingSequence(4, (3, 2, 3, 2, 1, 2, 3, 1, 2, 1, 2))
    out = commutations(s)
    assert len(out) == len(_commutation_positions(s.moves)) == 1
    assert list(out[0]) == [3, 2, 3, 2, 1, 2, 1, 3, 2, 1, 2]


def test_symmetries_preserve_validity(all_m4):
    for s in all_m4:
        assert verify(complement(s)).valid
        assert verify(reverse(s)).valid
        swaps = commutations(s)
        assert len(swaps) == len(_commutation_positions(s.moves))
        for t in swaps:
            assert verify(t).valid


def test_self_dual_count_m4(all_m4):
    assert sum(is_self_dual(s) for s in all_m4) == 10


def test_orbit_of_products_under_commutation():
    orbit = orbit_closure(PRODUCTS, {"commutation"})
    assert len(set(PRODUCTS)) == 8
    assert len(orbit) == 18
    assert set(PRODUCTS) <= set(orbit)
    assert [s.moves for s in orbit] == sorted(s.moves for s in orbit)


def test_orbit_of_remaining_seeds(all_m4):
    orbit = orbit_closure(REMAINING)
    assert len(orbit) == 16
    both = set(orbit) | set(orbit_closure(PRODUCTS, {"commutation"}))
    assert both == set(all_m4)
    for s in orbit:
        assert verify(s).valid


def test_orbit_errors():
    with pytest.raises(DomainError):
        orbit_closure(REMAINING, {"rotate"})
    with pytest.raises(DomainError):
        orbit_closure([R4, recursive_r(3)])
    with pytest.raises(ResourceLimitError):
        orbit_closure([recursive_r(9)])
    with pytest.raises(ResourceLimitError):
        orbit_closure(REMAINING, size_limit=5)
