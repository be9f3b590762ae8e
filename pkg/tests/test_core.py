import pytest
from hypothesis import given, strategies as st

from stepseq.core import (
    DifferenceSequence,
    DomainError,
    FailureReason,
    ResourceLimitError,
    SteppingSequence,
    SubsetMask,
    apply_move,
    expected_profile,
    format_chain,
    format_moves,
    hamming_weight,
    new_chain,
    occurrence_profile,
    parse_chain,
    parse_moves,
    subset_at,
    v2,
    verify,
)
from stepseq.generators import recursive_r

from conftest import simulate_with_sets


def labels(mask):
    # display relabelling: element e is shown as e + 1
    return {e + 1 for e in mask.elements()}


def chain_from_display(*q):
    return DifferenceSequence(tuple(x - 1 for x in q))


def test_new_chain():
    assert new_chain(4).q == (0, 1, 2, 3)
    assert new_chain(2).q == (0, 1)
    assert subset_at(new_chain(4), 3).elements() == (0, 1, 2)


@pytest.mark.parametrize("m", [0, 1, 65])
def test_new_chain_range(m):
    with pytest.raises(DomainError):
        new_chain(m)


def test_difference_sequence_must_be_permutation():
    with pytest.raises(DomainError):
        DifferenceSequence((0, 0, 1))


def test_apply_move_figure_rows():
    chain, new = apply_move(chain_from_display(1, 2, 3, 4), 3)
    assert format_chain(chain, base=1) == "1,2,4,3"
    assert labels(new) == {1, 2, 4}

    chain, new = apply_move(chain, 2)
    assert format_chain(chain, base=1) == "1,4,2,3"
    assert labels(new) == {1, 4}


@pytest.mark.parametrize("i", [0, 4, -1])
def test_apply_move_range(i):
    with pytest.raises(DomainError):
        apply_move(new_chain(4), i)


def test_subset_at():
    chain = new_chain(4)
    assert subset_at(chain, 0).bits == 0b0000
    assert subset_at(chain, 4).bits == 0b1111
    assert labels(subset_at(chain_from_display(1, 4, 3, 2), 3)) == {1, 3, 4}
    with pytest.raises(DomainError):
        subset_at(chain, 5)


@given(st.integers(2, 12).flatmap(
    lambda m: st.tuples(st.permutations(range(m)), st.integers(1, m - 1))))
def test_move_is_involution(args):
    q, i = args
    chain = DifferenceSequence(tuple(q))
    before = subset_at(chain, i)
    once, _ = apply_move(chain, i)
    twice, regenerated = apply_move(once, i)
    assert twice == chain
    assert regenerated == before


@given(st.integers(2, 12).flatmap(lambda m: st.permutations(range(m))))
def test_chain_invariants(q):
    chain = DifferenceSequence(tuple(q))
    m = chain.m
    for i in range(m):
        a, b = subset_at(chain, i), subset_at(chain, i + 1)
        assert a.cardinality == i
        assert a.bits & ~b.bits == 0 and a != b
    assert subset_at(chain, m).bits == 2 ** m - 1


def test_subset_mask():
    s = SubsetMask.from_elements([0, 2], 3)
    assert s.bits == 0b101 and s.to_binary() == "101" and s.cardinality == 2
    assert 2 in s and 1 not in s
    with pytest.raises(DomainError):
        SubsetMask(8, 3)


def test_text_round_trip():
    seq = SteppingSequence(4, (3, 2, 3, 2, 1, 2, 3, 2, 1, 2, 1))
    assert format_moves(seq) == "3 2 3 2 1 2 3 2 1 2 1"
    assert parse_moves(format_moves(seq), 4) == seq
    assert parse_chain("0,2,1,3") == DifferenceSequence((0, 2, 1, 3))
    assert parse_chain("1,3,2,4", base=1) == DifferenceSequence((0, 2, 1, 3))
    with pytest.raises(DomainError):
        parse_moves("1 a", 3)


@pytest.mark.parametrize("m,moves", [
    (3, [2, 1, 2, 1]),
    (3, [1, 2, 1, 2]),
    (4, [3, 2, 3, 2, 1, 2, 3, 1, 2, 1, 2]),
    (1, []),
    (2, [1]),
])
def test_verify_valid(m, moves):
    assert verify(SteppingSequence(m, moves)).valid


@pytest.mark.parametrize("m,moves,reason,step", [
    (2, [1, 1], FailureReason.CONSECUTIVE_EQUAL_MOVES, 2),
    (3, [2, 1, 2], FailureReason.WRONG_LENGTH, None),
    (3, [2, 3, 1, 2], FailureReason.INDEX_OUT_OF_RANGE, 2),
    (3, [0], FailureReason.INDEX_OUT_OF_RANGE, 1),
    # step 5 regenerates {1}, first produced at step 1
    (4, [1, 2, 1, 3, 1], FailureReason.REPEATED_SUBSET, 5),
    # step 5 regenerates the initial S_2 = {0,1}
    (3, [2, 1, 2, 1, 2], FailureReason.INITIAL_SUBSET_REVISITED, 5),
    (3, [1, 2, 1, 2, 1], FailureReason.INITIAL_SUBSET_REVISITED, 5),
])
def test_verify_failures(m, moves, reason, step):
    report = verify(SteppingSequence(m, moves))
    assert not report.valid
    assert report.failure_reason is reason
    assert report.failure_step == step


def test_verify_report_fields():
    ok = verify(SteppingSequence(3, [2, 1, 2, 1]))
    assert (ok.failure_step, ok.failure_reason, ok.repeated_subset) == (None, None, None)
    bad = verify(SteppingSequence(3, [1, 2, 1, 2, 1]))
    assert bad.repeated_subset is not None and bad.repeated_subset.bits == 0b001
    assert "InitialSubsetRevisited at step 5" in bad.describe()


def test_verify_limit():
    with pytest.raises(ResourceLimitError):
        verify(SteppingSequence(29, []))
    assert not verify(SteppingSequence(29, []), limit=29).valid


@given(st.integers(1, 5).flatmap(
    lambda m: st.tuples(st.just(m), st.lists(st.integers(0, m), max_size=2 ** m))))
def test_verify_agrees_with_set_oracle(args):
    m, moves = args
    assert verify(SteppingSequence(m, moves)).valid == simulate_with_sets(m, moves)


@given(st.integers(3, 6).flatmap(
    lambda m: st.tuples(st.just(m), st.integers(0, 2 ** m - m - 2), st.integers(1, m - 1))))
def test_verify_single_mutation_of_r(args):
    m, pos, value = args
    moves = list(recursive_r(m).moves)
    moves[pos] = value
    assert verify(SteppingSequence(m, moves)).valid == simulate_with_sets(m, moves)


@pytest.mark.parametrize("m", range(2, 21))
def test_verify_r(m):
    assert verify(recursive_r(m)).valid


def test_occurrence_profile():
    assert occurrence_profile(recursive_r(4)) == (3, 5, 3)
    assert occurrence_profile(SteppingSequence(3, [2, 1, 2, 1])) == (2, 2)
    assert occurrence_profile(SteppingSequence(1, [])) == ()


@pytest.mark.parametrize("m", range(2, 17))
def test_occurrence_profile_r(m):
    assert occurrence_profile(recursive_r(m)) == expected_profile(m)


def test_occurrence_profile_all_m4(all_m4):
    for s in all_m4:
        assert occurrence_profile(s) == expected_profile(4)


def _v2_by_division(c):
    v = 0
    while c % 2 == 0:
        c //= 2
        v += 1
    return v


def test_bit_kernels():
    assert (v2(1), v2(4), v2(12)) == (0, 2, 2)
    assert (hamming_weight(0), hamming_weight(0b1011)) == (0, 3)
    assert all(hamming_weight(2 ** k) == 1 for k in range(80))
    with pytest.raises(DomainError):
        v2(0)
    with pytest.raises(DomainError):
        hamming_weight(-1)


@given(st.integers(1, 2 ** 70))
def test_bit_kernels_against_oracles(c):
    assert v2(c) == _v2_by_division(c)
    assert hamming_weight(c) == bin(c).count("1")


@given(st.integers(0, 2 ** 70))
def test_weight_step(j):
    # the increment form of the valuation / weight identity
    assert hamming_weight(j + 1) - hamming_weight(j) == 1 - v2(j + 1)
