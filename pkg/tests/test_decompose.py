"""Splits, joins, round trips, and the statistic bookkeeping rules."""

import pytest

from ascseq import (
    AscentSplit,
    PatternContainedError,
    PermSplit,
    ValidationError,
    asc,
    ascent_sequences_avoiding,
    avoids_perm,
    avoids_word,
    is_ascent_sequence,
    join_ascent_sequence,
    join_permutation,
    parse_seq,
    permutations_avoiding,
    rlm,
    special_maximum,
    split_ascent_sequence,
    split_permutation,
    validate_ascent_sequence,
)

A021 = (0, 2, 1)
S132 = (1, 3, 2)


def gen_ascent(n):
    return ascent_sequences_avoiding(n, [A021])


def gen_perm(n):
    return permutations_avoiding(n, [S132])


class TestSplitAscent:
    def test_repeated_case(self):
        split = split_ascent_sequence(parse_seq("0 1 0 1 3 3 0 0 3 0 4"))
        assert split == AscentSplit((), parse_seq("0 1 0 1 3 0 0 3 0 4"))
        assert split.repeated

    def test_unique_case(self):
        split = split_ascent_sequence(parse_seq("0101300304"))
        assert split == AscentSplit(parse_seq("0101"), parse_seq("00102"))
        assert not split.repeated

    def test_zero_sequence_drops_last_entry(self):
        assert split_ascent_sequence((0, 0, 0)) == AscentSplit((), (0, 0))

    def test_base_case(self):
        split = split_ascent_sequence((0,))
        assert split == AscentSplit((), ())
        assert split.repeated

    def test_empty_rejected(self):
        with pytest.raises(ValidationError):
            split_ascent_sequence(())

    def test_invalid_rejected(self):
        with pytest.raises(ValidationError):
            split_ascent_sequence((0, 2))

    def test_pattern_rejected(self):
        with pytest.raises(PatternContainedError) as exc:
            split_ascent_sequence((0, 1, 0, 2, 1))
        assert exc.value.pattern == A021
        assert exc.value.occurrence == (1, 4, 5)

    def test_components_stay_in_the_family(self):
        for n in range(1, 9):
            for seq in gen_ascent(n):
                split = split_ascent_sequence(seq)
                for part in (split.left, split.right):
                    assert is_ascent_sequence(part)
                    assert avoids_word(part, A021)
                assert len(split.left) + len(split.right) + 1 == n

    def test_case_partition(self):
        # empty left arises exactly from a repeated special maximum or a zero
        # sequence; the unique case cannot shed its nonempty prefix
        for n in range(1, 9):
            for seq in gen_ascent(n):
                split = split_ascent_sequence(seq)
                info = special_maximum(seq)
                assert split.repeated == (info.repeated or info.value == 0)


class TestJoinAscent:
    def test_repeated_inverse(self):
        joined = join_ascent_sequence(
            AscentSplit((), parse_seq("0 1 0 1 3 0 0 3 0 4")))
        assert joined == parse_seq("0 1 0 1 3 3 0 0 3 0 4")

    def test_unique_inverse(self):
        joined = join_ascent_sequence(
            AscentSplit(parse_seq("0101"), parse_seq("00102")))
        assert joined == parse_seq("0101300304")

    def test_zero_base(self):
        assert join_ascent_sequence(AscentSplit((), ())) == (0,)

    def test_component_containing_pattern_rejected(self):
        with pytest.raises(PatternContainedError):
            join_ascent_sequence(AscentSplit((0, 1, 0, 2, 1), (0,)))

    def test_invalid_component_rejected(self):
        with pytest.raises(ValidationError):
            join_ascent_sequence(AscentSplit((0, 2), ()))

    def test_round_trip_from_objects(self):
        for n in range(1, 11):
            for seq in gen_ascent(n):
                assert join_ascent_sequence(split_ascent_sequence(seq)) == seq

    def test_round_trip_from_pairs(self):
        for n in range(1, 10):
            for left_len in range(n):
                for left in gen_ascent(left_len):
                    for right in gen_ascent(n - 1 - left_len):
                        split = AscentSplit(left, right)
                        joined = join_ascent_sequence(split)
                        assert validate_ascent_sequence(joined)
                        assert avoids_word(joined, A021)
                        assert split_ascent_sequence(joined) == split


class TestSplitPerm:
    def test_maximum_in_the_middle(self):
        assert split_permutation((2, 3, 1)) == PermSplit((1,), (1,))

    def test_maximum_first(self):
        assert split_permutation((3, 2, 1)) == PermSplit((), (2, 1))

    def test_single_entry(self):
        assert split_permutation((1,)) == PermSplit((), ())

    def test_empty_rejected(self):
        with pytest.raises(ValidationError):
            split_permutation(())

    def test_pattern_rejected(self):
        with pytest.raises(PatternContainedError):
            split_permutation((1, 3, 2))

    def test_left_factor_dominates_right_factor(self):
        for n in range(1, 8):
            for perm in gen_perm(n):
                i = perm.index(n)
                left_raw, right_raw = perm[:i], perm[i + 1:]
                assert all(lv > rv for lv in left_raw for rv in right_raw)

    def test_components_stay_in_the_family(self):
        for n in range(1, 9):
            for perm in gen_perm(n):
                split = split_permutation(perm)
                assert avoids_perm(split.left, S132)
                assert avoids_perm(split.right, S132)
                assert len(split.left) + len(split.right) + 1 == n


class TestJoinPerm:
    def test_shift_and_join(self):
        assert join_permutation(PermSplit((1,), (1,))) == (2, 3, 1)

    def test_append_maximum(self):
        assert join_permutation(PermSplit((1, 2), ())) == (1, 2, 3)

    def test_singleton(self):
        assert join_permutation(PermSplit((), ())) == (1,)

    def test_component_containing_pattern_rejected(self):
        with pytest.raises(PatternContainedError):
            join_permutation(PermSplit((1, 3, 2), ()))

    def test_round_trip_from_objects(self):
        for n in range(1, 10):
            for perm in gen_perm(n):
                assert join_permutation(split_permutation(perm)) == perm

    def test_round_trip_from_pairs(self):
        for n in range(1, 9):
            for left_len in range(n):
                for left in gen_perm(left_len):
                    for right in gen_perm(n - 1 - left_len):
                        split = PermSplit(left, right)
                        joined = join_permutation(split)
                        assert avoids_perm(joined, S132)
                        assert split_permutation(joined) == split


class TestBookkeeping:
    """The statistic transport rules, exhaustively, with the lone exception.

    Length-1 objects break the right-to-left-minimum rule on both sides in
    the same way: a single entry is an rlm, the empty component is not.
    The exhaustive sweep asserts that these are the only violations.
    """

    def test_ascent_side(self):
        violations = []
        for n in range(1, 9):
            for seq in gen_ascent(n):
                split = split_ascent_sequence(seq)
                left, right = split.left, split.right
                if split.repeated:
                    if asc(seq) != asc(right):
                        violations.append(("asc", seq))
                    if rlm(seq) != rlm(right):
                        violations.append(("rlm", seq))
                else:
                    if asc(seq) != asc(left) + asc(right) + 1:
                        violations.append(("asc", seq))
                    if right:
                        if rlm(seq) != rlm(right):
                            violations.append(("rlm", seq))
                    elif rlm(seq) != rlm(left) + 1:
                        violations.append(("rlm", seq))
        assert violations == [("rlm", (0,))]

    def test_permutation_side(self):
        violations = []
        for n in range(1, 9):
            for perm in gen_perm(n):
                split = split_permutation(perm)
                left, right = split.left, split.right
                if not left:
                    if asc(perm) != asc(right):
                        violations.append(("asc", perm))
                    if rlm(perm) != rlm(right):
                        violations.append(("rlm", perm))
                else:
                    if asc(perm) != asc(left) + asc(right) + 1:
                        violations.append(("asc", perm))
                    if right:
                        if rlm(perm) != rlm(right):
                            violations.append(("rlm", perm))
                    elif rlm(perm) != rlm(left) + 1:
                        violations.append(("rlm", perm))
        assert violations == [("rlm", (1,))]
