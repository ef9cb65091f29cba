"""Subsequence pattern matching under order isomorphism.

A pattern occurs in a sequence if some subsequence has the same shape.  For
word patterns (words over 0..k using every letter) both the < and = relations
between every pair of positions must match, so equal pattern letters require
equal sequence entries.  Permutation patterns relate distinct entries, where
the equality constraints are vacuous, so one engine serves both.

The engine is a depth-first search over index tuples, pruned by checking each
candidate position against all previously chosen ones.  For the short
patterns this package deals in (length <= 4 at desk scale) the search is the
authoritative implementation; `nonzero_weakly_increasing` is a fast
characterization of 021-avoidance that the test suite cross-checks against it
exhaustively, not a replacement for it.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .core import ValidationError, validate_permutation

PATTERN_021 = (0, 2, 1)
PATTERN_132 = (1, 3, 2)


class PatternContainedError(ValidationError):
    """Raised where an operation's domain excludes a pattern the input contains.

    Attributes:
        pattern:    the forbidden pattern.
        occurrence: 1-based positions of the first occurrence found.
    """

    def __init__(self, message: str, *, pattern: tuple[int, ...],
                 occurrence: tuple[int, ...]):
        super().__init__(message)
        self.pattern = pattern
        self.occurrence = occurrence


def validate_word_pattern(letters: Iterable[int]) -> tuple[int, ...]:
    """Check that every letter 0..max occurs at least once; return the pattern.

    The empty pattern is allowed (it occurs exactly once in every sequence).
    """
    p = tuple(letters)
    if not p:
        return p
    for v in p:
        if v < 0:
            raise ValidationError(
                f"pattern letter {v} is negative; word patterns use 0..k")
    present = set(p)
    for letter in range(max(p) + 1):
        if letter not in present:
            raise ValidationError(
                f"pattern {pattern_text(p)} never uses letter {letter}; "
                f"every letter 0..{max(p)} must appear")
    return p


def pattern_text(pattern: Sequence[int]) -> str:
    """Compact digit form when possible ("021"), spaced form otherwise."""
    if pattern and all(0 <= v <= 9 for v in pattern):
        return "".join(str(v) for v in pattern)
    return " ".join(str(v) for v in pattern) if pattern else "ε"


def _relations(pattern: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """rels[j][t] = sign(pattern[j] - pattern[t]) for t < j."""
    return tuple(
        tuple((pattern[j] > pattern[t]) - (pattern[j] < pattern[t])
              for t in range(j))
        for j in range(len(pattern)))


def _iter_occurrences(seq: Sequence[int],
                      pattern: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """DFS over index tuples; yields 1-based positions in lexicographic order."""
    k = len(pattern)
    if k == 0:
        yield ()
        return
    n = len(seq)
    if n < k:
        return
    rels = _relations(pattern)
    chosen = [0] * k
    taken = [0] * k

    def extend(slot: int, start: int) -> Iterator[tuple[int, ...]]:
        want = rels[slot]
        for pos in range(start, n - (k - slot) + 1):
            x = seq[pos]
            ok = True
            for t in range(slot):
                c = chosen[t]
                if ((x > c) - (x < c)) != want[t]:
                    ok = False
                    break
            if not ok:
                continue
            chosen[slot] = x
            taken[slot] = pos
            if slot + 1 == k:
                yield tuple(q + 1 for q in taken)
            else:
                yield from extend(slot + 1, pos + 1)

    yield from extend(0, 0)


def iter_occurrences_word(seq: Iterable[int],
                          pattern: Iterable[int]) -> Iterator[tuple[int, ...]]:
    """Occurrences of a word pattern, lazily, as 1-based index tuples."""
    return _iter_occurrences(tuple(seq), validate_word_pattern(pattern))


def occurrences_word(seq: Iterable[int],
                     pattern: Iterable[int]) -> list[tuple[int, ...]]:
    """All occurrences of a word pattern, in lexicographic order.

    >>> occurrences_word((0, 1, 0, 1, 2, 2, 0, 3), (0, 2, 1))
    []
    """
    return list(iter_occurrences_word(seq, pattern))


def avoids_word(seq: Iterable[int], pattern: Iterable[int]) -> bool:
    """True iff the sequence has no occurrence of the word pattern.

    Stops at the first occurrence found.
    """
    return next(iter_occurrences_word(seq, pattern), None) is None


def iter_occurrences_perm(perm: Iterable[int],
                          pattern: Iterable[int]) -> Iterator[tuple[int, ...]]:
    """Occurrences of a permutation pattern, lazily, as 1-based index tuples."""
    return _iter_occurrences(validate_permutation(perm),
                             validate_permutation(pattern))


def occurrences_perm(perm: Iterable[int],
                     pattern: Iterable[int]) -> list[tuple[int, ...]]:
    """All order-isomorphic occurrences of a permutation pattern."""
    return list(iter_occurrences_perm(perm, pattern))


def avoids_perm(perm: Iterable[int], pattern: Iterable[int]) -> bool:
    """True iff the permutation contains no occurrence of the pattern."""
    return next(iter_occurrences_perm(perm, pattern), None) is None


def nonzero_weakly_increasing(seq: Iterable[int]) -> bool:
    """True iff deleting all zero entries leaves a weakly increasing word.

    For ascent sequences this characterizes 021-avoidance; the equivalence is
    cross-checked exhaustively in the test suite.

    >>> nonzero_weakly_increasing((0, 1, 0, 1, 3, 3, 0, 0, 3, 0, 4))
    True
    >>> nonzero_weakly_increasing((0, 2, 1))
    False
    """
    prev = None
    for v in seq:
        if v == 0:
            continue
        if prev is not None and v < prev:
            return False
        prev = v
    return True


def require_avoids_word(seq: Sequence[int], pattern: Sequence[int]) -> None:
    """Raise PatternContainedError if the sequence contains the word pattern."""
    hit = next(_iter_occurrences(seq, pattern), None)
    if hit is not None:
        raise PatternContainedError(
            f"sequence contains {pattern_text(pattern)} at positions {hit}",
            pattern=tuple(pattern), occurrence=hit)


def require_avoids_perm(perm: Sequence[int], pattern: Sequence[int]) -> None:
    """Raise PatternContainedError if the permutation contains the pattern."""
    hit = next(_iter_occurrences(perm, pattern), None)
    if hit is not None:
        raise PatternContainedError(
            f"permutation contains {pattern_text(pattern)} at positions {hit}",
            pattern=tuple(pattern), occurrence=hit)


def _completes_occurrence(prefix: Sequence[int], value: int,
                          rels: tuple[tuple[int, ...], ...]) -> bool:
    """Would appending `value` create an occurrence ending at the new position?

    `rels` is the output of _relations() for a nonempty pattern.  This is the
    hot path of enumeration pruning: the last pattern slot is pinned to the
    appended value and the remaining slots are filled by depth-first search.
    Sound as a subtree filter because containment survives every extension.
    """
    k = len(rels)
    if k == 1:
        return True
    last = k - 1
    want_v = rels[last]  # want_v[t]: required sign(value - entry in slot t)
    m = len(prefix)
    if m < last:
        return False
    # cheap necessary condition: every slot needs at least one position whose
    # relation to the appended value matches
    for t in range(last):
        r = want_v[t]
        for x in prefix:
            if ((value > x) - (value < x)) == r:
                break
        else:
            return False
    chosen = [0] * last

    def assign(slot: int, start: int) -> bool:
        rv = want_v[slot]
        want = rels[slot]
        for pos in range(start, m - (last - slot) + 1):
            x = prefix[pos]
            if ((value > x) - (value < x)) != rv:
                continue
            ok = True
            for t in range(slot):
                c = chosen[t]
                if ((x > c) - (x < c)) != want[t]:
                    ok = False
                    break
            if not ok:
                continue
            if slot == last - 1:
                return True
            chosen[slot] = x
            if assign(slot + 1, pos + 1):
                return True
        return False

    return assign(0, 0)
