"""Permutations in one-line notation, pattern containment, and entry classes.

A permutation of [n] = {1, ..., n} is a tuple of ints holding each value
exactly once, e.g. ``(3, 1, 2)``.  All public interfaces use 1-based
positions, so ``right_to_left_maxima((3, 1, 2))`` reports the entry 3 at
position 1.  Functions that only care about relative order (``standardize``,
``contains``) also accept words: sequences of distinct ints that need not
fill an interval, such as ``(16, 19, 15, 6)``.

Terminology used throughout the package:

- a *pattern* q is contained in p when some subsequence of p is
  order-isomorphic to q (classical containment);
- a *mid-123 entry* is an entry with a smaller entry somewhere before it and
  a larger entry somewhere after it, i.e. it can play the middle of an
  ascending subsequence of length three;
- a *key* mid-123 entry is one whose immediate predecessor is either smaller
  than it or a right-to-left maximum;
- a permutation is *start-small* when it does not begin with its largest
  entry.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

PATTERN_123 = (1, 2, 3)
PATTERN_1243 = (1, 2, 4, 3)
PATTERN_2134 = (2, 1, 3, 4)

#: The pattern pair whose avoiders this package enumerates (OEIS A164651).
AVOIDED_PAIR = (PATTERN_1243, PATTERN_2134)


def is_permutation(entries: Sequence[int]) -> bool:
    """
    Check that ``entries`` is a permutation of {1, ..., n} in one-line notation.

    >>> [is_permutation(w) for w in [(1,), (2, 1), (2, 3), (1, 1, 2), ()]]
    [True, True, False, False, False]
    """
    n = len(entries)
    return n >= 1 and sorted(entries) == list(range(1, n + 1))


def parse_perm(text: str) -> tuple[int, ...]:
    """
    Parse the space-separated one-line notation, e.g. ``"3 1 2"`` -> (3, 1, 2).

    Rejects anything that is not a permutation of [n]: non-integer tokens,
    duplicates, and values outside 1..n.
    """
    tokens = text.split()
    if not tokens:
        raise ValueError("empty permutation")
    try:
        entries = tuple(int(tok) for tok in tokens)
    except ValueError:
        raise ValueError(f"non-integer entry in permutation {text!r}") from None
    if len(set(entries)) != len(entries):
        raise ValueError(f"duplicate entries in permutation {text!r}")
    if not is_permutation(entries):
        raise ValueError(
            f"entries of {text!r} are not exactly 1..{len(entries)}"
        )
    return entries


def format_perm(perm: Sequence[int]) -> str:
    """Render a permutation in the space-separated text format."""
    return " ".join(str(v) for v in perm)


def standardize(word: Sequence[int]) -> tuple[int, ...]:
    """
    Replace the smallest entry by 1, the next smallest by 2, and so on.

    The output is the unique permutation order-isomorphic to ``word``.

    >>> standardize((2, 1, 10, 3))
    (2, 1, 4, 3)
    >>> standardize((16, 19, 15, 6, 18, 11, 12, 13, 17, 3, 2, 1))
    (9, 12, 8, 4, 11, 5, 6, 7, 10, 3, 2, 1)
    """
    if len(set(word)) != len(word):
        raise ValueError(f"cannot standardize a word with duplicates: {word!r}")
    rank = {v: i + 1 for i, v in enumerate(sorted(word))}
    return tuple(rank[v] for v in word)


def contains(word: Sequence[int], pattern: Sequence[int]) -> bool:
    """
    Classical pattern containment: does some subsequence of ``word`` have the
    same relative order as ``pattern``?

    Backtracks over pattern slots left to right; each candidate entry must
    fall strictly between the already-placed entries that the pattern orders
    below and above it, which prunes hopeless branches early.

    >>> contains((1, 2, 4, 3), (1, 2, 4, 3))
    True
    >>> contains((3, 4, 1, 2), (1, 2, 3))
    False
    """
    m = len(pattern)
    if m == 0:
        return True
    if m > len(word):
        return False
    placed = [0] * m

    def extend(slot: int, start: int) -> bool:
        lo, hi = -math.inf, math.inf
        for s in range(slot):
            if pattern[s] < pattern[slot]:
                lo = max(lo, placed[s])
            else:
                hi = min(hi, placed[s])
        for pos in range(start, len(word) - (m - 1 - slot)):
            v = word[pos]
            if lo < v < hi:
                if slot == m - 1:
                    return True
                placed[slot] = v
                if extend(slot + 1, pos + 1):
                    return True
        return False

    return extend(0, 0)


def contains_123(word: Sequence[int]) -> bool:
    """
    Linear-time containment test for the fixed pattern 123.

    Scans once, tracking the prefix minimum and the smallest entry seen so
    far that already has a smaller entry before it; any later entry above the
    latter completes an ascending triple.

    >>> contains_123((3, 4, 1, 2))
    False
    >>> contains_123((2, 1, 3, 4))
    True
    """
    lowest = math.inf
    best_mid = math.inf
    for v in word:
        if v > best_mid:
            return True
        if v > lowest and v < best_mid:
            best_mid = v
        if v < lowest:
            lowest = v
    return False


def avoids(word: Sequence[int], patterns: Iterable[Sequence[int]]) -> bool:
    """True iff ``word`` contains none of the given patterns."""
    return not any(contains(word, q) for q in patterns)


def right_to_left_maxima(perm: Sequence[int]) -> set[int]:
    """
    Positions (1-based) of entries larger than everything to their right.

    The last position always qualifies.

    >>> sorted(right_to_left_maxima((3, 2, 1)))
    [1, 2, 3]
    >>> sorted(right_to_left_maxima((1, 3, 4, 5, 2, 6)))
    [6]
    """
    maxima: set[int] = set()
    best = -math.inf
    for pos in range(len(perm), 0, -1):
        if perm[pos - 1] > best:
            maxima.add(pos)
            best = perm[pos - 1]
    return maxima


def mid123_entries(perm: Sequence[int]) -> list[int]:
    """
    Positions (1-based, increasing) of the mid-123 entries of ``perm``.

    Position t qualifies iff some earlier entry is smaller and some later
    entry is larger, detected in linear time from the running prefix minimum
    and a precomputed suffix maximum.

    >>> mid123_entries((1, 3, 4, 5, 2, 6))
    [2, 3, 4, 5]
    >>> mid123_entries((3, 2, 1))
    []
    """
    n = len(perm)
    suffix_max = [0] * (n + 1)  # suffix_max[t] = max of perm[t:] (0-based), 0 past the end
    for t in range(n - 1, -1, -1):
        suffix_max[t] = max(perm[t], suffix_max[t + 1])
    positions = []
    prefix_min = math.inf
    for t in range(n):
        if prefix_min < perm[t] < suffix_max[t + 1]:
            positions.append(t + 1)
        if perm[t] < prefix_min:
            prefix_min = perm[t]
    return positions


def key_mid123_entries(perm: Sequence[int]) -> list[int]:
    """
    Positions of the key mid-123 entries: mid-123 entries whose immediate
    predecessor is smaller or is a right-to-left maximum.

    A mid-123 entry never sits at position 1, so the predecessor exists.

    >>> key_mid123_entries((1, 3, 4, 5, 2, 6))
    [2, 3, 4]
    """
    maxima = right_to_left_maxima(perm)
    return [
        t
        for t in mid123_entries(perm)
        if perm[t - 2] < perm[t - 1] or (t - 1) in maxima
    ]


def is_start_small(perm: Sequence[int]) -> bool:
    """
    True iff the permutation does not start with its largest entry.

    >>> is_start_small((3, 4, 1, 2))
    True
    >>> is_start_small((2, 1))
    False
    >>> is_start_small((1,))
    False
    """
    return perm[0] != len(perm)
