"""Exhaustive generation and counting of pattern-avoidance classes.

The generators build permutations position by position and abandon a prefix
as soon as it contains a forbidden pattern, which is sound because classical
containment is monotone under extension: a clean permutation cannot have a
dirty prefix.  Emission is in lexicographic one-line order, and everything is
streamed, never materialized.

Dedicated prefix tests make the two hot pattern sets cheap: for {123} and for
the {1243, 2134} pair, appending a value can only complete an occurrence
whose final letter is the new value, and for these patterns that condition
reduces to O(1) threshold checks against scan statistics of the prefix.  Any
other pattern set goes through a generic anchored matcher.  The naive
filter over all n! permutations is kept as an independent debug oracle.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .perms import (
    PATTERN_123,
    PATTERN_1243,
    PATTERN_2134,
    contains,
    is_permutation,
    is_start_small,
    key_mid123_entries,
    mid123_entries,
)


def _normalize_patterns(
    patterns: Iterable[Sequence[int]],
) -> tuple[tuple[int, ...], ...]:
    normalized = sorted({tuple(q) for q in patterns})
    for q in normalized:
        if not is_permutation(q):
            raise ValueError(f"pattern {q!r} is not a permutation of 1..{len(q)}")
    return tuple(normalized)


def enumerate_avoiders(
    n: int, patterns: Iterable[Sequence[int]] = ()
) -> Iterator[tuple[int, ...]]:
    """
    Yield every permutation of [n] avoiding all given patterns exactly once,
    in lexicographic order of one-line notation.

    >>> list(enumerate_avoiders(3, [(1, 2, 3)]))
    [(1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2), (3, 2, 1)]
    """
    if n < 1:
        raise ValueError("length n must be >= 1")
    pats = _normalize_patterns(patterns)
    if pats == (PATTERN_1243, PATTERN_2134):
        yield from _avoiders_1243_2134(n)
    elif pats == (PATTERN_123,):
        yield from _avoiders_123(n)
    else:
        yield from _avoiders_generic(n, pats)


def naive_avoiders(
    n: int, patterns: Iterable[Sequence[int]] = ()
) -> Iterator[tuple[int, ...]]:
    """Debug path: filter all n! permutations with the generic containment test."""
    if n < 1:
        raise ValueError("length n must be >= 1")
    pats = _normalize_patterns(patterns)
    for perm in itertools.permutations(range(1, n + 1)):
        if not any(contains(perm, q) for q in pats):
            yield perm


def count_avoiders(n: int, patterns: Iterable[Sequence[int]] = ()) -> int:
    """Number of permutations of [n] avoiding all given patterns."""
    return sum(1 for _ in enumerate_avoiders(n, patterns))


def _avoiders_1243_2134(n: int) -> Iterator[tuple[int, ...]]:
    # Appending v to a clean prefix w creates 1243 iff some w[l] > v has a
    # rise (both entries < v) strictly before it, and creates 2134 iff some
    # w[l] < v has a descent with top below w[l] strictly before it.  The
    # scan statistics carried through the recursion:
    #   s12   = smallest top of a rise in the prefix so far,
    #   s12_at[x] = value of s12 just before value x was placed,
    #   m21   = smallest top of a descent in the prefix so far,
    #   bad4  = smallest w[l] whose earlier descent tops out below it; any
    #           v > bad4 is forbidden, so the ascending loop can stop there.
    inf = n + 1
    used = [False] * (n + 2)
    s12_at = [inf] * (n + 1)
    prefix: list[int] = []

    def rec(
        depth: int, prefix_min: int, s12: int, m21: int, bad4: int
    ) -> Iterator[tuple[int, ...]]:
        if depth == n:
            yield tuple(prefix)
            return
        # min_above[x] = min of s12_at over placed values >= x; the 1243 test
        # for candidate v is then min_above[v + 1] < v.
        min_above = [inf] * (n + 2)
        running = inf
        for x in range(n, 0, -1):
            if used[x] and s12_at[x] < running:
                running = s12_at[x]
            min_above[x] = running
        for v in range(1, n + 1):
            if used[v]:
                continue
            if v > bad4:
                break
            if min_above[v + 1] < v:
                continue
            new_s12 = v if (prefix_min < v < s12) else s12
            new_m21 = m21
            for x in range(v + 1, n + 1):  # smallest placed value above v
                if used[x]:
                    if x < new_m21:
                        new_m21 = x
                    break
            new_bad4 = v if (m21 < v < bad4) else bad4
            used[v] = True
            s12_at[v] = s12
            prefix.append(v)
            yield from rec(depth + 1, min(prefix_min, v), new_s12, new_m21, new_bad4)
            prefix.pop()
            used[v] = False

    yield from rec(0, inf, inf, inf, inf)


def _avoiders_123(n: int) -> Iterator[tuple[int, ...]]:
    # Appending v completes a 123 iff the prefix has a rise topping out below
    # v, so with s12 as above every candidate v > s12 is forbidden at once.
    inf = n + 1
    used = [False] * (n + 1)
    prefix: list[int] = []

    def rec(depth: int, prefix_min: int, s12: int) -> Iterator[tuple[int, ...]]:
        if depth == n:
            yield tuple(prefix)
            return
        for v in range(1, n + 1):
            if used[v]:
                continue
            if v > s12:
                break
            new_s12 = v if (prefix_min < v < s12) else s12
            used[v] = True
            prefix.append(v)
            yield from rec(depth + 1, min(prefix_min, v), new_s12)
            prefix.pop()
            used[v] = False

    yield from rec(0, inf, inf)


def _completes_pattern(
    prefix: Sequence[int], v: int, pattern: Sequence[int]
) -> bool:
    # Would appending v to a clean prefix create an occurrence of pattern?
    # Any new occurrence must end at the new final position, so v is pinned
    # to the pattern's last letter and the remaining letters are matched
    # left to right inside the prefix with the usual value-window pruning.
    m = len(pattern)
    if m == 1:
        return True
    if m - 1 > len(prefix):
        return False
    last = pattern[-1]
    placed = [0] * (m - 1)

    def extend(slot: int, start: int) -> bool:
        lo, hi = -math.inf, math.inf
        for s in range(slot):
            if pattern[s] < pattern[slot]:
                lo = max(lo, placed[s])
            else:
                hi = min(hi, placed[s])
        if pattern[slot] < last:
            hi = min(hi, v)
        else:
            lo = max(lo, v)
        for pos in range(start, len(prefix) - (m - 2 - slot)):
            y = prefix[pos]
            if lo < y < hi:
                placed[slot] = y
                if slot == m - 2 or extend(slot + 1, pos + 1):
                    return True
        return False

    return extend(0, 0)


def _avoiders_generic(
    n: int, patterns: Sequence[Sequence[int]]
) -> Iterator[tuple[int, ...]]:
    used = [False] * (n + 1)
    prefix: list[int] = []

    def rec(depth: int) -> Iterator[tuple[int, ...]]:
        if depth == n:
            yield tuple(prefix)
            return
        for v in range(1, n + 1):
            if used[v]:
                continue
            if any(_completes_pattern(prefix, v, q) for q in patterns):
                continue
            used[v] = True
            prefix.append(v)
            yield from rec(depth + 1)
            prefix.pop()
            used[v] = False

    yield from rec(0)


@dataclass(frozen=True)
class ClassDescriptor:
    """
    A finite avoidance class: permutations of [n] avoiding ``patterns``,
    optionally restricted to start-small ones, to those with exactly ``k``
    key mid-123 entries, and to those whose last mid-123 entry sits at
    position ``j``.
    """

    n: int
    patterns: tuple[tuple[int, ...], ...] = ()
    start_small_only: bool = False
    k: int | None = None
    j: int | None = None

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("class length n must be >= 1")
        if self.j is not None:
            if self.k is None:
                raise ValueError("descriptor gives j without k")
            if not 1 <= self.k < self.j <= self.n - 1:
                raise ValueError(
                    f"need 1 <= k < j <= n-1, got k={self.k}, j={self.j}, n={self.n}"
                )
        elif self.k is not None and self.k < 0:
            raise ValueError(f"key mid-123 count k must be >= 0, got {self.k}")


def enumerate_class(descriptor: ClassDescriptor) -> Iterator[tuple[int, ...]]:
    """Stream the members of the described class in lexicographic order."""
    for perm in enumerate_avoiders(descriptor.n, descriptor.patterns):
        if descriptor.start_small_only and not is_start_small(perm):
            continue
        if descriptor.k is not None and len(key_mid123_entries(perm)) != descriptor.k:
            continue
        if descriptor.j is not None:
            mids = mid123_entries(perm)
            if not mids or mids[-1] != descriptor.j:
                continue
        yield perm


def count_class(descriptor: ClassDescriptor) -> int:
    """Exact cardinality of the described class."""
    return sum(1 for _ in enumerate_class(descriptor))


def count_start_small_123_avoiders(n: int) -> int:
    """
    Number of start-small 123-avoiding permutations of [n].

    >>> [count_start_small_123_avoiders(n) for n in range(1, 6)]
    [0, 1, 3, 9, 28]
    """
    if n < 1:
        raise ValueError("length n must be >= 1")
    return sum(1 for p in enumerate_avoiders(n, [PATTERN_123]) if is_start_small(p))
