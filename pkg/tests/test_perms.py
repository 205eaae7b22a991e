"""Entry-level predicates: standardization, containment, entry classes."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from avoiders.perms import (
    AVOIDED_PAIR,
    PATTERN_123,
    contains,
    contains_123,
    format_perm,
    is_permutation,
    is_start_small,
    key_mid123_entries,
    mid123_entries,
    parse_perm,
    right_to_left_maxima,
    standardize,
)

distinct_words = st.lists(
    st.integers(min_value=1, max_value=10**6), min_size=1, max_size=40, unique=True
)


def naive_contains(word, pattern):
    """Independent containment oracle: try every subsequence."""
    return any(
        standardize(sub) == tuple(pattern)
        for sub in itertools.combinations(word, len(pattern))
    )


# ---------------------------------------------------------------------------
# standardize


def test_standardize_examples():
    assert standardize((2, 1, 10, 3)) == (2, 1, 4, 3)
    assert standardize((1, 2, 3)) == (1, 2, 3)
    assert standardize((16, 19, 15, 6, 18, 11, 12, 13, 17, 3, 2, 1)) == (
        9, 12, 8, 4, 11, 5, 6, 7, 10, 3, 2, 1,
    )


def test_standardize_rejects_duplicates():
    with pytest.raises(ValueError, match="duplicates"):
        standardize((1, 2, 2))


@given(distinct_words)
def test_standardize_idempotent_and_order_isomorphic(word):
    out = standardize(word)
    assert is_permutation(out)
    assert standardize(out) == out
    for i in range(len(word)):
        for j in range(i + 1, len(word)):
            assert (word[i] < word[j]) == (out[i] < out[j])


# ---------------------------------------------------------------------------
# containment


def test_contains_examples():
    assert contains((1, 2, 4, 3), (1, 2, 4, 3))
    assert not contains((3, 4, 1, 2), PATTERN_123)
    worked = parse_perm("11 2 12 9 7 8 4 5 6 1 10 3")
    assert not contains(worked, (1, 2, 4, 3))
    assert not contains(worked, (2, 1, 3, 4))


def test_contains_degenerate_patterns():
    assert contains((1,), (1,))
    assert not contains((1, 2), (1, 2, 3))


@pytest.mark.parametrize("n", range(1, 6))
def test_contains_matches_naive_oracle(n):
    patterns = [q for m in (2, 3, 4) for q in itertools.permutations(range(1, m + 1))]
    for perm in itertools.permutations(range(1, n + 1)):
        for q in patterns:
            assert contains(perm, q) == naive_contains(perm, q), (perm, q)


def test_contains_123_matches_generic():
    for n in range(1, 7):
        for perm in itertools.permutations(range(1, n + 1)):
            assert contains_123(perm) == contains(perm, PATTERN_123)
    # also on words that are not permutations of an interval
    assert contains_123((6, 11, 40, 2))
    assert not contains_123((40, 6, 11, 2))


def test_contains_monotone_under_prefix_extension():
    # Once a prefix contains a pattern, every longer prefix does too,
    # exhaustively for n <= 7 and all patterns of length <= 4.
    patterns = [
        q for m in (1, 2, 3, 4) for q in itertools.permutations(range(1, m + 1))
    ]
    for n in range(1, 8):
        for perm in itertools.permutations(range(1, n + 1)):
            for q in patterns:
                flags = [contains(perm[:k], q) for k in range(len(q), n + 1)]
                assert flags == sorted(flags), (perm, q)


# ---------------------------------------------------------------------------
# entry classes


def test_right_to_left_maxima_examples():
    assert right_to_left_maxima((3, 2, 1)) == {1, 2, 3}
    assert right_to_left_maxima((1, 3, 4, 5, 2, 6)) == {6}
    worked = parse_perm("13 16 12 3 15 8 9 10 11 7 6 5 2 1 14 4")
    assert right_to_left_maxima(worked) == {2, 5, 15, 16}


def test_mid123_entries_examples():
    assert mid123_entries((1, 3, 4, 5, 2, 6)) == [2, 3, 4, 5]  # entries 3, 4, 5, 2
    assert mid123_entries((3, 2, 1)) == []
    assert mid123_entries((1, 2, 3)) == [2]


def test_key_mid123_entries_examples():
    # of the mid-123 entries 3, 4, 5, 2 only the first three are key
    assert key_mid123_entries((1, 3, 4, 5, 2, 6)) == [2, 3, 4]
    key_example = parse_perm("11 2 12 9 7 8 4 5 6 1 10 3")
    assert mid123_entries(key_example)[-1] in key_mid123_entries(key_example)
    drop_example = parse_perm("13 16 12 3 15 8 9 10 11 7 6 5 2 1 14 4")
    assert mid123_entries(drop_example)[-1] not in key_mid123_entries(drop_example)


@pytest.mark.parametrize("n", range(1, 8))
def test_key_entries_are_mid_entries(n):
    for perm in itertools.permutations(range(1, n + 1)):
        mids = mid123_entries(perm)
        keys = key_mid123_entries(perm)
        assert set(keys) <= set(mids)
        assert keys == sorted(keys)


@pytest.mark.parametrize("n", range(1, 9))
def test_mid123_nonempty_iff_contains_123(n):
    for perm in itertools.permutations(range(1, n + 1)):
        assert bool(mid123_entries(perm)) == contains(perm, PATTERN_123)


@pytest.mark.parametrize("n", range(1, 9))
def test_no_key_entries_implies_no_mid_entries(n):
    for perm in itertools.permutations(range(1, n + 1)):
        if not key_mid123_entries(perm):
            assert not mid123_entries(perm)


def test_is_start_small():
    assert is_start_small((3, 4, 1, 2))
    assert not is_start_small((1,))
    assert not is_start_small((2, 1))
    assert is_start_small((1, 2))


# ---------------------------------------------------------------------------
# text format


def test_parse_and_format_roundtrip():
    text = "11 2 12 9 7 8 4 5 6 1 10 3"
    assert format_perm(parse_perm(text)) == text


@pytest.mark.parametrize(
    "bad",
    ["", "1 2 2", "0 1 2", "1 3", "1 two 3", "5 4 3 2"],
)
def test_parse_rejects_invalid(bad):
    with pytest.raises(ValueError):
        parse_perm(bad)


def test_avoided_pair_constants():
    assert AVOIDED_PAIR == ((1, 2, 4, 3), (2, 1, 3, 4))
    for q in AVOIDED_PAIR:
        assert is_permutation(q)
