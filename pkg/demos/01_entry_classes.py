#!/usr/bin/env python3
# A tour of the entry classifications everything else is built on.
#
# We dissect one 12-entry permutation: find its right-to-left maxima, its
# mid-123 entries (entries that can play the middle of an ascending triple),
# and the key mid-123 entries among them.

from avoiders import (
    contains,
    is_start_small,
    key_mid123_entries,
    mid123_entries,
    parse_perm,
    right_to_left_maxima,
    standardize,
)

perm = parse_perm("11 2 12 9 7 8 4 5 6 1 10 3")
print("permutation:", perm)

# It avoids both forbidden patterns...
print("contains 1243?", contains(perm, (1, 2, 4, 3)))
print("contains 2134?", contains(perm, (2, 1, 3, 4)))
# ...and does not start with 12, its largest entry.
print("start-small?", is_start_small(perm))

# Entries larger than everything to their right.
maxima = sorted(right_to_left_maxima(perm))
print("right-to-left maxima at positions:", maxima)
print("  values:", [perm[t - 1] for t in maxima])

# Entries flanked by something smaller before and something larger after.
mids = mid123_entries(perm)
print("mid-123 entries at positions:", mids)
print("  values:", [perm[t - 1] for t in mids])

# The key ones: predecessor smaller, or predecessor a right-to-left maximum.
keys = key_mid123_entries(perm)
print("key mid-123 entries at positions:", keys)
print("  values:", [perm[t - 1] for t in keys])

# Standardization squeezes any word of distinct values onto 1..n while
# keeping the relative order; it is how the decomposition builds its outputs.
print("standardize(2 1 10 3) =", standardize((2, 1, 10, 3)))
