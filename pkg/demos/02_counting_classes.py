#!/usr/bin/env python3
# Counting avoidance classes by exhaustive generation.
#
# The generator builds permutations position by position and abandons any
# prefix that already contains a forbidden pattern, so whole subtrees of the
# search space disappear at once.  Every count here is exact.

from avoiders import (
    AVOIDED_PAIR,
    ClassDescriptor,
    count_avoiders,
    count_class,
    count_start_small_123_avoiders,
    enumerate_avoiders,
)

print("permutations of [4] avoiding 1243 and 2134:")
for perm in enumerate_avoiders(4, AVOIDED_PAIR):
    print(" ", perm)

print("\ncounts for n = 1..8:")
for n in range(1, 9):
    print(f"  n={n}: {count_avoiders(n, AVOIDED_PAIR)}")

print("\nthe same, restricted to start-small permutations:")
for n in range(1, 9):
    descriptor = ClassDescriptor(n, AVOIDED_PAIR, start_small_only=True)
    print(f"  n={n}: {count_class(descriptor)}")

# Slicing finer: fix the number of key mid-123 entries (k) and the position
# of the last mid-123 entry (j).  These cells are what the decomposition
# maps product-style.
print("\nstart-small avoiders of [6] by (k, j):")
for k in range(1, 5):
    for j in range(k + 1, 6):
        size = count_class(
            ClassDescriptor(6, AVOIDED_PAIR, start_small_only=True, k=k, j=j)
        )
        if size:
            print(f"  k={k}, j={j}: {size}")

# 123-avoiders are Catalan-counted; the start-small ones drop a Catalan step.
print("\nstart-small 123-avoiders:")
for n in range(1, 9):
    print(f"  n={n}: {count_start_small_123_avoiders(n)}")
