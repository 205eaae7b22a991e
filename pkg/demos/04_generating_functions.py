#!/usr/bin/env python3
# Exact generating functions, two independent routes to the same sequence.
#
# Route one composes combinatorial pieces: the Catalan series C, the cube
# C^3 (start-small 123-avoiders, shifted), the list transform 1/(1 - x*C^3),
# and a final tidy-up to G and F = G/(1-x).  Route two expands a closed form
# with an exact square root.  They must agree coefficient by coefficient.

from avoiders import (
    catalan_series,
    count_avoiders,
    gf_full,
    gf_start_small,
    integer_coefficients,
    invert_transform,
    kotesovec_series,
    poly,
    sqrt_one_minus_4x,
)
from avoiders.perms import AVOIDED_PAIR

ORDER = 20

c = catalan_series(ORDER)
print("Catalan:", integer_coefficients(c)[:9])

cube = integer_coefficients(c * c * c)
print("C^3:    ", cube[:9], " (start-small 123-avoiders of [n+2])")

lists = invert_transform(poly(ORDER, 0, 1) * c * c * c)
print("lists:  ", integer_coefficients(lists)[:9], " (lists of them, by total size)")

g = gf_start_small(ORDER)
f = gf_full(ORDER)
print("G:      ", integer_coefficients(g)[:9], " (start-small avoiders of the pair)")
print("F:      ", integer_coefficients(f)[:9], " (all avoiders of the pair, A164651)")

closed = kotesovec_series(ORDER)
print("closed: ", integer_coefficients(closed)[:9])
print("routes agree to order", ORDER, "->", f == closed)

# The square root driving the closed form really squares back.
s = sqrt_one_minus_4x(ORDER)
print("sqrt(1-4x)^2 == 1-4x ->", s * s == poly(ORDER, 1, -4))

# And the low coefficients match brute force.
brute = [1] + [count_avoiders(n, AVOIDED_PAIR) for n in range(1, 8)]
print("brute force n<=7:", brute, "->", brute == integer_coefficients(f)[:8])
