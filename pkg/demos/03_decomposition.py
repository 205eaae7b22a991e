#!/usr/bin/env python3
# The decomposition step and the iterated map, on the two worked examples.
#
# decompose() splits a start-small {1243, 2134}-avoider at its last mid-123
# entry b: the smallest earlier entry a and the unique later entry c above b
# are the witnesses.  The second output absorbs a and the tail after b; the
# first absorbs the head and c, with a staircase repair when b is not key.

from avoiders import (
    decompose,
    format_perm,
    format_perm_list,
    inverse_params,
    parse_perm,
    phi,
    phi_inverse,
    recompose,
)

for text in (
    "11 2 12 9 7 8 4 5 6 1 10 3",       # b is key: no repair needed
    "13 16 12 3 15 8 9 10 11 7 6 5 2 1 14 4",  # b is not key: r = 3 entries drop
):
    perm = parse_perm(text)
    step = decompose(perm)
    print("input: ", format_perm(perm))
    print("  witnesses: b =", step.b_value, " a =", step.a_value, " c =", step.c_value,
          " at j =", step.j, " key case:", step.key_case, " dropped:", step.r)
    print("  sigma1:", format_perm(step.sigma1))
    print("  sigma2:", format_perm(step.sigma2))

    # The inverse reads every parameter back off the pair alone.
    params = inverse_params(step.sigma1, step.sigma2)
    print("  inverse parameters:", params)
    rebuilt = recompose(step.sigma1, step.sigma2)
    print("  recompose returns the input:", rebuilt == perm)
    print()

# Iterating the step peels off one 123-avoider per key mid-123 entry.
for text in ("1 2 3 4 5", "3 4 1 2", "13 16 12 3 15 8 9 10 11 7 6 5 2 1 14 4"):
    perm = parse_perm(text)
    elements = phi(perm)
    print(f"phi({text}) = {format_perm_list(elements)}")
    print("  lengths:", [len(e) for e in elements],
          " fold back:", phi_inverse(elements) == perm)
