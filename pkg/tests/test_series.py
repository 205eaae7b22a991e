"""Exact series arithmetic and the generating-function identities."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from avoiders.enumeration import (
    ClassDescriptor,
    count_avoiders,
    count_class,
    count_start_small_123_avoiders,
)
from avoiders.perms import AVOIDED_PAIR
from avoiders.series import (
    PowerSeries,
    catalan_series,
    counting_sequences,
    gf_full,
    gf_start_small,
    integer_coefficients,
    invert_transform,
    kotesovec_series,
    poly,
    sqrt_one_minus_4x,
)

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]

unit_series = st.lists(
    st.integers(min_value=-9, max_value=9), min_size=0, max_size=12
).map(lambda tail: poly(len(tail), 1, *tail))


# ---------------------------------------------------------------------------
# ring operations


def test_mul_polynomials():
    assert poly(4, 1, 1) * poly(4, 1, -1) == poly(4, 1, 0, -1)


def test_add_identity():
    s = poly(5, 3, 1, 4, 1, 5)
    assert s + poly(5) == s
    assert s - s == poly(5)


def test_mul_truncates_to_min_order():
    a = poly(8, 1, 1)
    b = poly(3, 1, 2, 3)
    assert (a * b).order == 3
    assert (a + b).order == 3


def test_catalan_square_shifts_catalan():
    # [x^n] C^2 = C_{n+1}, the convolution half of C = 1 + x*C^2
    c = catalan_series(9)
    assert integer_coefficients(c * c) == CATALAN[1:]


def test_reciprocal_geometric():
    assert integer_coefficients(poly(6, 1, -1).reciprocal()) == [1] * 7
    assert integer_coefficients(poly(6, 1, -2).reciprocal()) == [2**n for n in range(7)]


def test_reciprocal_requires_nonzero_constant():
    with pytest.raises(ValueError, match="constant term"):
        poly(4, 0, 1).reciprocal()


def test_reciprocal_of_nonunit_constant():
    half = poly(5, 2).reciprocal()
    assert half.coeffs[0] == Fraction(1, 2)
    assert poly(5, 2) * half == poly(5, 1)


@given(unit_series)
def test_reciprocal_is_involutive(series):
    assert series.reciprocal().reciprocal() == series


@given(unit_series, unit_series)
def test_mul_commutes(a, b):
    assert a * b == b * a


# ---------------------------------------------------------------------------
# the specific series


def test_sqrt_defining_identity():
    s = sqrt_one_minus_4x(30)
    assert s * s == poly(30, 1, -4)
    assert s.coeffs[0] == 1
    assert s.coeffs[1] == -2


def test_sqrt_encodes_catalan():
    # (1 - sqrt(1-4x)) / (2x) is the Catalan series
    s = sqrt_one_minus_4x(12)
    numer = poly(12, 1) - s
    assert numer.coeffs[0] == 0
    shifted = [c / 2 for c in numer.coeffs[1:]]
    assert shifted == list(catalan_series(11).coeffs)


def test_catalan_examples():
    assert integer_coefficients(catalan_series(6)) == [1, 1, 2, 5, 14, 42, 132]
    c = catalan_series(25)
    assert poly(25, 1) + poly(25, 0, 1) * c * c == c


def test_catalan_cube_counts_start_small_123_avoiders():
    c = catalan_series(9)
    cube = integer_coefficients(c * c * c)
    assert cube[:5] == [1, 3, 9, 28, 90]
    for n in range(1, 9):
        assert cube[n] == count_start_small_123_avoiders(n + 2)


def test_invert_transform_geometric():
    assert integer_coefficients(invert_transform(poly(6, 0, 1))) == [0] + [1] * 6


def test_invert_transform_two_part_sizes():
    # parts of size 1 and 2 compose like Fibonacci
    b = invert_transform(poly(6, 0, 1, 1))
    assert integer_coefficients(b) == [0, 1, 2, 3, 5, 8, 13]


def test_invert_transform_requires_zero_constant():
    with pytest.raises(ValueError, match="zero constant"):
        invert_transform(poly(4, 1, 1))


def test_invert_transform_counts_avoider_lists():
    # The transform of x*C^3 counts lists of start-small 123-avoiders by
    # total size (length - 1 per element); oracle is a composition-style
    # recursion over brute-force element counts.
    order = 8
    c = catalan_series(order)
    b = integer_coefficients(invert_transform(poly(order, 0, 1) * c * c * c))
    parts = {s: count_start_small_123_avoiders(s + 1) for s in range(1, order + 1)}
    lists_of_size = [1] + [0] * order
    for t in range(1, order + 1):
        lists_of_size[t] = sum(parts[s] * lists_of_size[t - s] for s in range(1, t + 1))
    assert b[0] == 0
    for n in range(1, order + 1):
        assert b[n] == lists_of_size[n]


def test_gf_start_small_first_terms():
    assert integer_coefficients(gf_start_small(3)) == [1, 0, 1, 4]


@pytest.mark.parametrize("n", range(2, 9))
def test_gf_start_small_matches_enumeration(n):
    counted = count_class(ClassDescriptor(n, AVOIDED_PAIR, start_small_only=True))
    assert integer_coefficients(gf_start_small(n))[n] == counted


def test_gf_full_first_terms():
    assert integer_coefficients(gf_full(6)) == [1, 1, 2, 6, 22, 87, 354]


def test_gf_full_is_partial_sums():
    order = 40
    g = gf_start_small(order)
    f = gf_full(order)
    assert f * poly(order, 1, -1) == g
    u = integer_coefficients(f)
    v = integer_coefficients(g)
    for n in range(1, order + 1):
        assert v[n] == u[n] - u[n - 1]


@pytest.mark.parametrize("n", range(1, 9))
def test_gf_full_matches_enumeration(n):
    assert integer_coefficients(gf_full(n))[n] == count_avoiders(n, AVOIDED_PAIR)


def test_closed_form_first_terms():
    assert integer_coefficients(kotesovec_series(6)) == [1, 1, 2, 6, 22, 87, 354]


def test_closed_form_equals_transform_route_order_100():
    assert kotesovec_series(100) == gf_full(100)


def test_closed_form_coefficients_are_integers():
    integer_coefficients(kotesovec_series(60))  # raises on any non-integer


def test_counting_sequences():
    pair = counting_sequences(12)
    assert pair.u[:7] == (1, 1, 2, 6, 22, 87, 354)
    assert pair.v[:5] == (1, 0, 1, 4, 16)
    assert len(pair.u) == len(pair.v) == 13


def test_integer_coefficients_rejects_fractions():
    with pytest.raises(ValueError, match="not an integer"):
        integer_coefficients(poly(2, Fraction(1, 2)))


def test_poly_validation():
    with pytest.raises(ValueError, match="order"):
        poly(-1, 1)
    with pytest.raises(ValueError, match="more coefficients"):
        poly(1, 1, 2, 3)
    with pytest.raises(ValueError, match="constant term"):
        PowerSeries(())
