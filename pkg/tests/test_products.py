from itertools import product

import pytest

from exceptions import DimensionError
from services.exactnum import parse_poly
from services.products import (
    INFINITE, BoxDims, box_product, box_product_bracket, box_product_q, count_cspp_formula, count_pp_chain,
    count_pp_formula, count_pp_formula_q, count_tcpp_formula, count_tcpp_formula_box, hyperfactorial,
    inclusion_exclusion_box, odd_double_factorial, simplex_product, simplex_product_q,
)


def test_box_dims():
    dims = BoxDims(2, 2, 3)
    assert (dims.a_hat, dims.b_hat, dims.c_hat, dims.d) == (5, 5, 4, 7)
    assert str(dims) == '2x2x3'
    with pytest.raises(DimensionError):
        BoxDims(0, 1, 1)


def test_box_product_small():
    assert box_product([2, 2], 3) == 12
    assert box_product([1, 1], 1) == 1
    assert box_product([2, 3], 4) == 4 * 3 * 2 * 3 * 2 * 1
    assert box_product([3], -2) == 1


def test_simplex_product_small():
    assert simplex_product(0, 5) == 5
    assert simplex_product(1, 4) == 24
    assert simplex_product(2, 3) == 12
    assert simplex_product(3, 0) == 1
    assert simplex_product(-1, 7) == 1


def test_hyperfactorial_and_double_factorial():
    assert hyperfactorial(1) == 1
    assert hyperfactorial(4) == 12
    assert odd_double_factorial(7) == 105
    with pytest.raises(ValueError):
        odd_double_factorial(4)


@pytest.mark.parametrize('n', range(-1, 9))
def test_infinite_box_is_simplex(n):
    assert box_product([INFINITE] * 3, n) == simplex_product(3, n)
    assert box_product([INFINITE, INFINITE], n) == simplex_product(2, n)


def test_inclusion_exclusion():
    for a, b, c in product(range(1, 5), repeat=3):
        for n in range(13):
            assert inclusion_exclusion_box(a, b, c, n) == box_product([a, b, c], n)


@pytest.mark.parametrize('sides, expected', [
    ((1, 1, 1), 2),
    ((1, 1, 2), 3),
    ((2, 2, 2), 20),
    ((3, 3, 3), 980),
    ((4, 4, 4), 232848),
])
def test_pp_formula_spot_values(sides, expected):
    assert count_pp_formula(BoxDims(*sides)) == expected


def test_closing_chain():
    for sides in product(range(1, 6), repeat=3):
        dims = BoxDims(*sides)
        assert count_pp_chain(dims) == count_pp_formula(dims)


def test_pp_formula_is_symmetric():
    assert count_pp_formula(BoxDims(1, 2, 3)) == count_pp_formula(BoxDims(3, 1, 2))


def test_q_formula():
    assert count_pp_formula_q(BoxDims(1, 1, 1)) == parse_poly('1 + q')
    assert count_pp_formula_q(BoxDims(1, 1, 2)) == parse_poly('1 + q + q^2')
    for sides in product(range(1, 4), repeat=3):
        dims = BoxDims(*sides)
        qcount = count_pp_formula_q(dims)
        assert qcount.evaluate_at_one() == count_pp_formula(dims)
        assert qcount.max_exponent() == dims.volume


def test_q_products_specialize():
    for n in range(-1, 8):
        assert box_product_q([2, 3], n).evaluate_at_one() == box_product([2, 3], n)
        assert box_product_bracket([2, 3], n).evaluate_at_one() == box_product([2, 3], n)
        assert simplex_product_q(2, n).evaluate_at_one() == simplex_product(2, n)


@pytest.mark.parametrize('a, b, expected', [
    (1, 1, 1), (1, 2, 1), (1, 3, 1), (2, 1, 2), (2, 2, 3), (3, 1, 5), (3, 2, 14), (4, 1, 14), (4, 2, 84),
])
def test_tcpp_formula_values(a, b, expected):
    assert count_tcpp_formula(a, b) == expected


def test_tcpp_formula():
    assert count_tcpp_formula_box(2, 3) == 0
    assert count_tcpp_formula_box(1, 2) == 1


def test_cspp_formula():
    assert [count_cspp_formula(a) for a in range(1, 5)] == [2, 5, 20, 132]


def test_box_product_fixture():
    assert box_product([6, 4], 7) == 5040 * 720 * 120 * 24


@pytest.mark.parametrize('a, b, c', list(product(range(1, 5), repeat=3)))
def test_box_product_is_a_quotient_of_infinite_boxes(a, b, c):
    for n in range(13):
        tail = box_product([INFINITE, b, c], n - a)
        assert box_product([a, b, c], n) * tail == box_product([INFINITE, b, c], n)
