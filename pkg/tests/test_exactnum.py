import random
from fractions import Fraction

import pytest

from exceptions import InexactDivision
from services.exactnum import (
    LaurentPoly, bracket, format_int, format_poly, format_rational, parse_int, parse_poly, parse_rational,
    poly_eval_at_one, poly_substitute_power, q_integer, quantum_integer, ring_div,
)

q = LaurentPoly.monomial(1)


def test_quantum_integer_is_symmetric():
    assert format_poly(quantum_integer(3)) == 'q^(-1) + 1 + q'
    assert format_poly(quantum_integer(2)) == 'q^(-1/2) + q^(1/2)'
    assert quantum_integer(0).is_zero()
    assert quantum_integer(1) == 1


def test_bracket_of_negative_integer():
    assert bracket(-3) == -quantum_integer(3)


def test_quantum_integer_at_one():
    for n in range(8):
        assert quantum_integer(n).evaluate_at_one() == n


def test_q_integer():
    assert format_poly(q_integer(3)) == '1 + q + q^2'


def test_arithmetic_mixes_scalars():
    p = 1 + q
    assert p * p == 1 + 2 * q + q * q
    assert p - 1 == q
    assert 2 - p == 1 - q
    assert (p ** 3).coefficient(2) == 3


def test_exact_division():
    p = (1 + q) * (1 + q + q * q)
    assert p.exact_div(1 + q) == 1 + q + q * q
    assert ring_div(p, q_integer(3)) == 1 + q
    half = LaurentPoly.monomial(Fraction(1, 2))
    assert (half * p).exact_div(half) == p


def test_inexact_division_raises():
    with pytest.raises(InexactDivision):
        (1 + q * q).exact_div(1 + q)
    with pytest.raises(InexactDivision):
        ring_div(7, 2)


def test_ring_div_on_integers():
    assert ring_div(-12, 4) == -3


def test_substitute_and_reflect():
    t = LaurentPoly.monomial(1, var='t')
    p = t + 2 * LaurentPoly.monomial(-3, var='t')
    assert p.substitute_power(2) == LaurentPoly.monomial(2, var='t') + 2 * LaurentPoly.monomial(-6, var='t')
    assert (t + t.reflect()).is_palindromic()
    assert not p.is_palindromic()


def test_variables_do_not_mix():
    with pytest.raises(ValueError):
        q + LaurentPoly.monomial(1, var='t')


def test_exponent_grid():
    assert LaurentPoly.monomial(Fraction(3, 4)).max_exponent() == Fraction(3, 4)
    with pytest.raises(ValueError):
        LaurentPoly.monomial(Fraction(1, 3))


def test_is_polynomial():
    assert (1 + q).is_polynomial()
    assert not LaurentPoly.monomial(-1).is_polynomial()
    assert not LaurentPoly.monomial(Fraction(1, 2)).is_polynomial()


@pytest.mark.parametrize('text', [
    '1 + q',
    '1 + q + q^2',
    'q^(-1/2)',
    '-3*q^(1/4) + 2',
    '1/2*q^(-3) - q^5',
])
def test_poly_text(text):
    p = parse_poly(text)
    assert parse_poly(format_poly(p)) == p


def test_format_poly_is_canonical():
    assert format_poly(parse_poly('q^2 + 1 + q')) == '1 + q + q^2'
    assert format_poly(-q) == '-q'
    assert format_poly(LaurentPoly({}, 'q')) == '0'


def test_parse_poly_rejects_garbage():
    with pytest.raises(ValueError):
        parse_poly('1 + x')
    with pytest.raises(ValueError):
        parse_poly('q^^2')


def test_scalar_text():
    assert parse_int(' -42 ') == -42
    assert format_rational(Fraction(6, 4)) == '3/2'
    assert parse_rational('10/5') == 2
    with pytest.raises(ValueError):
        parse_int('4.0')


def test_eval_at_one():
    assert poly_eval_at_one(1 + q + q * q) == 3
    assert poly_eval_at_one(LaurentPoly({}, 'q')) == 0
    assert poly_eval_at_one(quantum_integer(5)) == 5
    assert poly_eval_at_one(Fraction(3, 2)) == Fraction(3, 2)


def test_poly_substitute_power():
    t = LaurentPoly.monomial(1, var='t')
    assert poly_substitute_power(t + t.reflect(), 3) == t ** 3 + (t ** 3).reflect()
    assert poly_substitute_power(5, 4) == 5
    with pytest.raises(ValueError):
        poly_substitute_power(t, 0)


def random_poly(rng):
    pairs = [(Fraction(rng.randint(-8, 8), 2), rng.randint(-3, 3)) for _ in range(rng.randint(0, 4))]
    return LaurentPoly.from_terms(pairs)


def test_ring_axioms():
    rng = random.Random(2024)
    for _ in range(50):
        p, r, s = random_poly(rng), random_poly(rng), random_poly(rng)
        assert (p + r) + s == p + (r + s)
        assert p * (r + s) == p * r + p * s
        assert p * r == r * p
        if not r.is_zero():
            assert (p * r).exact_div(r) == p


def test_format_int():
    assert format_int(-7) == '-7'
    assert parse_int(format_int(10 ** 30)) == 10 ** 30
