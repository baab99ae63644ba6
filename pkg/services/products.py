"""
Product formulas
Box products, simplex products, hyperfactorials and double factorials, their
q-analogues, and the closed counting formulas for each symmetry class
"""
import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from sympy import integer_nthroot

from exceptions import DimensionError, InvariantViolation
from services.exactnum import LaurentPoly, bracket, q_integer

logger = logging.getLogger(__name__)

# Sentinel for an unbounded box dimension
INFINITE = float('inf')


@dataclass(frozen=True)
class BoxDims:
    """An a x b x c box; the hatted sums are derived on access"""
    a: int
    b: int
    c: int

    def __post_init__(self):
        for name in ('a', 'b', 'c'):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 1:
                raise DimensionError(f'Box side {name} must be a positive integer, got {value!r}')

    @property
    def a_hat(self):
        return self.b + self.c

    @property
    def b_hat(self):
        return self.a + self.c

    @property
    def c_hat(self):
        return self.a + self.b

    @property
    def d(self):
        return self.a + self.b + self.c

    @property
    def volume(self):
        return self.a * self.b * self.c

    def as_tuple(self):
        return (self.a, self.b, self.c)

    def __str__(self):
        return f'{self.a}x{self.b}x{self.c}'


def _sum_counts(dims, n):
    """
    Multiplicity of each coordinate sum over the box

    Infinite sides are cut at max(n, 0): beyond that every factor is 1.
    """
    counts = Counter({0: 1})
    for side in dims:
        if side == INFINITE:
            extent = max(n, 0)
        elif isinstance(side, int) and side >= 1:
            extent = side
        else:
            raise DimensionError(f'Box product sides must be positive integers or INFINITE, got {side!r}')
        merged = Counter()
        for total, mult in counts.items():
            for x in range(extent):
                merged[total + x] += mult
        counts = merged
    return counts


def box_product(dims, n):
    """
    C(a_1, ..., a_k; n): product of max(n - sum(x), 1) over the integer box

    Args:
        dims: sequence of positive integers or INFINITE
        n: any integer

    Returns:
        int: the exact product
    """
    result = 1
    for total, mult in _sum_counts(dims, n).items():
        factor = n - total
        if factor > 1:
            result *= factor ** mult
    return result


def box_product_q(dims, n):
    """q-analogue of box_product with (m)_q in place of m"""
    result = LaurentPoly.constant(1)
    for total, mult in _sum_counts(dims, n).items():
        factor = n - total
        if factor > 1:
            result = result * q_integer(factor) ** mult
    return result


def box_product_bracket(dims, n):
    """Symmetric q-analogue with the bracket [m] in place of m"""
    result = LaurentPoly.constant(1)
    for total, mult in _sum_counts(dims, n).items():
        factor = n - total
        if factor > 1:
            result = result * bracket(factor) ** mult
    return result


@lru_cache(maxsize=None)
def simplex_product(k, n):
    """
    T(k, n), evaluated through T(k, n) = T(k-1, n) T(k, n-1)

    T(0, n) = n, T(k, 0) = 1, and T = 1 outside that range.
    """
    if k < 0 or n <= 0:
        return 1
    if k == 0:
        return n
    result = 1
    for m in range(1, n + 1):
        result *= simplex_product(k - 1, m)
    return result


@lru_cache(maxsize=None)
def simplex_product_q(k, n):
    if k < 0 or n <= 0:
        return LaurentPoly.constant(1)
    if k == 0:
        return q_integer(n)
    result = LaurentPoly.constant(1)
    for m in range(1, n + 1):
        result = result * simplex_product_q(k - 1, m)
    return result


def hyperfactorial(n):
    """H(n) = 1! 2! ... (n-1)! = T(2, n-1)"""
    if n < 1:
        raise ValueError(f'hyperfactorial needs n >= 1, got {n}')
    return simplex_product(2, n - 1)


def odd_double_factorial(n):
    """n!! = n (n-2) ... 1 for odd n"""
    if n < 1 or n % 2 == 0:
        raise ValueError(f'odd_double_factorial needs an odd positive integer, got {n}')
    result = 1
    for factor in range(n, 0, -2):
        result *= factor
    return result


def inclusion_exclusion_box(a, b, c, n):
    """Right side of C(a,b,c;n) = T(3,n) T(3,n-a-b) ... / (T(3,n-a) ...)"""
    T = simplex_product
    numerator = T(3, n) * T(3, n - a - b) * T(3, n - a - c) * T(3, n - b - c)
    denominator = T(3, n - a) * T(3, n - b) * T(3, n - c) * T(3, n - a - b - c)
    return _exact_quotient(numerator, denominator, 'inclusion-exclusion')


def _exact_quotient(numerator, denominator, label):
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise InvariantViolation(f'{label}: {numerator} / {denominator} is not exact')
    return quotient


def exact_root(value, k, label):
    value = Fraction(value)
    if value.denominator != 1 or value < 0:
        raise InvariantViolation(f'{label}: radicand {value} is not a non-negative integer')
    root, exact = integer_nthroot(value.numerator, k)
    if not exact:
        raise InvariantViolation(f'{label}: radicand {value} has no exact root of order {k}')
    return int(root)


def count_pp_formula(dims):
    """
    MacMahon's count N(a,b,c), computed as the box-product quotient and as
    Propp's hyperfactorial form; the two must agree
    """
    a, b, c = dims.as_tuple()
    macmahon = _exact_quotient(
        box_product([a, b, c], dims.d - 1),
        box_product([a, b, c], dims.d - 2),
        f'MacMahon quotient for {dims}',
    )
    H = hyperfactorial
    propp = _exact_quotient(
        H(a + b + c) * H(a) * H(b) * H(c),
        H(a + b) * H(a + c) * H(b + c),
        f'hyperfactorial form for {dims}',
    )
    if macmahon != propp:
        raise InvariantViolation(f'MacMahon {macmahon} and Propp {propp} disagree for {dims}')
    return macmahon


def count_pp_chain(dims):
    """N = C(c^,b^,a^;d-1) / (C(c^,b^,a^;d-2) C(a,b;c^-1) C(a,c;b^-1) C(b,c;a^-1))"""
    a, b, c = dims.as_tuple()
    hats = [dims.c_hat, dims.b_hat, dims.a_hat]
    denominator = (
        box_product(hats, dims.d - 2)
        * box_product([a, b], dims.c_hat - 1)
        * box_product([a, c], dims.b_hat - 1)
        * box_product([b, c], dims.a_hat - 1)
    )
    return _exact_quotient(box_product(hats, dims.d - 1), denominator, f'closing chain for {dims}')


def count_pp_formula_q(dims):
    """N(a,b,c)_q = T(2,d-1)_q T(2,a-1)_q T(2,b-1)_q T(2,c-1)_q / prod T(2,hat-1)_q"""
    Tq = simplex_product_q
    a, b, c = dims.as_tuple()
    numerator = Tq(2, dims.d - 1) * Tq(2, a - 1) * Tq(2, b - 1) * Tq(2, c - 1)
    denominator = Tq(2, dims.c_hat - 1) * Tq(2, dims.b_hat - 1) * Tq(2, dims.a_hat - 1)
    result = numerator.exact_div(denominator)
    if not result.is_polynomial() or result.coefficient(0) != 1:
        raise InvariantViolation(f'q-count for {dims} is not a polynomial with constant term 1')
    return result


def count_tcpp_formula(a, b):
    """
    N_kt(a,a,2b) = sqrt(N(a,a,2b) (2a-1)!! (2b-1)!! / (2a+2b-1)!!)

    The deleted edge row has weight product (2a-1)!!; the swap-fixed weight
    vectors carry ((2a+2b-1)!! / (2b-1)!!)^2 of the D map.
    """
    if a < 1 or b < 1:
        raise DimensionError(f'count_tcpp_formula needs a, b >= 1, got ({a}, {b})')
    radicand = Fraction(
        count_pp_formula(BoxDims(a, a, 2 * b)) * odd_double_factorial(2 * b - 1) * odd_double_factorial(2 * a - 1),
        odd_double_factorial(2 * a + 2 * b - 1),
    )
    return exact_root(radicand, 2, f'TCPP formula at a={a}, b={b}')


def count_tcpp_formula_box(a, c):
    """TCPP count of the a x a x c box; zero when c is odd"""
    if c % 2:
        return 0
    return count_tcpp_formula(a, c // 2)


def count_cspp_formula(a):
    """N_rho(a,a,a) = cube root of N(a,a,a) prod (3i-1)^2 / (3i-2)^2"""
    if a < 1:
        raise DimensionError(f'count_cspp_formula needs a >= 1, got {a}')
    radicand = Fraction(count_pp_formula(BoxDims(a, a, a)))
    for i in range(1, a + 1):
        radicand *= Fraction((3 * i - 1) ** 2, (3 * i - 2) ** 2)
    return exact_root(radicand, 3, f'CSPP formula at a={a}')
