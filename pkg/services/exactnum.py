"""
Exact scalar rings
Arbitrary-precision integers (Python int), reduced rationals (Fraction) and
Laurent polynomials in a single tagged variable with fractional exponents
"""
import re
from fractions import Fraction

from exceptions import InexactDivision

# Exponents are stored as integer multiples of 1/EXPONENT_SCALE.  The quantum
# tensor rule multiplies by q^(weight/4), so quarter steps are the finest grid.
EXPONENT_SCALE = 4

VARIABLES = ('q', 't')


def _normalize(value):
    """Collapse integral fractions to int so the hot loops stay on ints"""
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    return value


def _scaled(exponent):
    scaled = Fraction(exponent) * EXPONENT_SCALE
    if scaled.denominator != 1:
        raise ValueError(f'Exponent {exponent} is not a multiple of 1/{EXPONENT_SCALE}')
    return scaled.numerator


class LaurentPoly:
    """Immutable Laurent polynomial with rational coefficients"""

    __slots__ = ('_var', '_terms', '_hash')

    def __init__(self, terms=None, var='q'):
        """
        Build a polynomial from scaled exponents

        Args:
            terms: mapping from scaled exponent (exponent * EXPONENT_SCALE) to coefficient
            var: variable tag, one of VARIABLES
        """
        if var not in VARIABLES:
            raise ValueError(f'Unknown variable tag: {var}')
        cleaned = {}
        for key, coeff in (terms or {}).items():
            if not isinstance(key, int):
                raise TypeError('Scaled exponents must be integers')
            coeff = _normalize(coeff)
            if coeff:
                cleaned[key] = coeff
        self._var = var
        self._terms = cleaned
        self._hash = None

    # Constructors

    @classmethod
    def constant(cls, value, var='q'):
        return cls({0: value}, var)

    @classmethod
    def monomial(cls, exponent, coeff=1, var='q'):
        return cls({_scaled(exponent): coeff}, var)

    @classmethod
    def from_terms(cls, pairs, var='q'):
        """Build from (exponent, coefficient) pairs, summing repeated exponents"""
        acc = {}
        for exponent, coeff in pairs:
            key = _scaled(exponent)
            acc[key] = acc.get(key, 0) + coeff
        return cls(acc, var)

    # Inspection

    @property
    def var(self):
        return self._var

    def is_zero(self):
        return not self._terms

    def scaled_items(self):
        """(scaled exponent, coefficient) pairs in ascending exponent order"""
        return sorted(self._terms.items())

    def terms(self):
        """(exponent, coefficient) pairs in ascending exponent order"""
        return [(Fraction(key, EXPONENT_SCALE), coeff) for key, coeff in self.scaled_items()]

    def coefficient(self, exponent):
        return self._terms.get(_scaled(exponent), 0)

    def min_exponent(self):
        return Fraction(min(self._terms), EXPONENT_SCALE) if self._terms else None

    def max_exponent(self):
        return Fraction(max(self._terms), EXPONENT_SCALE) if self._terms else None

    def is_monomial(self):
        return len(self._terms) == 1

    def is_polynomial(self):
        """True when every exponent is a non-negative integer"""
        return all(key >= 0 and key % EXPONENT_SCALE == 0 for key in self._terms)

    def evaluate_at_one(self):
        return _normalize(sum((Fraction(c) for c in self._terms.values()), Fraction(0)))

    def substitute_power(self, k):
        """Replace the variable v by v**k"""
        if k < 1:
            raise ValueError('Substitution power must be at least 1')
        return LaurentPoly({key * k: coeff for key, coeff in self._terms.items()}, self._var)

    def reflect(self):
        """Negate every exponent"""
        return LaurentPoly({-key: coeff for key, coeff in self._terms.items()}, self._var)

    def is_palindromic(self):
        return self == self.reflect()

    # Arithmetic

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            if other._var != self._var:
                raise ValueError(f'Variable mismatch: {self._var} and {other._var}')
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.constant(other, self._var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for key, coeff in other._terms.items():
            acc[key] = acc.get(key, 0) + coeff
        return LaurentPoly(acc, self._var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({key: -coeff for key, coeff in self._terms.items()}, self._var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                key = k1 + k2
                acc[key] = acc.get(key, 0) + c1 * c2
        return LaurentPoly(acc, self._var)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError('Only non-negative integer powers are supported')
        result = LaurentPoly.constant(1, self._var)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def exact_div(self, divisor):
        """
        Exact division in the Laurent ring

        Args:
            divisor: non-zero LaurentPoly or scalar

        Returns:
            LaurentPoly: the quotient

        Raises:
            InexactDivision: when the division leaves a remainder
        """
        divisor = self._coerce(divisor)
        if divisor is NotImplemented or divisor.is_zero():
            raise ZeroDivisionError('Division by zero polynomial')
        if self.is_zero():
            return self
        top = max(divisor._terms)
        bottom = min(divisor._terms)
        lead = Fraction(divisor._terms[top])
        floor = min(self._terms) - bottom
        remainder = dict(self._terms)
        quotient = {}
        while remainder:
            high = max(remainder)
            shift = high - top
            if shift < floor:
                raise InexactDivision(f'{self} is not divisible by {divisor}')
            factor = _normalize(Fraction(remainder[high]) / lead)
            quotient[shift] = factor
            for key, coeff in divisor._terms.items():
                slot = key + shift
                value = remainder.get(slot, 0) - factor * coeff
                if value:
                    remainder[slot] = value
                else:
                    remainder.pop(slot, None)
        return LaurentPoly(quotient, self._var)

    # Comparison and formatting

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other, self._var)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._var == other._var and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._var, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f'LaurentPoly({format_poly(self)!r})'

    def __str__(self):
        return format_poly(self)


def ring_div(numerator, denominator):
    """
    Exact division for any scalar ring used by the engine

    Raises:
        InexactDivision: when the quotient does not exist in the ring
    """
    if isinstance(numerator, LaurentPoly):
        return numerator.exact_div(denominator)
    if isinstance(denominator, LaurentPoly):
        return LaurentPoly.constant(numerator, denominator.var).exact_div(denominator)
    if isinstance(numerator, int) and isinstance(denominator, int):
        quotient, remainder = divmod(numerator, denominator)
        if remainder:
            raise InexactDivision(f'{numerator} is not divisible by {denominator}')
        return quotient
    return _normalize(Fraction(numerator) / Fraction(denominator))


def is_zero(value):
    if isinstance(value, LaurentPoly):
        return value.is_zero()
    return value == 0


# Quantum and q-integers

def quantum_integer(n):
    """
    The bracket [n] = (q^(n/2) - q^(-n/2)) / (q^(1/2) - q^(-1/2))

    Args:
        n: non-negative integer

    Returns:
        LaurentPoly: q^((n-1)/2) + q^((n-3)/2) + ... + q^(-(n-1)/2)
    """
    if n < 0:
        raise ValueError(f'quantum_integer needs n >= 0, got {n}')
    half = EXPONENT_SCALE // 2
    return LaurentPoly({half * (n - 1) - EXPONENT_SCALE * m: 1 for m in range(n)})


def bracket(n):
    """Bracket of an arbitrary integer, [-n] = -[n]"""
    if n < 0:
        return -quantum_integer(-n)
    return quantum_integer(n)


def q_integer(n):
    """(n)_q = 1 + q + ... + q^(n-1)"""
    if n < 1:
        raise ValueError(f'q_integer needs n >= 1, got {n}')
    return LaurentPoly({EXPONENT_SCALE * m: 1 for m in range(n)})


def poly_eval_at_one(p):
    if isinstance(p, LaurentPoly):
        return p.evaluate_at_one()
    return _normalize(Fraction(p))


def poly_substitute_power(p, k):
    if isinstance(p, LaurentPoly):
        return p.substitute_power(k)
    if k < 1:
        raise ValueError('Substitution power must be at least 1')
    return p


# Text forms

def format_int(value):
    return str(int(value))


def parse_int(text):
    text = text.strip()
    if not re.fullmatch(r'[+-]?\d+', text):
        raise ValueError(f'Not an integer: {text!r}')
    return int(text)


def format_rational(value):
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f'{value.numerator}/{value.denominator}'


def parse_rational(text):
    text = text.strip()
    if not re.fullmatch(r'[+-]?\d+(/\d+)?', text):
        raise ValueError(f'Not a rational: {text!r}')
    return _normalize(Fraction(text))


def _format_exponent(var, exponent):
    if exponent == 0:
        return ''
    if exponent == 1:
        return var
    if exponent.denominator == 1 and exponent > 0:
        return f'{var}^{exponent.numerator}'
    return f'{var}^({format_rational(exponent)})'


def format_poly(p):
    """Canonical text: ascending exponents, e.g. '1 + q + q^2' or 'q^(-1/2)'"""
    if p.is_zero():
        return '0'
    pieces = []
    for exponent, coeff in p.terms():
        coeff = Fraction(coeff)
        mono = _format_exponent(p.var, exponent)
        magnitude = abs(coeff)
        if not mono:
            body = format_rational(magnitude)
        elif magnitude == 1:
            body = mono
        else:
            body = f'{format_rational(magnitude)}*{mono}'
        if not pieces:
            pieces.append(f'-{body}' if coeff < 0 else body)
        else:
            pieces.append(f'- {body}' if coeff < 0 else f'+ {body}')
    return ' '.join(pieces)


_TERM = re.compile(
    r'^(?:(?P<coef>\d+(?:/\d+)?)(?P<star>\*)?)?'
    r'(?P<var>[a-z])?'
    r'(?:\^(?:\((?P<pexp>-?\d+(?:/\d+)?)\)|(?P<exp>\d+)))?$'
)


def _split_terms(text):
    terms, depth, current = [], 0, ''
    for char in text:
        if char == '(':
            depth += 1
        elif char == ')':
            depth -= 1
        if char in '+-' and depth == 0 and current:
            terms.append(current)
            current = ''
        current += char
    if current:
        terms.append(current)
    return terms


def parse_poly(text, var='q'):
    """Inverse of format_poly"""
    compact = text.replace(' ', '')
    if compact == '0':
        return LaurentPoly({}, var)
    pairs = []
    for raw in _split_terms(compact):
        sign = -1 if raw.startswith('-') else 1
        body = raw.lstrip('+-')
        match = _TERM.match(body)
        if not body or not match or (match.group('var') and match.group('var') != var):
            raise ValueError(f'Cannot parse term {raw!r} of {text!r}')
        if match.group('var') is None and (match.group('exp') or match.group('pexp') or match.group('star')):
            raise ValueError(f'Cannot parse term {raw!r} of {text!r}')
        coeff = Fraction(match.group('coef')) if match.group('coef') else Fraction(1)
        if match.group('var') is None:
            exponent = Fraction(0)
        else:
            exponent = Fraction(match.group('pexp') or match.group('exp') or 1)
        pairs.append((exponent, sign * coeff))
    return LaurentPoly.from_terms(pairs, var)
