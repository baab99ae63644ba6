"""
sl(2) representation machinery
Irreps and their tensor products in the weight basis, classical and quantum,
with weight slices, symmetry subspaces, characters and the D map.

Matrices index rows and columns by weight tuples (one weight per tensor
factor) in ascending lexicographic order.
"""
import csv
import io
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property
from itertools import permutations, product

from exceptions import DimensionError, InvariantViolation
from services.exactnum import LaurentPoly, bracket, format_poly, is_zero
from services.hexgraph import TriCoord, build_cspp_graph, build_cstcpp_graph, build_hexagon, build_tcpp_graph
from services.products import BoxDims

logger = logging.getLogger(__name__)

H, X, Y = 'H', 'X', 'Y'
# Weight shift of each generator
SHIFT = {H: 0, X: 2, Y: -2}

KAPPA_TAU, RHO, WEDGE = 'kappa_tau', 'rho', 'wedge'


class Mode(str, Enum):
    CLASSICAL = 'classical'
    QUANTUM = 'quantum'


@dataclass(frozen=True)
class Irrep:
    """V_n: highest weight n, dimension n + 1"""
    n: int
    mode: Mode = Mode.CLASSICAL

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f'Highest weight must be non-negative, got {self.n}')

    @property
    def dimension(self):
        return self.n + 1

    @property
    def weights(self):
        """Basis order e_n, e_(n-2), ..., e_(-n)"""
        return list(range(self.n, -self.n - 1, -2))


@dataclass(frozen=True)
class TensorRep:
    factors: tuple
    mode: Mode = Mode.CLASSICAL

    def __post_init__(self):
        if not self.factors:
            raise ValueError('A tensor product needs at least one factor')
        if any(factor.mode != self.mode for factor in self.factors):
            raise ValueError('Tensor factors must share the representation mode')

    @classmethod
    def of(cls, highest_weights, mode=Mode.CLASSICAL):
        mode = Mode(mode)
        return cls(tuple(Irrep(n, mode) for n in highest_weights), mode)

    @property
    def highest_weights(self):
        return tuple(factor.n for factor in self.factors)

    @property
    def dimension(self):
        result = 1
        for factor in self.factors:
            result *= factor.dimension
        return result

    def basis(self):
        """Every weight tuple, ascending"""
        return sorted(product(*(factor.weights for factor in self.factors)))

    def slice_basis(self, weight):
        """Weight tuples whose entries sum to weight, ascending"""
        return [labels for labels in self.basis() if sum(labels) == weight]


@dataclass(frozen=True)
class RepMatrix:
    """
    Sparse matrix of a generator action

    entries maps (row label, column label) to a non-zero scalar.  source and
    target are the column and row weights for a slice block, None for a full
    action.
    """
    generator: str
    mode: Mode
    rows: tuple
    cols: tuple
    entries: dict
    source: object = None
    target: object = None

    @cached_property
    def row_index(self):
        return {label: index for index, label in enumerate(self.rows)}

    @cached_property
    def col_index(self):
        return {label: index for index, label in enumerate(self.cols)}

    @property
    def shape(self):
        return (len(self.rows), len(self.cols))

    def is_square(self):
        return len(self.rows) == len(self.cols)

    def entry(self, row, col):
        return self.entries.get((row, col), 0)

    def to_dense(self):
        """List of rows in the canonical order"""
        return [[self.entry(row, col) for col in self.cols] for row in self.rows]

    def specialize(self):
        """Evaluate every quantum entry at q = 1"""
        def at_one(value):
            return value.evaluate_at_one() if isinstance(value, LaurentPoly) else value

        return RepMatrix(self.generator, Mode.CLASSICAL, self.rows, self.cols,
                         {key: at_one(value) for key, value in self.entries.items()},
                         self.source, self.target)


# Generator actions

def _factor_coefficient(n, weight, generator, mode):
    """Coefficient of a single factor move, or None when it leaves V_n"""
    if generator == X:
        if weight >= n:
            return None
        value = (n - weight) // 2
    else:
        if weight <= -n:
            return None
        value = (n + weight) // 2
    return bracket(value) if mode == Mode.QUANTUM else value


def _tensor_shift(labels, m):
    """Exponent of q picked up by a move in factor m"""
    return Fraction(sum(labels[m + 1:]) - sum(labels[:m]), 4)


def act(rep, generator, labels):
    """
    Image of one basis vector

    Returns:
        list: (target labels, coefficient) pairs
    """
    if generator == H:
        return [(labels, sum(labels))] if sum(labels) else []
    image = []
    for m, factor in enumerate(rep.factors):
        coeff = _factor_coefficient(factor.n, labels[m], generator, rep.mode)
        if coeff is None or is_zero(coeff):
            continue
        if rep.mode == Mode.QUANTUM:
            coeff = coeff * LaurentPoly.monomial(_tensor_shift(labels, m))
        target = list(labels)
        target[m] += SHIFT[generator]
        image.append((tuple(target), coeff))
    return image


def edge_coefficient(rep, labels, m):
    """Coefficient of X raising factor m of the basis vector labels"""
    for target, coeff in act(rep, X, labels):
        if target[m] != labels[m]:
            return coeff
    raise InvariantViolation(f'No X move in factor {m} from {labels}')


def _build_matrix(rep, generator, cols, rows, source=None, target=None):
    allowed = set(rows)
    entries = {}
    for col in cols:
        for row, coeff in act(rep, generator, col):
            if row in allowed:
                entries[(row, col)] = entries.get((row, col), 0) + coeff
    entries = {key: value for key, value in entries.items() if not is_zero(value)}
    return RepMatrix(generator, rep.mode, tuple(rows), tuple(cols), entries, source, target)


def tensor_action(rep, generator):
    """Full action of H, X or Y on the tensor basis"""
    if generator not in SHIFT:
        raise ValueError(f'Unknown generator: {generator}')
    basis = rep.basis()
    return _build_matrix(rep, generator, basis, basis)


def irrep_action(n, generator, mode=Mode.CLASSICAL):
    return tensor_action(TensorRep.of([n], mode), generator)


def slice(rep, matrix, weight):
    """Block of matrix from the weight eigenspace to weight + shift"""
    target = weight + SHIFT[matrix.generator]
    cols = tuple(label for label in matrix.cols if sum(label) == weight)
    rows = tuple(label for label in matrix.rows if sum(label) == target)
    entries = {(row, col): value for (row, col), value in matrix.entries.items()
               if sum(col) == weight and sum(row) == target}
    return RepMatrix(matrix.generator, matrix.mode, rows, cols, entries, weight, target)


def block(rep, generator, weight):
    """Slice block built directly from the slice bases"""
    target = weight + SHIFT[generator]
    return _build_matrix(rep, generator, rep.slice_basis(weight), rep.slice_basis(target), weight, target)


def compose(left, right):
    """Matrix product left * right; left.cols must equal right.rows"""
    if tuple(left.cols) != tuple(right.rows):
        raise ValueError('Inner labels of the product do not agree')
    by_row = {}
    for (inner, col), value in right.entries.items():
        by_row.setdefault(inner, []).append((col, value))
    entries = {}
    for (row, inner), lvalue in left.entries.items():
        for col, rvalue in by_row.get(inner, ()):
            entries[(row, col)] = entries.get((row, col), 0) + lvalue * rvalue
    entries = {key: value for key, value in entries.items() if not is_zero(value)}
    return RepMatrix(left.generator + right.generator, left.mode, left.rows, right.cols,
                     entries, right.source, left.target)


def subtract(left, right):
    entries = dict(left.entries)
    for key, value in right.entries.items():
        entries[key] = entries.get(key, 0) - value
    entries = {key: value for key, value in entries.items() if not is_zero(value)}
    return RepMatrix(left.generator, left.mode, left.rows, left.cols, entries, left.source, left.target)


def commutator(left, right):
    return subtract(compose(left, right), compose(right, left))


def composed_block(rep, weight):
    """Y|_(weight+2) X|_weight, an endomorphism of the weight slice"""
    return compose(block(rep, Y, weight + 2), block(rep, X, weight))


def clebsch_gordan(n, k):
    """Highest weights of V_n (x) V_k: n+k, n+k-2, ..., |n-k|"""
    if n < 0 or k < 0:
        raise ValueError(f'clebsch_gordan needs n, k >= 0, got ({n}, {k})')
    return list(range(n + k, abs(n - k) - 1, -2))


# Plane partition matrices

def ambient_rep(dims, mode=Mode.CLASSICAL):
    """V_(c^-1) (x) V_(b^-1) (x) V_(a^-1) for the hexagon H(a,b,c)"""
    return TensorRep.of([dims.c_hat - 1, dims.b_hat - 1, dims.a_hat - 1], mode)


def labels_to_tricoord(rep, labels):
    """Weight tuple -> triangle; the coordinate is the rank of the weight from the bottom"""
    ranks = [(weight + factor.n) // 2 + 1 for weight, factor in zip(labels, rep.factors)]
    return TriCoord(*ranks, up=sum(labels) < 0)


def tricoord_to_labels(rep, coord):
    return tuple(2 * rank - factor.n - 2 for rank, factor in zip(coord.coords, rep.factors))


def _check_support(matrix, graph, rep):
    """Entries must equal the summed X coefficients of the graph edges between each pair"""
    expected = {}
    for edge in graph.edges:
        origin = tricoord_to_labels(rep, edge.origin)
        key = (tricoord_to_labels(rep, edge.target), tricoord_to_labels(rep, edge.source))
        expected[key] = expected.get(key, 0) + edge_coefficient(rep, origin, edge.factor)
    expected = {key: value for key, value in expected.items() if not is_zero(value)}
    if expected != matrix.entries:
        missing = set(expected) ^ set(matrix.entries)
        raise InvariantViolation(
            f'{graph.name} matrix of {graph.dims} does not match its graph; {len(missing)} entries differ in support'
        )


def pp_matrix(dims, mode=Mode.CLASSICAL):
    """
    X|_(-1) of the ambient representation of H(a,b,c)

    Args:
        dims: BoxDims
        mode: Mode

    Returns:
        tuple: (RepMatrix, bijection from weight tuples to TriCoord)

    Raises:
        InvariantViolation: the matrix support is not the edge set of Z(a,b,c)
    """
    rep = ambient_rep(dims, Mode(mode))
    matrix = block(rep, X, -1)
    bijection = {labels: labels_to_tricoord(rep, labels) for labels in matrix.rows + matrix.cols}
    _check_support(matrix, build_hexagon(dims), rep)
    logger.debug(f'pp matrix for {dims}: {matrix.shape[0]}x{matrix.shape[1]}')
    return matrix, bijection


@dataclass(frozen=True)
class SymmetricSubspace:
    """
    Subspace of a triple tensor product cut out by a symmetry

    kappa_tau: antisymmetric under swapping the last two factors,
    basis e_i(x)e_j(x)e_k - e_i(x)e_k(x)e_j with j < k.
    rho: fixed by the cyclic shift, basis of orbit sums.
    wedge: the alternating cube, basis e_i^e_j^e_k with i < j < k.
    """
    kind: str
    rep: TensorRep

    def __post_init__(self):
        if self.kind not in (KAPPA_TAU, RHO, WEDGE):
            raise ValueError(f'Unknown subspace kind: {self.kind}')
        n = self.rep.highest_weights
        if len(n) != 3:
            raise DimensionError('Symmetric subspaces live in triple tensor products')
        if self.kind == KAPPA_TAU and n[1] != n[2]:
            raise DimensionError(f'kappa-tau swap needs equal last factors, got {n}')
        if self.kind in (RHO, WEDGE) and not n[0] == n[1] == n[2]:
            raise DimensionError(f'{self.kind} needs three equal factors, got {n}')

    def vector(self, labels):
        """Basis vector with representative labels, as {labels: coefficient}"""
        i, j, k = labels
        if self.kind == KAPPA_TAU:
            return {(i, j, k): 1, (i, k, j): -1}
        if self.kind == RHO:
            return {(i, j, k): 1, (j, k, i): 1, (k, i, j): 1}
        vector = {}
        for order in permutations(range(3)):
            sign = _permutation_parity(order)
            vector[tuple(labels[p] for p in order)] = sign
        return vector

    def is_representative(self, labels):
        i, j, k = labels
        if self.kind == KAPPA_TAU:
            return j < k
        if self.kind == RHO:
            return labels == min((i, j, k), (j, k, i), (k, i, j))
        return i < j < k

    def basis(self, weight):
        return [labels for labels in self.rep.slice_basis(weight) if self.is_representative(labels)]


def _permutation_parity(order):
    sign = 1
    order = list(order)
    for i in range(len(order)):
        for j in range(i + 1, len(order)):
            if order[i] > order[j]:
                sign = -sign
    return sign


def subspace_matrix(subspace, generator, weight):
    """
    Block of a generator restricted to a symmetric subspace

    Column c holds the image of basis vector c written in the target basis;
    the coefficient of row r is read off at r's representative.

    Raises:
        InvariantViolation: the image leaves the subspace
    """
    rep = subspace.rep
    target = weight + SHIFT[generator]
    cols = subspace.basis(weight)
    rows = subspace.basis(target)
    entries = {}
    for col in cols:
        image = {}
        for labels, coeff in subspace.vector(col).items():
            for moved, value in act(rep, generator, labels):
                image[moved] = image.get(moved, 0) + coeff * value
        image = {labels: value for labels, value in image.items() if not is_zero(value)}
        rebuilt = {}
        for row in rows:
            value = image.get(row, 0)
            if is_zero(value):
                continue
            entries[(row, col)] = value
            for labels, coeff in subspace.vector(row).items():
                rebuilt[labels] = rebuilt.get(labels, 0) + coeff * value
        rebuilt = {labels: value for labels, value in rebuilt.items() if not is_zero(value)}
        if rebuilt != image:
            raise InvariantViolation(f'{subspace.kind} subspace is not invariant under {generator} at {col}')
    return RepMatrix(generator, rep.mode, tuple(rows), tuple(cols), entries, weight, target)


def tcpp_matrix(a, b):
    """X|_(-1) on the kappa-tau antisymmetric part of the ambient rep of H(a,a,2b)"""
    if a < 1 or b < 1:
        raise DimensionError(f'tcpp_matrix needs a, b >= 1, got ({a}, {b})')
    rep = ambient_rep(BoxDims(a, a, 2 * b))
    matrix = subspace_matrix(SymmetricSubspace(KAPPA_TAU, rep), X, -1)
    _check_support(matrix, build_tcpp_graph(a, b), rep)
    return matrix


def cspp_matrix(a):
    """X|_(-1) on the rho-invariant part of V_(2a-1)^3; parallel edges add"""
    if a < 1:
        raise DimensionError(f'cspp_matrix needs a >= 1, got {a}')
    rep = ambient_rep(BoxDims(a, a, a))
    matrix = subspace_matrix(SymmetricSubspace(RHO, rep), X, -1)
    _check_support(matrix, build_cspp_graph(a), rep)
    return matrix


def cstcpp_matrix(a):
    """X|_(-1) on the alternating cube of V_(4a-1)"""
    if a < 1:
        raise DimensionError(f'cstcpp_matrix needs a >= 1, got {a}')
    rep = ambient_rep(BoxDims(2 * a, 2 * a, 2 * a))
    matrix = subspace_matrix(SymmetricSubspace(WEDGE, rep), X, -1)
    _check_support(matrix, build_cstcpp_graph(a), rep)
    return matrix


# Characters

def irrep_character(n):
    """ch(V_n) = t^n + t^(n-2) + ... + t^(-n)"""
    return LaurentPoly.from_terms(((weight, 1) for weight in range(n, -n - 1, -2)), var='t')


def _integral(character, label):
    for _, coeff in character.terms():
        if Fraction(coeff).denominator != 1:
            raise InvariantViolation(f'Character of {label} has a non-integral coefficient')
    return character


def character(obj):
    """
    Character of an Irrep, a TensorRep or a SymmetricSubspace

    Returns:
        LaurentPoly in t
    """
    if isinstance(obj, Irrep):
        return irrep_character(obj.n)
    if isinstance(obj, TensorRep):
        result = LaurentPoly.constant(1, 't')
        for factor in obj.factors:
            result = result * irrep_character(factor.n)
        return result
    if isinstance(obj, SymmetricSubspace):
        full = character(obj.rep)
        first, second, _ = obj.rep.highest_weights
        w = irrep_character(second)
        if obj.kind == KAPPA_TAU:
            fixed = irrep_character(first) * w.substitute_power(2)
            result = (full - fixed) * Fraction(1, 2)
        elif obj.kind == RHO:
            result = (full + 2 * w.substitute_power(3)) * Fraction(1, 3)
        else:
            result = (full - 3 * w.substitute_power(2) * w + 2 * w.substitute_power(3)) * Fraction(1, 6)
        return _integral(result, obj.kind)
    raise TypeError(f'No character for {type(obj).__name__}')


def d_map(ch):
    """
    D(t^(2n-1)) = n^2 / (n-1)^2 for n > 1 and 1 otherwise, extended multiplicatively

    Raises:
        ValueError: ch has an exponent that is not an odd integer
    """
    result = Fraction(1)
    for exponent, coeff in ch.terms():
        if exponent.denominator != 1 or exponent.numerator % 2 == 0:
            raise ValueError(f'D map needs odd exponents, got t^{exponent}')
        n = (exponent.numerator + 1) // 2
        if n > 1:
            coeff = Fraction(coeff)
            if coeff.denominator != 1:
                raise ValueError(f'D map needs integral coefficients, got {coeff}')
            result *= Fraction(n * n, (n - 1) * (n - 1)) ** coeff.numerator
    return result


# Output

def _label_text(labels):
    return '(' + ','.join(str(weight) for weight in labels) + ')'


def _scalar_text(value):
    if isinstance(value, LaurentPoly):
        return format_poly(value)
    return str(value)


def matrix_to_json(matrix):
    return {
        'generator': matrix.generator,
        'mode': Mode(matrix.mode).value,
        'source': matrix.source,
        'target': matrix.target,
        'rows': [list(label) for label in matrix.rows],
        'cols': [list(label) for label in matrix.cols],
        'entries': [
            {'row': list(row), 'col': list(col), 'value': _scalar_text(value)}
            for (row, col), value in sorted(matrix.entries.items())
        ],
    }


def matrix_to_csv(matrix):
    """Dense CSV with weight-tuple labels in the header row and first column"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow([''] + [_label_text(col) for col in matrix.cols])
    for row in matrix.rows:
        writer.writerow([_label_text(row)] + [_scalar_text(matrix.entry(row, col)) for col in matrix.cols])
    return buffer.getvalue()
