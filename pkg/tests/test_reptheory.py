from fractions import Fraction
from functools import reduce
from itertools import product
from operator import add

import pytest
from sympy import binomial

from exceptions import DimensionError
from services.exactnum import LaurentPoly, bracket
from services.hexgraph import TriCoord
from services.products import BoxDims
from services.reptheory import (
    H, KAPPA_TAU, RHO, WEDGE, X, Y, Mode, SymmetricSubspace, TensorRep, block, character, clebsch_gordan,
    commutator, compose, composed_block, cspp_matrix, cstcpp_matrix, d_map, irrep_action, irrep_character,
    matrix_to_csv, matrix_to_json, pp_matrix, slice, subspace_matrix, tcpp_matrix, tensor_action,
)

t = LaurentPoly.monomial(1, var='t')


def test_irrep_raising_coefficients():
    matrix = irrep_action(2, X)
    assert matrix.entry((0,), (-2,)) == 2
    assert matrix.entry((2,), (0,)) == 1
    assert matrix.entry((4,), (2,)) == 0


def test_quantum_irrep_coefficient_is_a_bracket():
    matrix = irrep_action(3, X, Mode.QUANTUM)
    assert matrix.entry((-1,), (-3,)) == bracket(3)
    assert matrix.specialize().entry((-1,), (-3,)) == 3


@pytest.mark.parametrize('n', range(9))
def test_irrep_commutator_is_h(n):
    x, y, h = (irrep_action(n, generator) for generator in (X, Y, H))
    assert commutator(x, y).entries == h.entries
    assert commutator(h, x).entries == {key: 2 * value for key, value in x.entries.items()}
    assert commutator(h, y).entries == {key: -2 * value for key, value in y.entries.items()}


@pytest.mark.parametrize('n', range(1, 9))
def test_quantum_irrep_commutator(n):
    x, y = (irrep_action(n, generator, Mode.QUANTUM) for generator in (X, Y))
    expected = {((w,), (w,)): bracket(w) for w in range(n, -n - 1, -2) if w}
    assert commutator(x, y).entries == expected


@pytest.mark.parametrize('weights', [(1, 2, 2), (2, 3, 3), (3, 4, 4), (4, 4, 5)])
def test_tensor_commutator_is_h(weights):
    rep = TensorRep.of(weights)
    x, y, h = (tensor_action(rep, generator) for generator in (X, Y, H))
    assert commutator(x, y).entries == h.entries


def test_two_factor_block():
    rep = TensorRep.of([4, 3])
    matrix = block(rep, X, -1)
    assert matrix.cols == ((-4, 3), (-2, 1), (0, -1), (2, -3))
    assert matrix.to_dense() == [[4, 1, 0, 0], [0, 3, 2, 0], [0, 0, 2, 3], [0, 0, 0, 1]]
    assert (matrix.source, matrix.target) == (-1, 1)


def test_slice_agrees_with_block():
    rep = TensorRep.of([2, 3, 1])
    full = tensor_action(rep, X)
    for weight in (-4, -2, 0):
        assert slice(rep, full, weight).entries == block(rep, X, weight).entries


def test_quantum_block_picks_up_shift():
    rep = TensorRep.of([4, 3], Mode.QUANTUM)
    matrix = block(rep, X, -1)
    assert matrix.entry((-2, 3), (-4, 3)) == bracket(4) * LaurentPoly.monomial(Fraction(3, 4))
    assert matrix.specialize().to_dense() == block(TensorRep.of([4, 3]), X, -1).to_dense()


def test_composed_block_is_square():
    rep = TensorRep.of([3, 4, 4])
    matrix = composed_block(rep, -1)
    assert matrix.is_square()
    assert matrix.shape == (16, 16)


def test_pp_matrix_and_bijection():
    matrix, bijection = pp_matrix(BoxDims(2, 2, 3))
    assert matrix.shape == (16, 16)
    assert all(isinstance(coord, TriCoord) for coord in bijection.values())
    assert all(bijection[col].up for col in matrix.cols)
    assert not any(bijection[row].up for row in matrix.rows)


def test_symmetric_class_matrices():
    assert cspp_matrix(1).to_dense() == [[2]]
    assert cstcpp_matrix(1).to_dense() == [[2]]
    assert tcpp_matrix(1, 1).is_square()
    assert cspp_matrix(2).is_square()


def test_subspace_needs_matching_factors():
    with pytest.raises(DimensionError):
        SymmetricSubspace(RHO, TensorRep.of([1, 2, 2]))
    with pytest.raises(DimensionError):
        SymmetricSubspace(KAPPA_TAU, TensorRep.of([1, 2, 3]))
    with pytest.raises(ValueError):
        SymmetricSubspace('sym', TensorRep.of([1, 1, 1]))


@pytest.mark.parametrize('n', [1, 2, 3, 4])
def test_wedge_basis_size(n):
    subspace = SymmetricSubspace(WEDGE, TensorRep.of([n, n, n]))
    total = sum(len(subspace.basis(weight)) for weight in range(-3 * n, 3 * n + 1))
    assert total == binomial(n + 1, 3)


@pytest.mark.parametrize('kind, weights', [
    (KAPPA_TAU, (1, 2, 2)),
    (KAPPA_TAU, (3, 4, 4)),
    (RHO, (3, 3, 3)),
    (WEDGE, (5, 5, 5)),
])
def test_subspace_character_counts_basis(kind, weights):
    subspace = SymmetricSubspace(kind, TensorRep.of(weights))
    ch = character(subspace)
    for weight in range(-sum(weights), sum(weights) + 1):
        assert ch.coefficient(weight) == len(subspace.basis(weight))


def test_subspace_matrix_is_invariant():
    subspace = SymmetricSubspace(RHO, TensorRep.of([3, 3, 3]))
    matrix = subspace_matrix(subspace, Y, 1)
    assert matrix.shape == (len(subspace.basis(-1)), len(subspace.basis(1)))


@pytest.mark.parametrize('n, k', list(product(range(11), repeat=2)))
def test_clebsch_gordan(n, k):
    expected = reduce(add, (irrep_character(m) for m in clebsch_gordan(n, k)))
    assert character(TensorRep.of([n, k])) == expected


def test_d_map():
    assert d_map(t ** 3) == 4
    assert d_map(t.reflect()) == 1
    for n in range(1, 6):
        assert d_map(irrep_character(2 * n - 1)) == n * n
    with pytest.raises(ValueError):
        d_map(t ** 2)


def test_matrix_to_json():
    data = matrix_to_json(block(TensorRep.of([4, 3]), X, -1))
    assert data['generator'] == 'X'
    assert data['mode'] == 'classical'
    assert (data['source'], data['target']) == (-1, 1)
    assert data['rows'][0] == [-2, 3]
    assert len(data['entries']) == 7
    assert {'row': [-2, 3], 'col': [-4, 3], 'value': '4'} in data['entries']


def test_matrix_to_csv():
    lines = matrix_to_csv(block(TensorRep.of([4, 3]), X, -1)).splitlines()
    assert lines[0] == ',"(-4,3)","(-2,1)","(0,-1)","(2,-3)"'
    assert lines[1] == '"(-2,3)",4,1,0,0'
    assert len(lines) == 5


@pytest.mark.parametrize('n', range(1, 11))
def test_composed_block_on_an_odd_irrep(n):
    assert composed_block(TensorRep.of([2 * n - 1]), -1).to_dense() == [[n * n]]


@pytest.mark.parametrize('weights', [(1, 1, 1), (2, 3, 3), (3, 4, 4)])
def test_quantum_tensor_commutator_is_a_bracket(weights):
    rep = TensorRep.of(weights, Mode.QUANTUM)
    x, y = (tensor_action(rep, generator) for generator in (X, Y))
    expected = {(labels, labels): bracket(sum(labels)) for labels in rep.basis() if sum(labels)}
    assert commutator(x, y).entries == expected


def test_pp_matrix_entries_are_raising_coefficients():
    matrix, _ = pp_matrix(BoxDims(2, 2, 3))
    highest = (3, 4, 4)
    seen = {0: set(), 1: set(), 2: set()}
    for (row, col), value in matrix.entries.items():
        moved = [m for m in range(3) if row[m] != col[m]]
        assert len(moved) == 1
        m = moved[0]
        assert row[m] == col[m] + 2
        assert value == (highest[m] - col[m]) // 2
        seen[m].add(value)
    assert all(seen.values())
    assert seen[0] <= {1, 2, 3}
    assert seen[1] | seen[2] <= {1, 2, 3, 4}


def test_d_map_is_multiplicative():
    first = character(TensorRep.of([1, 2, 2]))
    second = irrep_character(3)
    assert d_map(first + second) == d_map(first) * d_map(second)
    assert d_map(first + first) == d_map(first) ** 2


@pytest.mark.parametrize('obj', [
    TensorRep.of([0]),
    TensorRep.of([5]),
    TensorRep.of([2, 3]),
    TensorRep.of([3, 4, 4]),
    SymmetricSubspace(KAPPA_TAU, TensorRep.of([3, 4, 4])),
    SymmetricSubspace(RHO, TensorRep.of([3, 3, 3])),
    SymmetricSubspace(WEDGE, TensorRep.of([4, 4, 4])),
])
def test_characters_are_palindromic(obj):
    assert character(obj).is_palindromic()


def _dense_product(left, right):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*right)] for row in left]


@pytest.mark.parametrize('weights', [(4, 3), (2, 3, 1), (3, 4, 4)])
def test_compose_is_the_matrix_product(weights):
    rep = TensorRep.of(weights)
    x, y = block(rep, X, -1), block(rep, Y, 1)
    assert compose(y, x).to_dense() == _dense_product(y.to_dense(), x.to_dense())
    assert compose(x, y).to_dense() == _dense_product(x.to_dense(), y.to_dense())


def test_compose_of_rectangular_blocks():
    rep = TensorRep.of([2, 3, 1])
    up, further = block(rep, X, -2), block(rep, X, 0)
    product_matrix = compose(further, up)
    assert product_matrix.shape == (len(further.rows), len(up.cols))
    assert product_matrix.to_dense() == _dense_product(further.to_dense(), up.to_dense())
    with pytest.raises(ValueError):
        compose(up, up)
