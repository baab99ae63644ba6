"""
Brute-force plane partition oracle
Direct enumeration with symmetry filters and q-weights, plus the bijection
between plane partitions and perfect matchings of Z(a,b,c).
"""
import logging
import random
from dataclasses import dataclass

from exceptions import BudgetExceeded, DimensionError, InvariantViolation
from services.exactnum import LaurentPoly
from services.hexgraph import PP, TriCoord

logger = logging.getLogger(__name__)

DEFAULT_ORACLE_BUDGET = 64

TRIVIAL, RHO, KAPPA_TAU, RHO_KAPPA_TAU = 'trivial', 'rho', 'kappa_tau', 'rho_kappa_tau'
SYMMETRY_FILTERS = (TRIVIAL, RHO, KAPPA_TAU, RHO_KAPPA_TAU)

# Symmetry filter of each counted class
CLASS_FILTERS = {'pp': TRIVIAL, 'cspp': RHO, 'tcpp': KAPPA_TAU, 'cstcpp': RHO_KAPPA_TAU}

TAU, ROTATE, COMPLEMENT = 'tau', 'rho', 'kappa'


@dataclass(frozen=True)
class PlanePartition:
    """An a x b matrix of heights in [0, c], weakly decreasing along rows and columns"""
    dims: object
    heights: tuple

    def __post_init__(self):
        a, b, c = self.dims.as_tuple()
        heights = tuple(tuple(row) for row in self.heights)
        object.__setattr__(self, 'heights', heights)
        if len(heights) != a or any(len(row) != b for row in heights):
            raise DimensionError(f'Plane partition in {self.dims} must be an {a}x{b} matrix')
        for x in range(a):
            for y in range(b):
                h = heights[x][y]
                if not 0 <= h <= c:
                    raise ValueError(f'Height {h} at ({x}, {y}) is outside [0, {c}]')
                if (x and heights[x - 1][y] < h) or (y and heights[x][y - 1] < h):
                    raise ValueError(f'Heights are not weakly decreasing at ({x}, {y})')

    @classmethod
    def empty(cls, dims):
        return cls(dims, [[0] * dims.b for _ in range(dims.a)])

    @classmethod
    def full(cls, dims):
        return cls(dims, [[dims.c] * dims.b for _ in range(dims.a)])

    @classmethod
    def from_cubes(cls, dims, cubes):
        heights = [[0] * dims.b for _ in range(dims.a)]
        for x, y, z in cubes:
            heights[x][y] = max(heights[x][y], z + 1)
        partition = cls(dims, heights)
        if partition.cubes() != frozenset(cubes):
            raise ValueError('Cube set is not stable under gravity')
        return partition

    def cubes(self):
        """The Ferrers solid"""
        return frozenset(
            (x, y, z)
            for x, row in enumerate(self.heights)
            for y, h in enumerate(row)
            for z in range(h)
        )

    @property
    def size(self):
        return sum(sum(row) for row in self.heights)

    def __str__(self):
        return '/'.join(' '.join(str(h) for h in row) for row in self.heights)


def _check_filter(dims, symmetry):
    if symmetry not in SYMMETRY_FILTERS:
        raise ValueError(f'Unknown symmetry filter: {symmetry}')
    a, b, c = dims.as_tuple()
    if symmetry in (RHO, RHO_KAPPA_TAU) and not a == b == c:
        raise DimensionError(f'{symmetry} needs a = b = c, got {dims}')
    if symmetry == KAPPA_TAU and a != b:
        raise DimensionError(f'{symmetry} needs a = b, got {dims}')


def apply_pp_symmetry(partition, op):
    """
    Apply tau (transpose), rho (cyclic rotation) or kappa (complement)

    Raises:
        DimensionError: op is not defined for the box
    """
    dims = partition.dims
    a, b, c = dims.as_tuple()
    cubes = partition.cubes()
    if op == TAU:
        if a != b:
            raise DimensionError(f'tau needs a = b, got {dims}')
        return PlanePartition.from_cubes(dims, {(y, x, z) for x, y, z in cubes})
    if op == ROTATE:
        if not a == b == c:
            raise DimensionError(f'rho needs a = b = c, got {dims}')
        return PlanePartition.from_cubes(dims, {(y, z, x) for x, y, z in cubes})
    if op == COMPLEMENT:
        heights = [[c - partition.heights[a - 1 - x][b - 1 - y] for y in range(b)] for x in range(a)]
        return PlanePartition(dims, heights)
    raise ValueError(f'Unknown plane partition operation: {op}')


def is_symmetric(partition, symmetry):
    if symmetry == TRIVIAL:
        return True
    if symmetry in (RHO, RHO_KAPPA_TAU) and apply_pp_symmetry(partition, ROTATE) != partition:
        return False
    if symmetry in (KAPPA_TAU, RHO_KAPPA_TAU):
        flipped = apply_pp_symmetry(apply_pp_symmetry(partition, TAU), COMPLEMENT)
        if flipped != partition:
            return False
    return True


def enumerate_pp(dims, symmetry=TRIVIAL, budget=DEFAULT_ORACLE_BUDGET):
    """
    Every plane partition in the box, in lexicographic row-major order

    Args:
        dims: BoxDims
        symmetry: one of SYMMETRY_FILTERS
        budget: largest accepted a*b*c

    Raises:
        BudgetExceeded: the box volume is above budget
    """
    _check_filter(dims, symmetry)
    if dims.volume > budget:
        raise BudgetExceeded(f'Box {dims} has {dims.volume} cells, oracle budget is {budget}')
    a, b, c = dims.as_tuple()
    heights = [[0] * b for _ in range(a)]
    cells = [(x, y) for x in range(a) for y in range(b)]

    def fill(position):
        if position == len(cells):
            partition = PlanePartition(dims, heights)
            if is_symmetric(partition, symmetry):
                yield partition
            return
        x, y = cells[position]
        bound = c
        if x:
            bound = min(bound, heights[x - 1][y])
        if y:
            bound = min(bound, heights[x][y - 1])
        for h in range(bound + 1):
            heights[x][y] = h
            yield from fill(position + 1)
        heights[x][y] = 0

    yield from fill(0)


def count_pp(dims, symmetry=TRIVIAL, budget=DEFAULT_ORACLE_BUDGET):
    total = sum(1 for _ in enumerate_pp(dims, symmetry, budget))
    logger.debug(f'Oracle counted {total} {symmetry} plane partitions in {dims}')
    return total


def q_weight(partition):
    """q to the number of cubes"""
    return LaurentPoly.monomial(partition.size)


def q_count_pp(dims, budget=DEFAULT_ORACLE_BUDGET):
    total = LaurentPoly.constant(0)
    for partition in enumerate_pp(dims, TRIVIAL, budget):
        total = total + q_weight(partition)
    return total


# Growth

def addable_cells(partition):
    """Cells (x, y) whose column can take one more cube"""
    a, b, c = partition.dims.as_tuple()
    P = partition.heights
    cells = []
    for x in range(a):
        for y in range(b):
            h = P[x][y]
            if h < c and (x == 0 or P[x - 1][y] > h) and (y == 0 or P[x][y - 1] > h):
                cells.append((x, y))
    return cells


def add_cube(partition, x, y):
    heights = [list(row) for row in partition.heights]
    heights[x][y] += 1
    return PlanePartition(partition.dims, heights)


def random_pp(dims, seed, steps=None):
    """Grow a plane partition by random cube additions from a seeded generator"""
    rng = random.Random(seed)
    if steps is None:
        steps = rng.randint(0, dims.volume)
    partition = PlanePartition.empty(dims)
    for _ in range(steps):
        cells = addable_cells(partition)
        if not cells:
            break
        partition = add_cube(partition, *rng.choice(cells))
    return partition


# Tilings

def _surface(heights, dims):
    """Lozenges of the visible surface of a stack, as (up triangle, raised coordinate)"""
    a, b, c = dims.as_tuple()
    keys = []
    for x in range(a):
        for y in range(b):
            h = heights[x][y]
            keys.append((TriCoord(y - x + a, x - h + c + 1, h - y + b, True), 0))
    for y in range(b):
        for z in range(c):
            top = sum(1 for x in range(a) if heights[x][y] > z)
            keys.append((TriCoord(y - top + 1 + a, top - z + c, z - y + b, True), 2))
    for x in range(a):
        for z in range(c):
            top = sum(1 for y in range(b) if heights[x][y] > z)
            keys.append((TriCoord(top - x + a, x - z + c, z + 1 - top + b, True), 1))
    return keys


def _check_graph(graph, dims):
    if graph.name != PP or graph.dims != dims:
        raise DimensionError(f'Expected the graph Z({dims}), got {graph.name} of {graph.dims}')


def pp_to_matching(partition, graph):
    """
    Perfect matching of Z(a,b,c) for a plane partition

    The tiling is read off the complement, so the empty partition maps to
    the matching of the full box and each added cube turns one hexagon.

    Returns:
        frozenset of edge keys
    """
    _check_graph(graph, partition.dims)
    complement = apply_pp_symmetry(partition, COMPLEMENT)
    keys = _surface(complement.heights, partition.dims)
    for key in keys:
        try:
            graph.edge(key)
        except KeyError:
            raise InvariantViolation(f'Lozenge {key[0]}/{key[1]} of {partition} is not an edge of Z({graph.dims})')
    matching = frozenset(keys)
    if len(matching) != len(graph.black):
        raise InvariantViolation(f'Lozenges of {partition} do not cover Z({graph.dims})')
    return matching


def matching_to_pp(matching, graph):
    """Inverse of pp_to_matching"""
    dims = graph.dims
    _check_graph(graph, dims)
    a, b, c = dims.as_tuple()
    diagonals = {}
    for origin, factor in matching:
        if factor == 0:
            diagonals.setdefault(origin.i - a, []).append(origin.j)
    heights = [[0] * b for _ in range(a)]
    for delta in range(-(a - 1), b):
        cells = [(x, x + delta) for x in range(max(0, -delta), a) if 0 <= x + delta < b]
        levels = sorted(diagonals.pop(delta, []))
        if len(levels) != len(cells):
            raise InvariantViolation(f'Matching has {len(levels)} horizontal lozenges on diagonal {delta}, '
                                     f'expected {len(cells)}')
        for (x, y), j in zip(cells, levels):
            heights[x][y] = x - j + c + 1
    if diagonals:
        raise InvariantViolation('Matching has horizontal lozenges outside the hexagon')
    try:
        complement = PlanePartition(dims, heights)
    except ValueError as e:
        raise InvariantViolation(f'Matching does not describe a plane partition: {e}')
    partition = apply_pp_symmetry(complement, COMPLEMENT)
    if pp_to_matching(partition, graph) != frozenset(matching):
        raise InvariantViolation('Matching is not the tiling of the recovered plane partition')
    return partition
