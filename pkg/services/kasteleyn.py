"""
Determinant pipelines
Exact determinants, the normalization terms, flatness and term-equality
checks, and the determinant route to every symmetry class count.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction

from exceptions import BudgetExceeded, DimensionError, InvariantViolation
from services import oracle
from services.exactnum import LaurentPoly, format_poly, is_zero, ring_div
from services.hexgraph import (
    PP, TCPP, CSPP, CSTCPP, build_cspp_graph, build_cstcpp_graph, build_hexagon, build_tcpp_graph,
    enumerate_matchings, first_matching, kasteleyn_curvature,
)
from services.products import (
    BoxDims, exact_root, box_product, box_product_bracket, count_cspp_formula, count_pp_formula,
    count_pp_formula_q, count_tcpp_formula_box, odd_double_factorial,
)
from services.reptheory import (
    Mode, ambient_rep, character, composed_block, cspp_matrix, cstcpp_matrix, d_map, edge_coefficient,
    pp_matrix, tcpp_matrix, tricoord_to_labels,
)

logger = logging.getLogger(__name__)

CLASSES = (PP, TCPP, CSPP, CSTCPP)
PP_Q = 'pp_q'

DETERMINANT, FORMULA, ORACLE = 'determinant', 'formula', 'oracle'

DEFAULT_TERM_CHECK_BUDGET = 40


@dataclass(frozen=True)
class NormalizationTerm:
    kind: str
    dims: BoxDims
    value: object

    def __post_init__(self):
        if is_zero(self.value):
            raise InvariantViolation(f'Normalization term of {self.kind} {self.dims} is zero')


@dataclass(frozen=True)
class CountResult:
    kind: str
    dims: BoxDims
    route: str
    value: object

    def text(self):
        if isinstance(self.value, LaurentPoly):
            return format_poly(self.value)
        return str(self.value)

    def to_json(self):
        return {
            'class': self.kind,
            'dims': list(self.dims.as_tuple()),
            'route': self.route,
            'value': self.text(),
        }


# Determinants

def _dense(matrix):
    if hasattr(matrix, 'to_dense'):
        return matrix.to_dense()
    return [list(row) for row in matrix]


def _size(value):
    if isinstance(value, LaurentPoly):
        return (len(value.scaled_items()), 0)
    return (1, abs(value))


def exact_determinant(matrix):
    """
    Determinant by fraction-free elimination

    Every intermediate division is exact, so the computation stays in the
    ring of the entries: Python ints or LaurentPoly.

    Args:
        matrix: RepMatrix or list of rows

    Raises:
        ValueError: the matrix is not square
        InexactDivision: a ring division left a remainder
    """
    rows = _dense(matrix)
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise ValueError(f'Determinant needs a square matrix, got {n} rows of lengths {sorted({len(r) for r in rows})}')
    if n == 0:
        return 1
    sign = 1
    previous = 1
    for k in range(n - 1):
        candidates = [r for r in range(k, n) if not is_zero(rows[r][k])]
        if not candidates:
            return 0
        pivot = min(candidates, key=lambda r: _size(rows[r][k]))
        if pivot != k:
            rows[k], rows[pivot] = rows[pivot], rows[k]
            sign = -sign
        head = rows[k][k]
        for i in range(k + 1, n):
            lead = rows[i][k]
            for j in range(k + 1, n):
                if is_zero(lead):
                    value = rows[i][j] * head
                else:
                    value = rows[i][j] * head - lead * rows[k][j]
                rows[i][j] = 0 if is_zero(value) else ring_div(value, previous)
            rows[i][k] = 0
        previous = head
    result = rows[n - 1][n - 1]
    return -result if sign < 0 else result


def permutation_sign(perm):
    """Sign of a permutation of range(len(perm))"""
    seen = [False] * len(perm)
    sign = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        node = start
        while not seen[node]:
            seen[node] = True
            node = perm[node]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


# Weights

def weigh_graph(graph, mode=Mode.CLASSICAL):
    """Graph with the X|_(-1) coefficients of its ambient representation as edge weights"""
    rep = ambient_rep(graph.dims, Mode(mode))
    return graph.with_weights(
        lambda edge: edge_coefficient(rep, tricoord_to_labels(rep, edge.origin), edge.factor)
    )


def matching_weight(graph, matching):
    result = 1
    for key in matching:
        result = result * graph.edge(key).weight
    return result


def class_graph(kind, dims):
    if kind == PP:
        return build_hexagon(dims)
    if kind == TCPP:
        return build_tcpp_graph(dims.a, dims.c // 2)
    if kind == CSPP:
        return build_cspp_graph(dims.a)
    return build_cstcpp_graph(dims.a // 2)


def _check_dims(kind, dims):
    a, b, c = dims.as_tuple()
    if kind == TCPP and a != b:
        raise DimensionError(f'TCPP needs a = b, got {dims}')
    if kind in (CSPP, CSTCPP) and not a == b == c:
        raise DimensionError(f'{kind.upper()} needs a = b = c, got {dims}')
    if kind not in CLASSES:
        raise ValueError(f'Unknown class: {kind}')


def _is_empty_class(kind, dims):
    """TCPP with odd c and CSTCPP with odd side have no members"""
    return (kind == TCPP and dims.c % 2) or (kind == CSTCPP and dims.a % 2)


# Normalization

def _pp_closed_form(dims, mode):
    a, b, c = dims.as_tuple()
    if mode == Mode.QUANTUM:
        value = LaurentPoly.monomial(Fraction(-dims.volume, 2))
        for pair, n in (([a, b], dims.c_hat - 1), ([a, c], dims.b_hat - 1), ([b, c], dims.a_hat - 1)):
            value = value * box_product_bracket(pair, n)
        return value
    return (box_product([a, b], dims.c_hat - 1)
            * box_product([a, c], dims.b_hat - 1)
            * box_product([b, c], dims.a_hat - 1))


def _first_matching_weight(graph):
    weighted = weigh_graph(graph)
    matching = first_matching(weighted, budget=len(weighted.vertices))
    if matching is None:
        raise InvariantViolation(f'{graph.name} graph of {graph.dims} has no perfect matching')
    return abs(matching_weight(weighted, matching))


def normalization(kind, dims, mode=Mode.CLASSICAL):
    """
    The constant m with det = +-m N for one class

    Closed forms are cross-checked against the weight of one explicit
    matching: the empty plane partition for pp, the first enumerated
    matching of the class graph otherwise.

    Raises:
        InvariantViolation: closed form and matching weight disagree
    """
    mode = Mode(mode)
    _check_dims(kind, dims)
    if mode == Mode.QUANTUM and kind != PP:
        raise ValueError('Quantum normalization is only defined for unrestricted plane partitions')
    if _is_empty_class(kind, dims):
        raise DimensionError(f'{kind.upper()} of {dims} is empty, there is no normalization')
    if kind == PP:
        value = _pp_closed_form(dims, mode)
        graph = weigh_graph(build_hexagon(dims), mode)
        empty = oracle.pp_to_matching(oracle.PlanePartition.empty(dims), graph)
        check = matching_weight(graph, empty)
        tag = PP_Q if mode == Mode.QUANTUM else PP
    elif kind == TCPP:
        full = _pp_closed_form(dims, Mode.CLASSICAL)
        value = exact_root(Fraction(full, odd_double_factorial(2 * dims.a - 1)), 2, f'm for TCPP {dims}')
        check = _first_matching_weight(build_tcpp_graph(dims.a, dims.c // 2))
        tag = TCPP
    elif kind == CSPP:
        value = exact_root(_pp_closed_form(dims, Mode.CLASSICAL), 3, f'm for CSPP {dims}')
        check = _first_matching_weight(build_cspp_graph(dims.a))
        tag = CSPP
    else:
        value = _first_matching_weight(build_cstcpp_graph(dims.a // 2))
        check = value
        tag = CSTCPP
    if check != value:
        raise InvariantViolation(f'Normalization of {kind} {dims}: closed form {value} but matching weight {check}')
    return NormalizationTerm(tag, dims, value)


# Counts

def _class_matrix(kind, dims, mode):
    if kind == PP:
        return pp_matrix(dims, mode)[0]
    if kind == TCPP:
        return tcpp_matrix(dims.a, dims.c // 2)
    if kind == CSPP:
        return cspp_matrix(dims.a)
    return cstcpp_matrix(dims.a // 2)


def _q_count(det, m, dims):
    count = det.exact_div(m)
    if count.coefficient(0) < 0:
        count = -count
    if not count.is_polynomial() or count.coefficient(0) != 1 or count.max_exponent() != dims.volume:
        raise InvariantViolation(f'det/m_q for {dims} is {count}, not a polynomial of degree {dims.volume} '
                                 f'with constant term 1')
    return count


def count_via_determinant(kind, dims, mode=Mode.CLASSICAL):
    """
    det / m for one symmetry class

    Args:
        kind: pp, tcpp, cspp or cstcpp
        dims: BoxDims of the counted box
        mode: Mode.QUANTUM gives the q-count of pp

    Returns:
        CountResult

    Raises:
        InexactDivision: m does not divide the determinant
    """
    mode = Mode(mode)
    _check_dims(kind, dims)
    if _is_empty_class(kind, dims):
        return CountResult(kind, dims, DETERMINANT, 0)
    matrix = _class_matrix(kind, dims, mode)
    if not matrix.is_square():
        raise InvariantViolation(f'{kind} matrix of {dims} is {matrix.shape[0]}x{matrix.shape[1]}')
    det = exact_determinant(matrix)
    m = normalization(kind, dims, mode).value
    if mode == Mode.QUANTUM:
        value = _q_count(det, m, dims)
    else:
        value = ring_div(abs(det), m)
    logger.debug(f'{kind} {dims} by determinant: {value}')
    return CountResult(kind, dims, DETERMINANT, value)


def count_via_formula(kind, dims, mode=Mode.CLASSICAL):
    """Closed product formula, or None for CSTCPP"""
    mode = Mode(mode)
    _check_dims(kind, dims)
    if mode == Mode.QUANTUM:
        if kind != PP:
            raise ValueError('q-counts are only defined for unrestricted plane partitions')
        return CountResult(kind, dims, FORMULA, count_pp_formula_q(dims))
    if kind == PP:
        value = count_pp_formula(dims)
    elif kind == TCPP:
        value = count_tcpp_formula_box(dims.a, dims.c)
    elif kind == CSPP:
        value = count_cspp_formula(dims.a)
    else:
        return None
    return CountResult(kind, dims, FORMULA, value)


def count_via_oracle(kind, dims, mode=Mode.CLASSICAL, budget=oracle.DEFAULT_ORACLE_BUDGET):
    mode = Mode(mode)
    _check_dims(kind, dims)
    if mode == Mode.QUANTUM:
        return CountResult(kind, dims, ORACLE, oracle.q_count_pp(dims, budget))
    return CountResult(kind, dims, ORACLE, oracle.count_pp(dims, oracle.CLASS_FILTERS[kind], budget))


def route_table(kind, dims, mode=Mode.CLASSICAL, oracle_budget=oracle.DEFAULT_ORACLE_BUDGET, routes=None):
    """
    Every requested route for one job and whether they agree

    Returns:
        dict: class, dims, mode, per-route value text (None when the route
        does not exist, 'skipped' when over budget) and agree
    """
    mode = Mode(mode)
    routes = routes or (DETERMINANT, FORMULA, ORACLE)
    values = {}
    table = {}
    for route in routes:
        if route == DETERMINANT:
            result = count_via_determinant(kind, dims, mode)
        elif route == FORMULA:
            result = count_via_formula(kind, dims, mode)
        elif route == ORACLE:
            try:
                result = count_via_oracle(kind, dims, mode, oracle_budget)
            except BudgetExceeded as e:
                if len(routes) == 1:
                    raise
                logger.debug(f'Oracle skipped: {e}')
                table[route] = 'skipped'
                continue
        else:
            raise ValueError(f'Unknown route: {route}')
        if result is None:
            table[route] = None
            continue
        values[route] = result.value
        table[route] = result.text()
    distinct = set(values.values())
    return {
        'class': kind,
        'dims': list(dims.as_tuple()),
        'mode': mode.value,
        'routes': table,
        'agree': len(distinct) <= 1,
    }


# Verification

def _curvature_text(numerator, denominator):
    try:
        return format_poly(ring_div(numerator, denominator)) if isinstance(numerator, LaurentPoly) \
            else str(Fraction(numerator, denominator))
    except ArithmeticError:
        return f'({numerator}) / ({denominator})'


def verify_flatness(graph, expected=None):
    """
    Curvature of every face against the expected value

    Args:
        graph: weighted graph
        expected: curvature every face should have; 1 for integer weights
            and q for Laurent weights when omitted

    Returns:
        dict: per-face curvature, violations and ok
    """
    quantum = any(isinstance(edge.weight, LaurentPoly) for edge in graph.edges)
    if expected is None:
        expected = LaurentPoly.monomial(1) if quantum else 1
    faces = []
    violations = []
    for face in graph.faces:
        numerator, denominator = kasteleyn_curvature(graph, face)
        flat = numerator == expected * denominator
        entry = {
            'kind': face.kind,
            'center': list(face.center),
            'curvature': _curvature_text(numerator, denominator),
            'flat': flat,
        }
        faces.append(entry)
        if not flat:
            violations.append(entry)
    expected_text = format_poly(expected) if isinstance(expected, LaurentPoly) else str(expected)
    return {
        'graph': graph.name,
        'dims': list(graph.dims.as_tuple()),
        'expected': expected_text,
        'faces': faces,
        'violations': violations,
        'ok': not violations,
    }


def _normalized_term_ok(value, quantum):
    if not quantum:
        return value in (1, -1)
    if not isinstance(value, LaurentPoly) or not value.is_monomial():
        return False
    exponent, _ = value.terms()[0]
    return exponent.denominator == 1 and exponent >= 0


def verify_term_equality(graph, m=None, budget=DEFAULT_TERM_CHECK_BUDGET):
    """
    Every determinant term of a weighted graph, one per perfect matching

    Classical terms must all equal the same +-m; quantum terms must be m
    times +-q^n with one common sign.

    Raises:
        BudgetExceeded: a colour class has more than budget vertices
    """
    if len(graph.black) > budget:
        raise BudgetExceeded(f'Term check of {graph.name} {graph.dims} needs {len(graph.black)} vertices per '
                             f'colour, budget is {budget}')
    quantum = any(isinstance(edge.weight, LaurentPoly) for edge in graph.edges)
    rows = {vertex: index for index, vertex in enumerate(graph.white)}
    cols = {vertex: index for index, vertex in enumerate(graph.black)}
    terms = []
    for matching in enumerate_matchings(graph, budget=len(graph.vertices)):
        perm = [0] * len(cols)
        for key in matching:
            edge = graph.edge(key)
            perm[cols[edge.source]] = rows[edge.target]
        terms.append(permutation_sign(perm) * matching_weight(graph, matching))
    if m is None and terms:
        m = terms[0]
        if quantum:
            # the smallest term stands for the empty plane partition
            m = min(terms, key=lambda t: t.min_exponent())
    normalized = [_ratio(term, m) for term in terms]
    signs = {_leading_sign(value) for value in normalized if value is not None}
    ok = len(signs) <= 1 and all(
        value is not None and _normalized_term_ok(_abs_value(value), quantum) for value in normalized
    )
    if not quantum:
        ok = ok and len(set(normalized)) <= 1
    text = [_term_text(term) for term in terms]
    return {
        'graph': graph.name,
        'dims': list(graph.dims.as_tuple()),
        'matchings': len(terms),
        'normalization': format_poly(m) if isinstance(m, LaurentPoly) else str(m),
        'terms': text,
        'ok': ok,
    }


def _ratio(term, m):
    try:
        return ring_div(term, m)
    except ArithmeticError:
        return None


def _term_text(term):
    return format_poly(term) if isinstance(term, LaurentPoly) else str(term)


def _leading_sign(value):
    if isinstance(value, LaurentPoly):
        items = value.scaled_items()
        return 1 if items and items[0][1] > 0 else -1
    return 1 if value > 0 else -1


def _abs_value(value):
    if isinstance(value, LaurentPoly):
        return -value if _leading_sign(value) < 0 else value
    return abs(value)


def determinant_via_dmap(dims):
    """
    det(Y X|_(-1)) three ways: the D map on the character, the box-product
    quotient, and the determinant of the composed block

    Raises:
        InvariantViolation: the three values differ
    """
    rep = ambient_rep(dims)
    from_character = d_map(character(rep))
    hats = [dims.c_hat, dims.b_hat, dims.a_hat]
    from_products = Fraction(box_product(hats, dims.d - 1) ** 2, box_product(hats, dims.d - 2) ** 2)
    direct = Fraction(exact_determinant(composed_block(rep, -1)))
    if not from_character == from_products == direct:
        raise InvariantViolation(f'det(YX) for {dims}: D map {from_character}, products {from_products}, '
                                 f'direct {direct}')
    return from_character
