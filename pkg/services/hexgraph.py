"""
Hexagon geometry and matching graphs
Triangles of the hexagon H(a,b,c) are addressed by their three lattice-line
coordinates (i, j, k).  Up triangles satisfy i + j + k = d + 1, down
triangles i + j + k = d + 2, and two triangles share an edge exactly when the
down triangle is the up triangle with one coordinate raised by one.
"""
import logging
import math
from collections import deque
from dataclasses import dataclass, field, replace
from typing import NamedTuple

from exceptions import BudgetExceeded, DimensionError
from services.exactnum import LaurentPoly, format_poly, is_zero
from services.products import BoxDims

logger = logging.getLogger(__name__)

DEFAULT_MATCHING_BUDGET = 120

PP, TCPP, CSPP, CSTCPP = 'pp', 'tcpp', 'cspp', 'cstcpp'
RHO, KAPPA_TAU = 'rho', 'kappa_tau'


class TriCoord(NamedTuple):
    """A unit triangle; up triangles form the black colour class"""
    i: int
    j: int
    k: int
    up: bool

    @property
    def coords(self):
        return (self.i, self.j, self.k)

    def raised(self, m):
        coords = list(self.coords)
        coords[m] += 1
        return TriCoord(*coords, up=False)

    def lowered(self, m):
        coords = list(self.coords)
        coords[m] -= 1
        return TriCoord(*coords, up=True)

    def permuted(self, order):
        """Coordinate permutation: new coordinate p is old coordinate order[p]"""
        coords = self.coords
        return TriCoord(*(coords[p] for p in order), up=self.up)

    def __str__(self):
        return f"{'U' if self.up else 'D'}({self.i},{self.j},{self.k})"


@dataclass(frozen=True)
class Edge:
    """
    A graph edge

    source and target are vertex labels of the graph; origin and factor
    name the underlying edge of Z(a,b,c): the up triangle and the raised
    coordinate.  (origin, factor) is the edge identity, so parallel edges of
    a quotient graph stay distinct.
    """
    source: TriCoord
    target: TriCoord
    factor: int
    origin: TriCoord
    weight: object = 1

    @property
    def key(self):
        return (self.origin, self.factor)


@dataclass(frozen=True)
class Face:
    """A hexagon (three edges per side) or a 2-gon (one edge per side)"""
    kind: str
    center: tuple
    positive: tuple
    negative: tuple


@dataclass(frozen=True)
class WeightedGraph:
    name: str
    dims: BoxDims
    black: tuple
    white: tuple
    edges: tuple
    faces: tuple
    _edge_map: dict = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, '_edge_map', {edge.key: edge for edge in self.edges})

    @property
    def vertices(self):
        return self.black + self.white

    def edge(self, key):
        return self._edge_map[key]

    def adjacency(self):
        """Vertex -> list of incident edges"""
        table = {vertex: [] for vertex in self.vertices}
        for edge in self.edges:
            table[edge.source].append(edge)
            table[edge.target].append(edge)
        return table

    def with_weights(self, weigh):
        """New graph whose edge weights are weigh(edge)"""
        edges = tuple(replace(edge, weight=weigh(edge)) for edge in self.edges)
        return replace(self, edges=edges)

    def is_balanced(self):
        return len(self.black) == len(self.white)


def _in_hexagon(coord, dims):
    i, j, k = coord.coords
    return 1 <= i <= dims.c_hat and 1 <= j <= dims.b_hat and 1 <= k <= dims.a_hat


def _triangles(dims, up):
    level = dims.d + 1 if up else dims.d + 2
    cells = []
    for i in range(1, dims.c_hat + 1):
        for j in range(1, dims.b_hat + 1):
            k = level - i - j
            if 1 <= k <= dims.a_hat:
                cells.append(TriCoord(i, j, k, up))
    return cells


def _hexagon_faces(dims, members):
    """Faces of Z(a,b,c) whose six triangles all lie in members"""
    faces = []
    for ci in range(0, dims.c_hat + 1):
        for cj in range(0, dims.b_hat + 1):
            center = (ci, cj, dims.d - ci - cj)
            ups = []
            for m in range(3):
                coords = list(center)
                coords[m] += 1
                ups.append(TriCoord(*coords, up=True))
            downs = [ups[n].raised(m) for n in range(3) for m in range(3) if m != n]
            if not all(cell in members for cell in ups + downs):
                continue
            # numerator edges raise coordinate m at the up triangle u_(m+1)
            positive = tuple((ups[(m + 1) % 3], m) for m in range(3))
            negative = tuple((ups[(m + 2) % 3], m) for m in range(3))
            faces.append(Face('hexagon', center, positive, negative))
    return faces


def build_hexagon(dims):
    """
    The graph Z(a,b,c) of the triangulated hexagon H(a,b,c)

    Args:
        dims: BoxDims

    Returns:
        WeightedGraph with unit weights
    """
    black = _triangles(dims, up=True)
    white = _triangles(dims, up=False)
    members = set(black) | set(white)
    edges = []
    for up in black:
        for m in range(3):
            down = up.raised(m)
            if down in members:
                edges.append(Edge(up, down, m, up))
    graph = WeightedGraph(PP, dims, tuple(black), tuple(white), tuple(edges),
                          tuple(_hexagon_faces(dims, members)))
    logger.debug(f'Built Z({dims}) with {len(graph.vertices)} vertices')
    return graph


# Symmetries

ROTATION = (1, 2, 0)
SWAP = (0, 2, 1)


def _symmetry_order(dims, symmetry):
    if symmetry == RHO:
        if not dims.a == dims.b == dims.c:
            raise DimensionError(f'rho needs a = b = c, got {dims}')
        return ROTATION
    if symmetry == KAPPA_TAU:
        if dims.a != dims.b:
            raise DimensionError(f'kappa-tau needs a = b, got {dims}')
        return SWAP
    raise ValueError(f'Unknown symmetry: {symmetry}')


@dataclass(frozen=True)
class SymmetryAction:
    symmetry: str
    vertex_map: dict
    edge_map: dict


def _edge_image(key, order):
    origin, factor = key
    return (origin.permuted(order), order.index(factor))


def apply_symmetry(graph, symmetry):
    """
    Permutation of vertices and edges of Z(a,b,c) induced by rho or kappa-tau

    rho rotates the hexagon by 120 degrees; kappa-tau reflects it about the
    bisector that swaps the two equal sides.
    """
    if graph.name != PP:
        raise ValueError('Symmetries act on the full graph Z(a,b,c)')
    order = _symmetry_order(graph.dims, symmetry)
    vertex_map = {vertex: vertex.permuted(order) for vertex in graph.vertices}
    edge_map = {edge.key: _edge_image(edge.key, order) for edge in graph.edges}
    return SymmetryAction(symmetry, vertex_map, edge_map)


def fixed_edges(graph, action):
    return [key for key, image in action.edge_map.items() if image == key]


def _least_component(vertices, edges):
    """Vertices of the connected component holding the lexicographically least vertex"""
    table = {vertex: set() for vertex in vertices}
    for up, down in edges:
        table[up].add(down)
        table[down].add(up)
    start = min(vertices, key=lambda v: (v.coords, not v.up))
    seen = {start}
    queue = deque([start])
    while queue:
        vertex = queue.popleft()
        for neighbour in table[vertex]:
            if neighbour not in seen:
                seen.add(neighbour)
                queue.append(neighbour)
    return seen


def _chamber_graph(name, dims, keep):
    """Component of Z(dims) restricted to triangles passing keep()"""
    full = build_hexagon(dims)
    kept = [vertex for vertex in full.vertices if keep(vertex)]
    pairs = [(edge.source, edge.target) for edge in full.edges
             if keep(edge.source) and keep(edge.target)]
    component = _least_component(kept, pairs)
    edges = tuple(edge for edge in full.edges if edge.source in component and edge.target in component)
    faces = tuple(_hexagon_faces(dims, component))
    black = tuple(vertex for vertex in full.black if vertex in component)
    white = tuple(vertex for vertex in full.white if vertex in component)
    return WeightedGraph(name, dims, black, white, edges, faces)


def build_tcpp_graph(a, b):
    """Z_kt(a,a,2b): one half of Z(a,a,2b) after deleting the fixed edge row"""
    if a < 1 or b < 1:
        raise DimensionError(f'TCPP graph needs a, b >= 1, got ({a}, {b})')
    return _chamber_graph(TCPP, BoxDims(a, a, 2 * b), lambda v: v.j != v.k)


def build_cstcpp_graph(a):
    """Z_(rho,kt)(2a,2a,2a): one of the six chambers cut out by the bisectors"""
    if a < 1:
        raise DimensionError(f'CSTCPP graph needs a >= 1, got {a}')
    return _chamber_graph(CSTCPP, BoxDims(2 * a, 2 * a, 2 * a),
                          lambda v: len(set(v.coords)) == 3)


def _rotations(coord):
    return [coord, coord.permuted(ROTATION), coord.permuted(ROTATION).permuted(ROTATION)]


def orbit_rep(coord):
    return min(_rotations(coord), key=lambda v: v.coords)


def _canonical_edge(key):
    """Rotate a Z edge until its down triangle is an orbit representative"""
    for turns in range(3):
        origin, factor = key
        if origin.raised(factor) == orbit_rep(origin.raised(factor)):
            return key
        key = _edge_image(key, ROTATION)
    raise AssertionError('rotation orbit without representative')


def build_cspp_graph(a):
    """
    Z_rho(a,a,a) = Z(a,a,a)/rho as a multigraph

    Each quotient edge is represented by the Z edge that ends at the
    representative of its down orbit; the central face becomes a 2-gon.
    """
    if a < 1:
        raise DimensionError(f'CSPP graph needs a >= 1, got {a}')
    dims = BoxDims(a, a, a)
    full = build_hexagon(dims)
    members = set(full.vertices)
    black = tuple(sorted({orbit_rep(v) for v in full.black}, key=lambda v: v.coords))
    white = tuple(sorted({orbit_rep(v) for v in full.white}, key=lambda v: v.coords))
    edges = []
    for target in white:
        for m in range(3):
            origin = target.lowered(m)
            if origin in members:
                edges.append(Edge(orbit_rep(origin), target, m, origin))
    faces = {}
    for face in full.faces:
        center = min(_rotations(TriCoord(*face.center, up=True)), key=lambda v: v.coords).coords
        if center in faces:
            continue
        positive = tuple(dict.fromkeys(_canonical_edge(key) for key in face.positive))
        negative = tuple(dict.fromkeys(_canonical_edge(key) for key in face.negative))
        kind = 'digon' if len(positive) == 1 else 'hexagon'
        faces[center] = Face(kind, center, positive, negative)
    return WeightedGraph(CSPP, dims, black, white, tuple(edges), tuple(faces.values()))


# Curvature

def kasteleyn_curvature(graph, face):
    """
    Curvature of a face as a (numerator, denominator) pair

    The numerator multiplies the positive edges x1 y1 z1 (x1 for a 2-gon)
    and the denominator the negative edges.
    """
    numerator, denominator = 1, 1
    for key in face.positive:
        weight = graph.edge(key).weight
        if is_zero(weight):
            raise ValueError(f'Zero weight on face edge {key}')
        numerator = numerator * weight
    for key in face.negative:
        weight = graph.edge(key).weight
        if is_zero(weight):
            raise ValueError(f'Zero weight on face edge {key}')
        denominator = denominator * weight
    return numerator, denominator


# Matchings

def enumerate_matchings(graph, budget=DEFAULT_MATCHING_BUDGET):
    """
    Every perfect matching of graph exactly once, as a frozenset of edge keys

    Backtracks on the uncovered vertex with the fewest usable edges.

    Raises:
        BudgetExceeded: graph has more than budget vertices
    """
    if len(graph.vertices) > budget:
        raise BudgetExceeded(
            f'{graph.name} graph of {graph.dims} has {len(graph.vertices)} vertices, budget is {budget}'
        )
    adjacency = graph.adjacency()
    covered = set()
    chosen = []

    def usable(vertex):
        return [edge for edge in adjacency[vertex]
                if edge.source not in covered and edge.target not in covered]

    def search():
        best, options = None, None
        for vertex in adjacency:
            if vertex in covered:
                continue
            candidates = usable(vertex)
            if best is None or len(candidates) < len(options):
                best, options = vertex, candidates
                if not candidates:
                    break
        if best is None:
            yield frozenset(chosen)
            return
        for edge in options:
            covered.update((edge.source, edge.target))
            chosen.append(edge.key)
            yield from search()
            chosen.pop()
            covered.difference_update((edge.source, edge.target))

    yield from search()


def first_matching(graph, budget=DEFAULT_MATCHING_BUDGET):
    for matching in enumerate_matchings(graph, budget):
        return matching
    return None


# Output

def _weight_text(weight):
    if isinstance(weight, LaurentPoly):
        return format_poly(weight)
    return str(weight)


def graph_to_json(graph):
    """Plain-data dump: vertices, weighted edges and faces"""
    def label(vertex):
        return {'coord': list(vertex.coords), 'up': vertex.up}

    return {
        'name': graph.name,
        'dims': list(graph.dims.as_tuple()),
        'vertices': [label(v) for v in graph.vertices],
        'edges': [
            {
                'source': list(edge.source.coords),
                'target': list(edge.target.coords),
                'factor': edge.factor,
                'origin': list(edge.origin.coords),
                'weight': _weight_text(edge.weight),
            }
            for edge in graph.edges
        ],
        'faces': [
            {
                'kind': face.kind,
                'center': list(face.center),
                'positive': [[list(o.coords), m] for o, m in face.positive],
                'negative': [[list(o.coords), m] for o, m in face.negative],
            }
            for face in graph.faces
        ],
    }


LOZENGE_COLORS = ('#e8a33d', '#3d7ee8', '#6cc24a')
_DIRECTIONS = [(math.cos(math.radians(angle)), math.sin(math.radians(angle))) for angle in (90, 210, 330)]


def _centroid(coord, step):
    x = sum(c * d[0] for c, d in zip(coord.coords, _DIRECTIONS)) * step
    y = sum(c * d[1] for c, d in zip(coord.coords, _DIRECTIONS)) * step
    return x, -y


def _lozenge(edge, step):
    cx, cy = _centroid(edge.origin, step)
    m = edge.factor

    def offset(n, scale):
        dx, dy = _DIRECTIONS[n]
        return (cx + dx * step * scale, cy - dy * step * scale)

    others = [n for n in range(3) if n != m]
    return [offset(m, -1), offset(others[0], -1), offset(m, 2), offset(others[1], -1)]


def render_tiling_svg(graph, matching, unit=40):
    """
    SVG 1.1 drawing of the lozenge tiling given by a matching

    Args:
        graph: the matched graph
        matching: iterable of edge keys
        unit: pixel length of a triangle side

    Returns:
        str: the SVG document
    """
    step = unit / math.sqrt(3)
    shapes = [(graph.edge(key).factor, _lozenge(graph.edge(key), step))
              for key in sorted(matching, key=lambda k: (k[0].coords, k[1]))]
    xs = [x for _, points in shapes for x, _ in points]
    ys = [y for _, points in shapes for _, y in points]
    margin = unit / 4
    left, top = min(xs) - margin, min(ys) - margin
    width, height = max(xs) - left + margin, max(ys) - top + margin
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.2f}" height="{height:.2f}" '
        f'viewBox="0 0 {width:.2f} {height:.2f}">',
        '  <style>',
    ]
    for factor, color in enumerate(LOZENGE_COLORS):
        lines.append(f'    .lozenge-{factor} {{ fill: {color}; stroke: #222; stroke-width: 1; }}')
    lines.append('  </style>')
    for factor, points in shapes:
        path = ' '.join(f'{x - left:.2f},{y - top:.2f}' for x, y in points)
        lines.append(f'  <polygon class="lozenge-{factor}" points="{path}" />')
    lines.append('</svg>')
    return '\n'.join(lines) + '\n'
