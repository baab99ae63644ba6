from itertools import product

import pytest

from exceptions import BudgetExceeded, DimensionError
from services.hexgraph import (
    KAPPA_TAU, RHO, TriCoord, apply_symmetry, build_cspp_graph, build_cstcpp_graph, build_hexagon,
    build_tcpp_graph, enumerate_matchings, first_matching, fixed_edges, graph_to_json, kasteleyn_curvature,
    render_tiling_svg,
)
from services.products import BoxDims, count_pp_formula


def matching_count(graph):
    return sum(1 for _ in enumerate_matchings(graph))


@pytest.mark.parametrize('sides, vertices, matchings', [
    ((1, 1, 1), 6, 2),
    ((1, 1, 2), 10, 3),
    ((2, 2, 2), 24, 20),
    ((2, 2, 3), 32, 50),
])
def test_hexagon_sizes(sides, vertices, matchings):
    graph = build_hexagon(BoxDims(*sides))
    assert len(graph.vertices) == vertices
    assert graph.is_balanced()
    assert matching_count(graph) == matchings


def test_hexagon_matchings_match_macmahon():
    for sides in product(range(1, 4), repeat=3):
        dims = BoxDims(*sides)
        assert matching_count(build_hexagon(dims)) == count_pp_formula(dims)


def test_hexagon_degrees_and_faces():
    graph = build_hexagon(BoxDims(2, 2, 3))
    adjacency = graph.adjacency()
    assert max(len(edges) for edges in adjacency.values()) <= 3
    for face in graph.faces:
        assert face.kind == 'hexagon'
        keys = set(face.positive) | set(face.negative)
        assert len(keys) == 6
        assert all(graph.edge(key) for key in keys)
    # interior lattice points: ab + bc + ca - a - b - c + 1
    assert len(graph.faces) == 10


def test_triangles_lie_on_two_levels():
    dims = BoxDims(2, 3, 4)
    graph = build_hexagon(dims)
    assert all(sum(v.coords) == dims.d + 1 for v in graph.black)
    assert all(sum(v.coords) == dims.d + 2 for v in graph.white)


def test_matchings_cover_every_vertex_once():
    graph = build_hexagon(BoxDims(2, 2, 2))
    for matching in enumerate_matchings(graph):
        covered = [v for key in matching for v in (graph.edge(key).source, graph.edge(key).target)]
        assert sorted(covered) == sorted(graph.vertices)


def test_rho_orbits_on_unit_hexagon():
    graph = build_hexagon(BoxDims(1, 1, 1))
    action = apply_symmetry(graph, RHO)
    orbits = set()
    for vertex in graph.vertices:
        orbit = {vertex, action.vertex_map[vertex], action.vertex_map[action.vertex_map[vertex]]}
        assert len(orbit) == 3
        orbits.add(frozenset(orbit))
    assert len(orbits) == 2


def test_symmetries_respect_adjacency():
    graph = build_hexagon(BoxDims(2, 2, 2))
    for symmetry in (RHO, KAPPA_TAU):
        action = apply_symmetry(graph, symmetry)
        for edge in graph.edges:
            image = graph.edge(action.edge_map[edge.key])
            assert image.source == action.vertex_map[edge.source]
            assert image.target == action.vertex_map[edge.target]


def test_kappa_tau_is_an_involution():
    graph = build_hexagon(BoxDims(2, 2, 4))
    action = apply_symmetry(graph, KAPPA_TAU)
    for vertex in graph.vertices:
        assert action.vertex_map[action.vertex_map[vertex]] == vertex
    assert len(fixed_edges(graph, action)) == 2


def test_kappa_tau_fixes_one_row_on_small_box():
    graph = build_hexagon(BoxDims(1, 1, 2))
    assert len(fixed_edges(graph, apply_symmetry(graph, KAPPA_TAU))) == 1


def test_symmetry_needs_compatible_dims():
    with pytest.raises(DimensionError):
        apply_symmetry(build_hexagon(BoxDims(1, 2, 2)), RHO)
    with pytest.raises(DimensionError):
        apply_symmetry(build_hexagon(BoxDims(1, 2, 2)), KAPPA_TAU)


@pytest.mark.parametrize('a, b, matchings', [(1, 1, 1), (2, 1, 2), (1, 2, 1), (3, 1, 5)])
def test_tcpp_graph(a, b, matchings):
    graph = build_tcpp_graph(a, b)
    full = build_hexagon(BoxDims(a, a, 2 * b))
    assert len(graph.vertices) == (len(full.vertices) - 2 * a) // 2
    assert graph.is_balanced()
    assert all(v.j < v.k for v in graph.vertices)
    assert matching_count(graph) == matchings


def test_cspp_graph_unit():
    graph = build_cspp_graph(1)
    assert len(graph.vertices) == 2
    assert len(graph.edges) == 2
    assert matching_count(graph) == 2
    assert [face.kind for face in graph.faces] == ['digon']


@pytest.mark.parametrize('a, matchings', [(1, 2), (2, 5), (3, 20)])
def test_cspp_graph(a, matchings):
    graph = build_cspp_graph(a)
    full = build_hexagon(BoxDims(a, a, a))
    assert len(graph.vertices) == len(full.vertices) // 3
    assert [face.kind for face in graph.faces].count('digon') == 1
    assert matching_count(graph) == matchings


@pytest.mark.parametrize('a, matchings', [(1, 1), (2, 2)])
def test_cstcpp_graph(a, matchings):
    graph = build_cstcpp_graph(a)
    assert graph.is_balanced()
    assert all(v.i < v.j < v.k for v in graph.vertices)
    assert matching_count(graph) == matchings


def test_unit_curvature():
    graph = build_hexagon(BoxDims(2, 2, 3))
    for face in graph.faces:
        assert kasteleyn_curvature(graph, face) == (1, 1)


def test_zero_weight_is_rejected():
    graph = build_hexagon(BoxDims(1, 1, 1)).with_weights(lambda edge: 0)
    with pytest.raises(ValueError):
        kasteleyn_curvature(graph, graph.faces[0])


def test_budget_refusal():
    graph = build_hexagon(BoxDims(4, 4, 4))
    with pytest.raises(BudgetExceeded):
        list(enumerate_matchings(graph, budget=50))


def test_graph_to_json():
    data = graph_to_json(build_cspp_graph(1))
    assert data['name'] == 'cspp'
    assert data['dims'] == [1, 1, 1]
    assert len(data['edges']) == 2
    assert data['faces'][0]['kind'] == 'digon'
    assert all(edge['weight'] == '1' for edge in data['edges'])


def test_render_is_deterministic():
    graph = build_hexagon(BoxDims(1, 1, 1))
    matching = first_matching(graph)
    svg = render_tiling_svg(graph, matching)
    assert svg == render_tiling_svg(graph, matching)
    assert svg.startswith('<?xml')
    assert svg.count('<polygon') == 3
    assert all(f'class="lozenge-{factor}"' in svg for factor in range(3))


def test_tricoord_moves():
    up = TriCoord(1, 2, 3, True)
    assert up.raised(0) == TriCoord(2, 2, 3, False)
    assert up.raised(0).lowered(0) == up
    assert up.permuted((1, 2, 0)) == TriCoord(2, 3, 1, True)
