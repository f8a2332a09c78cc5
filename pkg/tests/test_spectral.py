from fractions import Fraction

import numpy as np
import pytest

from core.errors import DomainError, NumericError
from core.families import FamilyId, build_family
from core.graph import Graph, PrimitiveKind, build_primitive, disjoint_union, join
from core.spectral import (check_rotation_monotonicity, degree_bound_report, is_star,
                           perron_identity, perron_vector, power_iteration, q_index,
                           rayleigh_gain, rotate_edges, star_bound_holds, timed_q_index)


def _complete(n):
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def _complete_bipartite(a, b):
    return Graph.from_edges(a + b, [(u, a + v) for u in range(a) for v in range(b)])


class TestQIndex:
    @pytest.mark.parametrize("n", range(2, 8))
    def test_complete_graph(self, n):
        assert q_index(_complete(n)).q == pytest.approx(2 * n - 2, abs=1e-9)

    @pytest.mark.parametrize("n", range(2, 9))
    def test_star(self, n):
        assert q_index(build_primitive(PrimitiveKind.STAR, n)).q == pytest.approx(n, abs=1e-9)

    @pytest.mark.parametrize("n", [3, 4, 7])
    def test_cycle(self, n):
        assert q_index(build_primitive(PrimitiveKind.CYCLE, n)).q == pytest.approx(4.0, abs=1e-9)

    def test_residual_is_certified(self):
        result = q_index(build_family(FamilyId.L4, 6).graph)
        assert result.residual <= 1e-8

    def test_disconnected_graph_takes_largest_component(self):
        g = disjoint_union([build_primitive(PrimitiveKind.PATH, 2), _complete(4)])
        result = q_index(g)
        assert result.q == pytest.approx(6.0, abs=1e-9)
        assert sorted(result.component_q) == pytest.approx([2.0, 6.0], abs=1e-9)
        assert np.all(result.perron[:2] == 0)
        assert np.all(result.perron[2:] > 0)

    def test_isolated_vertices(self):
        g = Graph.from_edges(3, [(0, 1)])
        assert q_index(g).q == pytest.approx(2.0, abs=1e-9)
        assert q_index(Graph(2, frozenset())).q == 0.0

    def test_joining_a_vertex_raises_q(self, atlas_graphs):
        for g in atlas_graphs[1::4]:
            joined = join(Graph(1, frozenset()), g)
            assert q_index(joined).q > q_index(g).q + 1e-10

    def test_power_solver_agrees_with_eigh(self):
        g = build_family(FamilyId.K1vS3P1, 5).graph
        assert q_index(g, solver='power').q == pytest.approx(q_index(g).q, abs=1e-8)
        assert q_index(g, solver='power').solver == 'power'

    def test_rejects_empty_graph_and_tiny_tolerance(self):
        with pytest.raises(DomainError):
            q_index(Graph(0, frozenset()))
        with pytest.raises(DomainError):
            q_index(_complete(3), tol=1e-13)

    def test_power_iteration_reports_non_convergence(self):
        matrix = build_primitive(PrimitiveKind.PATH, 3).signless_laplacian().astype(float)
        with pytest.raises(NumericError) as info:
            power_iteration(matrix, tol=1e-12, max_iterations=1)
        assert info.value.best_vector is not None
        assert info.value.iterations == 1

    def test_timed_q_index(self):
        graphs = [build_primitive(PrimitiveKind.STAR, n) for n in (3, 4)]
        assert [r.q for r in timed_q_index(graphs, "stars")] == pytest.approx([3.0, 4.0])


class TestPerron:
    def test_perron_vector_is_positive_unit(self):
        x = perron_vector(build_family(FamilyId.L2, 4).graph)
        assert np.all(x > 0)
        assert np.linalg.norm(x) == pytest.approx(1.0)

    def test_identity_equals_q(self):
        g = build_family(FamilyId.K1vC4P1, 5).graph
        x = perron_vector(g)
        assert perron_identity(g, x) == pytest.approx(q_index(g).q, abs=1e-8)

    def test_requires_connected_graph(self):
        with pytest.raises(DomainError):
            perron_vector(Graph.from_edges(3, [(0, 1)]))


class TestDegreeBounds:
    def test_star_attains_the_bound(self):
        report = degree_bound_report(build_primitive(PrimitiveKind.STAR, 4))
        assert report.max_d_plus_m == Fraction(4)
        assert report.lemma24_ok
        assert report.violations == []

    def test_exact_average_degree(self):
        report = degree_bound_report(build_primitive(PrimitiveKind.PATH, 4))
        by_vertex = {r.vertex: r for r in report.records}
        assert by_vertex[1].average_degree == Fraction(3, 2)
        assert by_vertex[1].first_cap == Fraction(2)
        assert report.max_d_plus_m == Fraction(7, 2)

    def test_q_below_bound(self):
        g = build_family(FamilyId.K1vS5P1, 4).graph
        assert q_index(g).q <= float(degree_bound_report(g).max_d_plus_m) + 1e-8

    def test_isolated_vertices_are_skipped(self):
        report = degree_bound_report(Graph.from_edges(4, [(0, 1), (1, 2)]))
        assert {r.vertex for r in report.records} == {0, 1, 2}

    def test_edgeless_graph_rejected(self):
        with pytest.raises(DomainError):
            degree_bound_report(Graph(3, frozenset()))

    @pytest.mark.parametrize("g", [
        build_primitive(PrimitiveKind.CYCLE, 6),
        build_primitive(PrimitiveKind.CYCLE, 9),
        _complete(5),
        _complete_bipartite(2, 3),
        _complete_bipartite(3, 5),
        build_primitive(PrimitiveKind.STAR, 5),
    ], ids=["C6", "C9", "K5", "K2,3", "K3,5", "K1,4"])
    def test_equality_on_regular_and_biregular_graphs(self, g):
        report = degree_bound_report(g)
        assert q_index(g).q == pytest.approx(float(report.max_d_plus_m), abs=1e-8)

    def test_strict_on_the_paw(self):
        paw = build_primitive(PrimitiveKind.STAR_PLUS, 4)
        report = degree_bound_report(paw)
        assert report.max_d_plus_m == Fraction(14, 3)
        assert q_index(paw).q < float(report.max_d_plus_m) - 1e-3


class TestRotation:
    def test_path_rotates_into_star(self):
        p4 = build_primitive(PrimitiveKind.PATH, 4)
        rotated = rotate_edges(p4, 1, 2, [3])
        assert is_star(rotated)
        assert check_rotation_monotonicity(p4, 1, 2, [3])

    @pytest.mark.parametrize("u, v, moved", [
        (1, 1, [0]),
        (1, 2, [0]),
        (1, 2, [1]),
        (0, 9, [1]),
    ])
    def test_invalid_rotation(self, u, v, moved):
        with pytest.raises(DomainError):
            rotate_edges(build_primitive(PrimitiveKind.PATH, 4), u, v, moved)

    def test_rotation_against_perron_order_rejected(self):
        p4 = build_primitive(PrimitiveKind.PATH, 4)
        # the end vertex 0 has a smaller Perron entry than its neighbor 1
        with pytest.raises(DomainError):
            check_rotation_monotonicity(p4, 0, 2, [3])

    def test_disconnected_graph_rejected(self):
        with pytest.raises(DomainError):
            rotate_edges(Graph.from_edges(4, [(0, 1), (2, 3)]), 0, 1, [])

    def test_rayleigh_gain(self):
        p3 = build_primitive(PrimitiveKind.PATH, 3)
        x = perron_vector(p3)
        gain = rayleigh_gain(p3, removed=[], added=[(0, 2)])
        assert gain == pytest.approx((x[0] + x[2]) ** 2)
        padded = rayleigh_gain(p3, removed=[(1, 2)], added=[(1, 3)], extra_vertices=1)
        assert padded < 0


class TestStarBound:
    @pytest.mark.parametrize("n", range(2, 8))
    def test_equality_for_stars(self, n):
        star = build_primitive(PrimitiveKind.STAR, n)
        assert is_star(star)
        assert star_bound_holds(star)

    def test_strict_for_non_stars(self):
        for g in (build_primitive(PrimitiveKind.STAR_PLUS, 5), build_primitive(PrimitiveKind.PATH, 5),
                  build_family(FamilyId.L5, 3).graph):
            assert not is_star(g)
            assert star_bound_holds(g)
            assert q_index(g).q > max(g.degrees) + 1

    def test_star_with_isolated_vertex(self):
        assert is_star(Graph.from_edges(4, [(0, 1), (0, 2)]))

    def test_requires_connected_graph(self):
        with pytest.raises(DomainError):
            star_bound_holds(Graph.from_edges(3, [(0, 1)]))
