import itertools

import networkx as nx
import pytest

from core.canonical import canonical_form, canonical_key
from core.certificates import Status
from core.enumeration import (EnumerationCache, GraphEnumerator, GraphFilter, delta_bound,
                              enumerate_graphs, extremal_search, verify_delta_bound)
from core.errors import CapabilityError, DomainError
from core.families import FamilyId, build_family
from core.graph import Graph, PrimitiveKind, build_primitive
from core.graph_io import decode_graph6, encode_graph6

# A000664: graphs with m edges and no isolated vertices
EDGE_COUNTS = {1: 1, 2: 2, 3: 5, 4: 11, 5: 26, 6: 68}


def _atlas_classes(atlas_graphs, m, max_n):
    return [g for g in atlas_graphs
            if g.m == m and g.n <= max_n and min(g.degrees, default=0) > 0]


def _pairwise_non_isomorphic(graphs):
    nx_graphs = [g.to_networkx() for g in graphs]
    for a, b in itertools.combinations(nx_graphs, 2):
        if nx.faster_could_be_isomorphic(a, b) and nx.is_isomorphic(a, b):
            return False
    return True


class TestGraphFilter:
    def test_parse(self):
        assert GraphFilter.parse("two_leaves_free") is GraphFilter.TWO_LEAVES_FREE
        assert GraphFilter.parse("Leaf-Free") is GraphFilter.LEAF_FREE
        with pytest.raises(DomainError):
            GraphFilter.parse("trees")

    def test_accepts(self):
        paw = build_primitive(PrimitiveKind.STAR_PLUS, 4)
        p4 = build_primitive(PrimitiveKind.PATH, 4)
        assert GraphFilter.TWO_LEAVES_FREE.accepts(paw)
        assert not GraphFilter.LEAF_FREE.accepts(paw)
        assert not GraphFilter.TWO_LEAVES_FREE.accepts(p4)
        assert GraphFilter.ALL.accepts(p4)


class TestEnumeration:
    def test_three_edges(self):
        graphs = list(enumerate_graphs(3, max_n=6))
        assert len(graphs) == 5
        assert len({canonical_key(g) for g in graphs}) == 5

    def test_default_vertex_cap_is_m_plus_one(self):
        graphs = list(enumerate_graphs(3))
        assert len(graphs) == 3
        assert all(g.n <= 4 for g in graphs)

    def test_three_edges_two_leaves_free(self):
        graphs = list(enumerate_graphs(3, max_n=6, graph_filter=GraphFilter.TWO_LEAVES_FREE))
        assert [encode_graph6(g) for g in graphs] == ["Bw"]

    def test_four_edges_two_leaves_free(self):
        graphs = list(enumerate_graphs(4, graph_filter=GraphFilter.TWO_LEAVES_FREE))
        expected = {canonical_key(build_primitive(PrimitiveKind.CYCLE, 4)),
                    canonical_key(build_primitive(PrimitiveKind.STAR_PLUS, 4))}
        assert {canonical_key(g) for g in graphs} == expected

    def test_leaf_free(self):
        graphs = list(enumerate_graphs(6, max_n=6, graph_filter=GraphFilter.LEAF_FREE))
        assert all(min(g.degrees) >= 2 for g in graphs)
        assert canonical_key(build_primitive(PrimitiveKind.CYCLE, 6)) in \
            {canonical_key(g) for g in graphs}

    def test_zero_edges(self):
        assert list(enumerate_graphs(0)) == [Graph(0, frozenset())]

    def test_sorted_by_graph6_and_canonical(self):
        graphs = list(enumerate_graphs(4, max_n=8))
        codes = [encode_graph6(g) for g in graphs]
        assert codes == sorted(codes)
        assert all(decode_graph6(code) == g for code, g in zip(codes, graphs))

    @pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
    def test_counts_without_vertex_cap(self, m):
        assert len(list(enumerate_graphs(m, max_n=2 * m))) == EDGE_COUNTS[m]

    @pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
    def test_matches_graph_atlas(self, atlas_graphs, m):
        max_n = min(m + 1, 7)
        ours = list(enumerate_graphs(m, max_n=max_n))
        oracle = _atlas_classes(atlas_graphs, m, max_n)
        assert len(ours) == len(oracle)
        assert {canonical_key(g) for g in ours} == {canonical_key(g) for g in oracle}
        assert _pairwise_non_isomorphic(ours)

    @pytest.mark.slow
    def test_six_edges_matches_graph_atlas(self, atlas_graphs):
        ours = list(enumerate_graphs(6, max_n=7))
        oracle = _atlas_classes(atlas_graphs, 6, 7)
        assert len(ours) == len(oracle)
        assert {canonical_key(g) for g in ours} == {canonical_key(g) for g in oracle}
        assert _pairwise_non_isomorphic(ours)

    @pytest.mark.slow
    def test_six_edges_without_vertex_cap(self):
        assert len(list(enumerate_graphs(6, max_n=12))) == EDGE_COUNTS[6]

    def test_worker_pool_matches_sequential(self, config):
        sequential = list(enumerate_graphs(5, max_n=6, workers=1))
        config.enumeration.parallel_threshold = 1
        pooled = list(enumerate_graphs(5, max_n=6, workers=2))
        assert pooled == sequential


class TestCaps:
    def test_negative_m(self):
        with pytest.raises(DomainError):
            list(enumerate_graphs(-1))

    def test_edge_cap(self):
        with pytest.raises(CapabilityError):
            list(enumerate_graphs(11))

    def test_vertex_cap(self):
        with pytest.raises(CapabilityError):
            list(enumerate_graphs(6, max_n=13))

    def test_canonical_bound_cap(self, config):
        config.enumeration.canonical_bound = 8
        with pytest.raises(CapabilityError):
            GraphEnumerator().resolve_max_n(6, 10)

    def test_default_respects_vertex_cap(self, config):
        config.enumeration.max_n_cap = 6
        config.enumeration.canonical_bound = 6
        assert GraphEnumerator().resolve_max_n(9, None) == 6


class TestCache:
    def test_round_trip(self, tmp_path):
        first = list(enumerate_graphs(4, max_n=8, use_cache=True))
        cache = EnumerationCache(".qindex_cache")
        path = cache.path(4, 8, GraphFilter.ALL)
        assert path.exists()
        assert len(path.read_text().splitlines()) == 11
        assert cache.load(4, 8, GraphFilter.ALL) == first
        assert list(enumerate_graphs(4, max_n=8, use_cache=True)) == first

    def test_missing_entry(self, tmp_path):
        assert EnumerationCache(str(tmp_path / "empty")).load(3, 4, GraphFilter.ALL) is None

    def test_cache_disabled_by_default(self):
        list(enumerate_graphs(3))
        assert not EnumerationCache(".qindex_cache").path(3, 4, GraphFilter.ALL).exists()


class TestExtremalSearch:
    def test_triangle_is_the_only_candidate(self):
        result = extremal_search(3, max_n=6)
        assert result.graph_count == 1
        assert result.max_q == pytest.approx(4.0, abs=1e-9)
        assert result.argmax == ["Bw"]
        assert result.disconnected_count == 0

    def test_four_edges_prefers_the_paw(self):
        result = extremal_search(4)
        assert result.graph_count == 2
        paw = build_primitive(PrimitiveKind.STAR_PLUS, 4)
        assert [canonical_key(decode_graph6(s)) for s in result.argmax] == [canonical_key(paw)]
        assert result.max_q > 4.0

    def test_disconnected_classes_are_counted(self):
        result = extremal_search(4, GraphFilter.ALL, max_n=8)
        assert result.graph_count == 11
        assert result.disconnected_count == 6
        assert not result.disconnected_attains_max
        assert result.max_q == pytest.approx(5.0, abs=1e-9)

    def test_empty_filter_result(self):
        result = extremal_search(2, GraphFilter.LEAF_FREE)
        assert result.graph_count == 0
        assert result.max_q is None
        assert result.argmax == []

    def test_to_dict(self):
        result = extremal_search(4)
        data = result.to_dict()
        assert data['filter'] == "two-leaves-free"
        assert data['graph_count'] == 2
        assert 'q_values' not in data
        assert len(result.to_dict(include_values=True)['q_values']) == 2


class TestDeltaBound:
    def test_bound_values(self):
        assert [delta_bound(m) for m in (3, 4, 5, 17)] == [2, 3, 3, 11]

    def test_bound_holds_on_small_sizes(self):
        certificates = verify_delta_bound(range(3, 8))
        bound = certificates[0]
        assert bound.claim_id == "lemma.delta_bound"
        assert bound.status is Status.PASS
        assert [c.claim_id for c in certificates[1:]] == \
            [f"lemma.delta_bound.equality.m{m}" for m in range(3, 8)]
        assert all(c.status is not Status.FAIL for c in certificates)

    def test_kp2p1_attains_the_bound_at_seven_edges(self):
        certificates = verify_delta_bound([7])
        values = certificates[1].evidence[0].values
        member = canonical_form(build_family(FamilyId.K1vKP2P1, 2).graph)
        assert values["catalog"] == ["K1v(kP2+P1)"]
        assert values["achievers"] == [encode_graph6(member)]
        assert certificates[1].status is Status.PASS

    def test_out_of_scope_catalog_members(self):
        certificates = verify_delta_bound([8], max_n=6)
        values = certificates[1].evidence[0].values
        assert values['catalog_out_of_scope']
        assert set(values['catalog_out_of_scope']).isdisjoint(values['catalog'])

    @pytest.mark.slow
    def test_bound_holds_up_to_nine_edges(self):
        assert verify_delta_bound(range(8, 10))[0].status is Status.PASS
