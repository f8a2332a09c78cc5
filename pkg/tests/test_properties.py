import pytest

from core.certificates import Status
from core.graph import is_isomorphic
from core.properties import (degree_bound_certificate, perron_identity_certificate,
                             proof_rotation_instances, random_graphs, rotation_certificate,
                             run_properties, star_bound_certificate,
                             subgraph_monotonicity_certificate)
from core.spectral import check_rotation_monotonicity, rotate_edges


@pytest.fixture
def graphs():
    return random_graphs(20, seed=11)


class TestRandomGraphs:
    def test_connected_and_reproducible(self):
        first = random_graphs(10, seed=3)
        assert all(g.is_connected() for g in first)
        assert all(4 <= g.n <= 12 for g in first)
        assert random_graphs(10, seed=3) == first

    def test_configured_seed(self, config):
        assert random_graphs(5) == random_graphs(5, seed=config.verification.random_seed)


class TestPropertyCertificates:
    def test_perron_identity(self, graphs):
        certificate = perron_identity_certificate(graphs)
        assert certificate.claim_id == "lemma.perron_identity"
        assert certificate.status is Status.PASS
        assert len(certificate.evidence) == 20

    def test_subgraph_monotonicity(self, graphs):
        assert subgraph_monotonicity_certificate(graphs, seed=5).status is Status.PASS

    def test_rotation(self, graphs):
        certificate = rotation_certificate(graphs, trials=10, seed=5)
        assert certificate.status is Status.PASS
        labels = [e.label for e in certificate.evidence]
        assert labels.count('proof_instance') == 3
        assert 0 < labels.count('random_instance') <= 10

    def test_star_bound(self, graphs):
        certificate = star_bound_certificate(graphs)
        assert certificate.status is Status.PASS
        assert len(certificate.evidence) == 20 + 7

    def test_degree_bounds(self):
        certificate = degree_bound_certificate(5)
        assert certificate.status is Status.PASS
        assert [e.values['graphs'] for e in certificate.evidence] == [1, 1, 3, 6, 15]


class TestProofRotations:
    @pytest.mark.parametrize("index", range(3))
    def test_rotation_reaches_expected_graph(self, index):
        name, g, u, v, moved, expected = proof_rotation_instances()[index]
        assert is_isomorphic(rotate_edges(g, u, v, moved), expected), name
        assert check_rotation_monotonicity(g, u, v, moved)


class TestRunProperties:
    def test_all_certificates(self, config):
        config.verification.random_graphs = 8
        config.verification.rotation_trials = 4
        certificates = run_properties(m_max=4)
        assert [c.claim_id for c in certificates] == [
            "lemma.perron_identity", "lemma.subgraph_monotonicity",
            "lemma.rotation_monotonicity", "lemma.degree_bounds", "lemma.star_bound"]
        assert all(c.status is Status.PASS for c in certificates)
        degree_bounds = certificates[3]
        assert degree_bounds.parameters == {'m_max': 4, 'requested_m_max': 4}
        assert len(degree_bounds.evidence) == 4

    def test_degree_bounds_follow_the_suite_range(self, config):
        config.verification.random_graphs = 4
        config.verification.rotation_trials = 2
        config.verification.m_max = 8
        config.enumeration.max_m = 6
        degree_bounds = run_properties()[3]
        assert degree_bounds.parameters == {'m_max': 6, 'requested_m_max': 8}
        assert [e.inputs['m'] for e in degree_bounds.evidence] == [1, 2, 3, 4, 5, 6]
