"""
Property checks of the spectral toolkit: Perron identity, subgraph and rotation
monotonicity, the d(v)+m(v) degree bounds and the star lower bound.
"""

import time
from typing import List, Optional, Sequence, Tuple

import numpy as np

from core.certificates import Certificate, Evidence
from core.config import get_config
from core.enumeration import GraphFilter, enumerate_graphs
from core.errors import DomainError
from core.families import FamilyId, build_family, k1_join
from core.graph import Graph, PrimitiveKind, build_primitive, is_isomorphic
from core.graph_io import encode_graph6
from core.log_writer import get_logger
from core.spectral import (check_rotation_monotonicity, degree_bound_report, perron_identity,
                           perron_vector, q_index, rotate_edges, star_bound_holds)


def random_connected_graph(rng: np.random.Generator, n_min: int = 4, n_max: int = 12) -> Graph:
    """Random spanning tree plus independent extra edges."""
    n = int(rng.integers(n_min, n_max + 1))
    edges = {(int(rng.integers(0, v)), v) for v in range(1, n)}
    density = float(rng.uniform(0.1, 0.6))
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < density:
                edges.add((u, v))
    return Graph.from_edges(n, sorted(edges))


def random_graphs(count: int, seed: Optional[int] = None) -> List[Graph]:
    seed = get_config().verification.random_seed if seed is None else seed
    rng = np.random.default_rng(seed)
    return [random_connected_graph(rng) for _ in range(count)]


def perron_identity_certificate(graphs: Sequence[Graph]) -> Certificate:
    tolerance = get_config().tolerances.residual
    evidence = []
    for g in graphs:
        q = q_index(g).q
        value = perron_identity(g, perron_vector(g))
        evidence.append(Evidence('perron_identity', {'graph6': encode_graph6(g)},
                                 {'q': q, 'quadratic_form': value, 'difference': abs(value - q)},
                                 tolerance=tolerance, ok=abs(value - q) <= tolerance))
    return Certificate.build("lemma.perron_identity", "x^TQx=Σ_{ij∈E}(x_i+x_j)^2",
                             {'graphs': len(graphs), 'tolerance': tolerance}, evidence)


def subgraph_monotonicity_certificate(graphs: Sequence[Graph], seed: Optional[int] = None) -> Certificate:
    """Deleting an edge of a connected graph strictly lowers the Q-index."""
    margin = get_config().tolerances.strict_margin
    rng = np.random.default_rng(get_config().verification.random_seed + 1 if seed is None else seed)
    evidence = []
    for g in graphs:
        edges = g.sorted_edges()
        edge = edges[int(rng.integers(0, len(edges)))]
        sub = g.edit(removed=[edge])
        q_full, q_sub = q_index(g).q, q_index(sub).q
        evidence.append(Evidence('subgraph', {'graph6': encode_graph6(g), 'removed': list(edge)},
                                 {'q': q_full, 'q_subgraph': q_sub, 'gap': q_full - q_sub},
                                 tolerance=margin, ok=q_full - q_sub > margin))
    return Certificate.build("lemma.subgraph_monotonicity", "Lemma 2.1, q(H)<q(G) for H⊊G connected",
                             {'graphs': len(graphs), 'strict_margin': margin}, evidence)


def _random_rotation(g: Graph, rng: np.random.Generator) -> Optional[Tuple[int, int, List[int]]]:
    """A rotation (u, v, moved) with x_u clearly above x_v that keeps v attached."""
    tie = get_config().tolerances.argmax
    x = perron_vector(g)
    pairs = [(u, v) for u in range(g.n) for v in range(g.n) if x[u] > x[v] + tie]
    rng.shuffle(pairs)
    for u, v in pairs:
        movable = sorted(g.adjacency[v] - g.adjacency[u] - {u})
        if not movable:
            continue
        keep_one = u not in g.adjacency[v]
        limit = len(movable) - 1 if keep_one else len(movable)
        if limit < 1:
            continue
        size = int(rng.integers(1, limit + 1))
        moved = sorted(int(w) for w in rng.choice(movable, size=size, replace=False))
        return u, v, moved
    return None


def proof_rotation_instances() -> List[Tuple[str, Graph, int, int, List[int], Optional[Graph]]]:
    """(name, G, u, v, moved, expected result) for the rotations used in the proofs."""
    g1 = k1_join(3)
    g2 = build_family(FamilyId.K1vKP2_S3, 4).graph
    p4 = build_primitive(PrimitiveKind.PATH, 4)
    # pairs are (1, 2), (3, 4), ...: detach v1 from u1 and hang it on u2
    return [
        ("K1v3P2", g1, 3, 1, [2], build_family(FamilyId.K1vS3P1, 3).graph),
        ("K1v(3P2+S3)", g2, 3, 1, [2], build_family(FamilyId.K1v2S3P1, 4).graph),
        ("P4", p4, 1, 2, [3], build_primitive(PrimitiveKind.STAR, 4)),
    ]


def rotation_certificate(graphs: Sequence[Graph], trials: Optional[int] = None,
                         seed: Optional[int] = None) -> Certificate:
    """Moving edges from v to u with x_u >= x_v strictly raises the Q-index."""
    settings = get_config()
    trials = settings.verification.rotation_trials if trials is None else trials
    rng = np.random.default_rng(settings.verification.random_seed + 2 if seed is None else seed)
    evidence = []

    for name, g, u, v, moved, expected in proof_rotation_instances():
        rotated = rotate_edges(g, u, v, moved)
        increases = check_rotation_monotonicity(g, u, v, moved)
        matches = expected is None or is_isomorphic(rotated, expected)
        evidence.append(Evidence('proof_instance', {'name': name, 'u': u, 'v': v, 'moved': moved},
                                 {'q_before': q_index(g).q, 'q_after': q_index(rotated).q,
                                  'increases': increases, 'result_matches': matches},
                                 tolerance=settings.tolerances.strict_margin,
                                 ok=increases and matches))

    found = 0
    for g in graphs:
        if found >= trials:
            break
        rotation = _random_rotation(g, rng)
        if rotation is None:
            continue
        u, v, moved = rotation
        try:
            increases = check_rotation_monotonicity(g, u, v, moved)
        except DomainError as e:
            get_logger().log_debug(f"Skipping rotation on {encode_graph6(g)}: {e}")
            continue
        found += 1
        evidence.append(Evidence('random_instance',
                                 {'graph6': encode_graph6(g), 'u': u, 'v': v, 'moved': moved},
                                 {'increases': increases},
                                 tolerance=settings.tolerances.strict_margin, ok=increases))

    return Certificate.build("lemma.rotation_monotonicity", "Lemma 2.2, q(G)<q(G′) after rotation",
                             {'random_instances': found, 'requested': trials,
                              'strict_margin': settings.tolerances.strict_margin}, evidence)


def degree_bound_certificate(m_max: int, workers: Optional[int] = None,
                             requested: Optional[int] = None) -> Certificate:
    """m(v) caps of Lemma 2.4 and q <= max d(v)+m(v) of Lemma 2.3, over every enumerated class."""
    residual = get_config().tolerances.residual
    evidence = []
    for m in range(1, m_max + 1):
        violations: List[str] = []
        count = 0
        for g in enumerate_graphs(m, None, GraphFilter.ALL, workers):
            count += 1
            report = degree_bound_report(g)
            if not report.lemma24_ok or q_index(g).q > float(report.max_d_plus_m) + residual:
                violations.append(encode_graph6(g))
        evidence.append(Evidence('degree_bounds', {'m': m},
                                 {'graphs': count, 'violations': violations},
                                 tolerance=residual, ok=not violations))
    return Certificate.build("lemma.degree_bounds", "Lemmas 2.3 and 2.4, q(G)≤max{d(v)+m(v)}",
                             {'m_max': m_max,
                              'requested_m_max': m_max if requested is None else requested},
                             evidence)


def star_bound_certificate(graphs: Sequence[Graph]) -> Certificate:
    evidence = []
    stars = [build_primitive(PrimitiveKind.STAR, n) for n in range(2, 9)]
    for g in list(graphs) + stars:
        holds = star_bound_holds(g)
        evidence.append(Evidence('star_bound', {'graph6': encode_graph6(g)},
                                 {'q': q_index(g).q, 'max_degree': max(g.degrees)},
                                 tolerance=get_config().tolerances.agreement, ok=holds))
    return Certificate.build("lemma.star_bound", "q(G)≥Δ(G)+1, equality iff G is a star",
                             {'graphs': len(evidence)}, evidence)


def run_properties(m_max: Optional[int] = None, workers: Optional[int] = None) -> List[Certificate]:
    start = time.time()
    settings = get_config().verification
    requested = settings.m_max if m_max is None else m_max
    # the degree bounds walk every class, so m stops at the enumeration cap
    m_max = min(requested, get_config().enumeration.max_m)
    if m_max < requested:
        get_logger().log_warning(f"degree bounds checked up to m = {m_max}, {requested} requested")
    graphs = random_graphs(settings.random_graphs)
    certificates = [
        perron_identity_certificate(graphs),
        subgraph_monotonicity_certificate(graphs),
        rotation_certificate(graphs),
        degree_bound_certificate(m_max, workers, requested),
        star_bound_certificate(graphs),
    ]
    get_logger().log_performance("property checks", time.time() - start, graphs=len(graphs))
    return certificates
