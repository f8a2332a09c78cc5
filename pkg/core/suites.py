"""
Verification suites: each runs a group of claims over its parameter ranges and returns
certificates in a fixed order.
"""

import csv
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from core.canonical import canonical_key
from core.certificates import Certificate, Evidence
from core.config import get_config
from core.enumeration import GraphFilter, enumerate_graphs, extremal_search, verify_delta_bound
from core.errors import DomainError
from core.exactpoly import root_exceeds
from core.families import (FAMILIES, THEOREM_MIN_M, FamilyId, build_family, closed_form_q,
                           predicted_extremal)
from core.graph import Graph, PrimitiveKind, build_primitive, disjoint_union, is_forest, join
from core.graph_io import decode_graph6, encode_graph6
from core.log_writer import get_logger
from core.paper_polynomials import (PAPER_POLYNOMIALS, PaperPolynomial, cross_validate_roots,
                                    derived_polynomial, verify_paper_polynomial)
from core.quotient import has_template, template_min_k
from core.spectral import q_index, rayleigh_gain


@dataclass
class SuiteOptions:
    """Ranges supplied on the command line; None means the configured default."""
    k_min: Optional[int] = None
    k_max: Optional[int] = None
    m_max: Optional[int] = None
    csv_path: Optional[str] = None
    workers: Optional[int] = None


class _QCache:
    """Q-index per (family, k), so chains and comparisons share eigensolves."""

    def __init__(self):
        self._values: Dict[Tuple[FamilyId, int], float] = {}

    def __call__(self, family: FamilyId, k: int) -> float:
        key = (family, k)
        if key not in self._values:
            self._values[key] = q_index(build_family(family, k).graph).q
        return self._values[key]


def _k_range(options: SuiteOptions, default_min: int, default_max: int, floor: int) -> range:
    lo = default_min if options.k_min is None else options.k_min
    hi = default_max if options.k_max is None else options.k_max
    lo = max(lo, floor)
    if hi < lo:
        raise DomainError(f"empty k range [{lo}, {hi}]")
    return range(lo, hi + 1)


def _join_signature(g: Graph) -> Tuple[Tuple[int, str], ...]:
    """
    Isomorphism invariant of K1 ∨ H graphs: canonical keys of H's components.

    Complete for graphs with a dominating vertex, since any two dominating vertices are
    swapped by an automorphism.
    """
    dominating = [v for v in range(g.n) if g.degrees[v] == g.n - 1]
    if not dominating:
        raise DomainError("graph has no dominating vertex")
    rest = [v for v in range(g.n) if v != dominating[0]]
    h = g.induced_subgraph(rest)
    return tuple(sorted(canonical_key(h.induced_subgraph(c)) for c in h.components))


# ----------------------------------------------------------------- polynomials

def polynomials_suite(options: SuiteOptions) -> List[Certificate]:
    settings = get_config().verification
    certificates = []
    for name in PaperPolynomial:
        family = PAPER_POLYNOMIALS[name].family
        ks = _k_range(options, settings.k_min, settings.k_max, FAMILIES[family].min_k)
        certificates.append(verify_paper_polynomial(name, ks))
    ks = _k_range(options, 6, settings.k_max, 6)
    certificates.append(cross_validate_roots(PaperPolynomial.THM12_GAMMA, PaperPolynomial.F1_S3P1, ks))
    return certificates


# ---------------------------------------------------------------------- lemmas

LOWER_BOUNDS: Tuple[Tuple[str, FamilyId, str, Callable[[int], Fraction]], ...] = (
    ("lemma.bounds.s3p1", FamilyId.K1vS3P1, "bounds lemma, q(K1∨((k−2)P2∪S3∪P1))>2k+1+2/(2k−1)",
     lambda k: 2 * k + 1 + Fraction(2, 2 * k - 1)),
    ("lemma.bounds.kp2p1", FamilyId.K1vKP2P1, "bounds lemma, q(K1∨(kP2∪P1))>2k+2",
     lambda k: Fraction(2 * k + 2)),
    ("lemma.bounds.s4p1", FamilyId.K1vS4P1, "bounds lemma, q(K1∨((k−2)P2∪S4∪P1))>2k+2+1/k",
     lambda k: 2 * k + 2 + Fraction(1, k)),
    ("lemma.bounds.kp2_s3", FamilyId.K1vKP2_S3, "bounds lemma, q(K1∨((k−1)P2∪S3))>2k+2+1/k",
     lambda k: 2 * k + 2 + Fraction(1, k)),
)

ORDERING_CHAIN: Tuple[Tuple[FamilyId, FamilyId], ...] = (
    (FamilyId.K1vS4P1, FamilyId.K1v2S3P1),
    (FamilyId.K1v2S3P1, FamilyId.K1vKP2_S3),
    (FamilyId.K1vKP2_S3, FamilyId.L2),
    (FamilyId.L2, FamilyId.L1),
    (FamilyId.K1vS4P1, FamilyId.K1vP4P1),
    (FamilyId.K1vS3P1, FamilyId.K1vKP2),
)

# (claim, anchor, larger, smaller, k threshold)
PROOF_COMPARISONS: Tuple[Tuple[str, str, FamilyId, FamilyId, int], ...] = (
    ("thm1.2.proof.kp2p1_over_kp2_s4", "proof of Theorem 1.2, q(K1∨(kP2∪P1))>q(K1∨((k−2)P2∪S4))",
     FamilyId.K1vKP2P1, FamilyId.K1vKP2_S4, 5),
    ("thm1.2.proof.kp2p1_over_l4", "proof of Theorem 1.2, q(K1∨(kP2∪P1))>q(L4)",
     FamilyId.K1vKP2P1, FamilyId.L4, 3),
    ("thm1.2.proof.l4_over_l5", "proof of Theorem 1.2, q(L4)>q(L5)",
     FamilyId.L4, FamilyId.L5, 3),
    ("thm1.2.proof.s4p1_over_s6", "proof of Theorem 1.2, q(K1∨((k−2)P2∪S4∪P1))>q(K1∨((k−3)P2∪S6))",
     FamilyId.K1vS4P1, FamilyId.K1vS6, 4),
    ("thm1.2.proof.s3p1_over_c3", "proof of Theorem 1.2, q(K1∨((k−2)P2∪S3∪P1))>q(K1∨((k−2)P2∪C3))",
     FamilyId.K1vS3P1, FamilyId.K1vC3, 3),
    ("thm1.2.proof.s3p1_over_s5", "proof of Theorem 1.2, which implies q(G)=q(G3)<q(G3′)",
     FamilyId.K1vS3P1, FamilyId.K1vS5, 4),
)


def lower_bound_certificates(options: SuiteOptions, q_of: _QCache) -> List[Certificate]:
    """
    Strict lower bounds on the extremal families, decided exactly by Sturm counting at the
    rational bound point where a quotient template covers k, numerically otherwise.
    """
    settings = get_config().verification
    gap = get_config().tolerances.gap
    certificates = []
    rows: List[Dict[str, object]] = []
    for claim_id, family, anchor, bound_of in LOWER_BOUNDS:
        ks = _k_range(options, settings.k_min, settings.bound_k_max, FAMILIES[family].min_k)
        derived = derived_polynomial(family) if has_template(family) else None
        evidence = []
        for k in ks:
            bound = bound_of(k)
            q = q_of(family, k)
            margin = q - float(bound)
            values: Dict[str, object] = {'q': q, 'bound': bound, 'margin': margin}
            if derived is not None and k >= template_min_k(family):
                exact = root_exceeds(derived, k, bound)
                values['exact'] = exact
                ok = exact and margin > 0
            else:
                ok = margin > gap
            evidence.append(Evidence('lower_bound', {'family': family.value, 'k': k}, values,
                                     tolerance=gap, ok=ok))
            rows.append({'family': family.value, 'k': k, 'q': q, 'bound': float(bound),
                         'margin': margin})
        certificates.append(Certificate.build(
            claim_id, anchor, {'family': family.value, 'k_min': ks[0], 'k_max': ks[-1], 'gap': gap},
            evidence))

    if options.csv_path:
        with open(options.csv_path, 'w', newline='', encoding='utf-8') as f:
            writer = csv.DictWriter(f, fieldnames=['family', 'k', 'q', 'bound', 'margin'])
            writer.writeheader()
            writer.writerows(rows)
        get_logger().log_info(f"Wrote {len(rows)} bound rows to {options.csv_path}")
    return certificates


def _comparison_evidence(larger: FamilyId, smaller: FamilyId, ks: Iterable[int],
                         q_of: _QCache, gap: float) -> List[Evidence]:
    evidence = []
    for k in ks:
        high, low = q_of(larger, k), q_of(smaller, k)
        evidence.append(Evidence(
            'q_gap', {'larger': larger.value, 'smaller': smaller.value, 'k': k},
            {'q_larger': high, 'q_smaller': low, 'gap': high - low},
            tolerance=gap, ok=high - low > gap))
    return evidence


def ordering_chain_certificate(options: SuiteOptions, q_of: _QCache) -> Certificate:
    settings = get_config().verification
    gap = get_config().tolerances.gap
    floor = max(FAMILIES[f].min_k for pair in ORDERING_CHAIN for f in pair)
    ks = _k_range(options, settings.chain_k_min, settings.chain_k_max, floor)
    evidence: List[Evidence] = []
    for larger, smaller in ORDERING_CHAIN:
        evidence.extend(_comparison_evidence(larger, smaller, ks, q_of, gap))
    return Certificate.build(
        "lemma.ordering.chain", "ordering lemma, q(L2)>q(L1)",
        {'k_min': ks[0], 'k_max': ks[-1], 'gap': gap,
         'chain': [[a.value, b.value] for a, b in ORDERING_CHAIN]},
        evidence)


def proof_comparison_certificates(options: SuiteOptions, q_of: _QCache) -> List[Certificate]:
    settings = get_config().verification
    gap = get_config().tolerances.gap
    certificates = []
    for claim_id, anchor, larger, smaller, threshold in PROOF_COMPARISONS:
        floor = max(threshold, FAMILIES[larger].min_k, FAMILIES[smaller].min_k)
        ks = _k_range(options, floor, settings.k_max, floor)
        certificates.append(Certificate.build(
            claim_id, anchor,
            {'larger': larger.value, 'smaller': smaller.value, 'k_min': ks[0], 'k_max': ks[-1],
             'gap': gap},
            _comparison_evidence(larger, smaller, ks, q_of, gap)))
    return certificates


def surgery_a(k: int) -> Tuple[Graph, Graph, list, list]:
    """K1∨((k−3)P2∪S5) plus v, minus uu1, uu2, plus u1u2 and wv."""
    instance = build_family(FamilyId.K1vS5, k)
    u = instance.roles["S5.hub"][0]
    u1, u2 = instance.roles["S5.leaves"][:2]
    v = instance.graph.n
    removed, added = [(u, u1), (u, u2)], [(u1, u2), (0, v)]
    return instance.graph, instance.graph.edit(removed, added, extra_vertices=1), removed, added


def surgery_b(k: int) -> Tuple[Graph, Graph, list, list]:
    """K1∨((k−4)P2∪S6∪P1) plus v, minus uu1, uu2, uu3, plus u1u2, u3v and wv."""
    instance = build_family(FamilyId.K1vS6P1, k)
    u = instance.roles["S6.hub"][0]
    u1, u2, u3 = instance.roles["S6.leaves"][:3]
    v = instance.graph.n
    removed, added = [(u, u1), (u, u2), (u, u3)], [(u1, u2), (u3, v), (0, v)]
    return instance.graph, instance.graph.edit(removed, added, extra_vertices=1), removed, added


SURGERIES = (
    ("thm1.2.proof.surgery_s5", "proof of Theorem 1.2, G3′=G3−uu1−uu2+u1u2+wv",
     surgery_a, FamilyId.K1vS5),
    ("thm1.2.proof.surgery_s6p1", "proof of Theorem 1.2, G4′=G4−uu1−uu2−uu3+u1u2+u3v+wv",
     surgery_b, FamilyId.K1vS6P1),
)


def surgery_certificates(options: SuiteOptions) -> List[Certificate]:
    """
    Each surgery keeps m and must land on K1∨((k−2)P2∪S3∪P1) with a larger Q-index.

    The quadratic-form gain of the padded Perron vector is recorded per k. Where it is not
    positive while the result and the q gap still hold, the certificate is REPORTED.
    """
    settings = get_config().verification
    gap = get_config().tolerances.gap
    certificates = []
    for claim_id, anchor, surgery, family in SURGERIES:
        ks = _k_range(options, 4, settings.k_max, max(4, FAMILIES[family].min_k))
        evidence = []
        for k in ks:
            before, after, removed, added = surgery(k)
            target = build_family(FamilyId.K1vS3P1, k).graph
            isomorphic = after.m == before.m and _join_signature(after) == _join_signature(target)
            evidence.append(Evidence('isomorphic', {'k': k},
                                     {'result': FamilyId.K1vS3P1.value, 'matches': isomorphic},
                                     tolerance=0.0, ok=isomorphic))
            q_before, q_after = q_index(before).q, q_index(after).q
            evidence.append(Evidence('q_gap', {'k': k},
                                     {'q_before': q_before, 'q_after': q_after,
                                      'gap': q_after - q_before},
                                     tolerance=gap, ok=q_after - q_before > gap))
            gain = rayleigh_gain(before, removed, added, extra_vertices=1)
            evidence.append(Evidence('rayleigh_gain', {'k': k}, {'gain': gain}, ok=gain > 0))
        reportable = all(e.ok for e in evidence if e.label != 'rayleigh_gain')
        certificates.append(Certificate.build(
            claim_id, anchor, {'family': family.value, 'k_min': ks[0], 'k_max': ks[-1], 'gap': gap},
            evidence, reportable=reportable))
    return certificates


def residue_lower_bound(m: int) -> Fraction:
    k, residue = divmod(m, 3)
    if residue == 0:
        return 2 * k + 1 + Fraction(2, 2 * k - 1)
    if residue == 1:
        return Fraction(2 * k + 2)
    return 2 * k + 2 + Fraction(1, k)


def window_h(x: int, m: int) -> Fraction:
    return x + Fraction(2 * m, x) - 1


def window_z(x: int, m: int) -> Fraction:
    return Fraction(3 * x - 1, 2) + Fraction(m, x)


def printed_window_value(m: int) -> Fraction:
    """The closed forms printed for h(⌊(2m+1)/3⌋−2) per residue class."""
    k, residue = divmod(m, 3)
    if residue == 0:
        return 2 * k + Fraction(3, k - 1)
    if residue == 1:
        return 2 * k + 1 + Fraction(5, 2 * k - 1)
    return 2 * k + 1 + Fraction(7, 2 * k - 1)


def degree_window_evidence(m: int) -> Evidence:
    top = (2 * m + 1) // 3 - 2
    bound = residue_lower_bound(m)
    h_top = window_h(top, m)
    printed = printed_window_value(m)
    z_three = window_z(3, m)
    window_max = max(min(window_h(x, m), window_z(x, m)) for x in range(3, top + 1))
    ok = h_top == printed and h_top < bound and z_three < bound and window_max < bound
    return Evidence('degree_window', {'m': m, 'window': [3, top]},
                    {'h_top': h_top, 'printed': printed, 'z_3': z_three,
                     'window_max': window_max, 'lower_bound': bound},
                    tolerance=0.0, ok=ok)


def degree_window_certificates(options: SuiteOptions) -> List[Certificate]:
    """Exact exclusion of d(w) in [3, ⌊(2m+1)/3⌋−2]; below the hypothesis the figures are REPORTED."""
    settings = get_config().verification
    certificates = [Certificate.build(
        "thm1.2.proof.degree_window", "proof of Theorem 1.2, d(w)≥⌊(2m+1)/3⌋−1 for m≥17",
        {'m_min': THEOREM_MIN_M, 'm_max': settings.window_m_max},
        [degree_window_evidence(m) for m in range(THEOREM_MIN_M, settings.window_m_max + 1)])]
    certificates.append(Certificate.build(
        "thm1.2.proof.degree_window.small_m", "proof of Theorem 1.2, below the m≥17 hypothesis",
        {'m_min': 7, 'm_max': THEOREM_MIN_M - 1},
        [degree_window_evidence(m) for m in range(7, THEOREM_MIN_M)], informational=True))
    return certificates


def forest_extremal(s: int, r: int) -> Graph:
    """S_{s−r+2} ∪ (r−1)P2."""
    return disjoint_union([build_primitive(PrimitiveKind.STAR, s - r + 2),
                           build_primitive(PrimitiveKind.PATH, 2)], [1, r - 1])


def forest_certificates(options: SuiteOptions) -> List[Certificate]:
    """
    Among forests with s edges, r components and no isolated vertex, K1∨F has the largest
    Q-index exactly for F = S_{s−r+2} ∪ (r−1)P2; likewise with an extra P1 in the join.
    """
    settings = get_config()
    tolerance = settings.tolerances.argmax
    center = build_primitive(PrimitiveKind.EDGELESS, 1)
    p1 = build_primitive(PrimitiveKind.PATH, 1)
    plain: List[Evidence] = []
    with_p1: List[Evidence] = []
    for s in range(1, settings.verification.forest_s_max + 1):
        max_n = min(2 * s, settings.enumeration.max_n_cap)
        forests = [f for f in enumerate_graphs(s, max_n, GraphFilter.ALL, options.workers)
                   if is_forest(f)]
        by_components: Dict[int, List[Graph]] = {}
        for forest in forests:
            by_components.setdefault(len(forest.components), []).append(forest)
        for r, group in sorted(by_components.items()):
            extremal = forest_extremal(s, r)
            expected = canonical_key(extremal)
            for evidence, extend in ((plain, False), (with_p1, True)):
                scored = []
                for forest in group:
                    joined = join(center, disjoint_union([forest, p1]) if extend else forest)
                    scored.append((forest, q_index(joined).q))
                best = max(q for _, q in scored)
                winners = [forest for forest, q in scored if q >= best - tolerance]
                evidence.append(Evidence(
                    'forest_maximizer', {'s': s, 'r': r, 'with_p1': extend},
                    {'forests': len(group), 'max_q': best,
                     'winners': [encode_graph6(f) for f in winners],
                     'expected': encode_graph6(extremal)},
                    tolerance=tolerance,
                    ok=[canonical_key(f) for f in winners] == [expected]))
    return [
        Certificate.build("lemma.forest_maximizer", "forest lemma, K1∨(S_{s−r+2}∪(r−1)P2)",
                          {'s_max': settings.verification.forest_s_max}, plain),
        Certificate.build("lemma.forest_maximizer.p1", "forest corollary, S_{s−r+2}∪(r−1)P2∪P1",
                          {'s_max': settings.verification.forest_s_max}, with_p1),
    ]


def lemmas_suite(options: SuiteOptions) -> List[Certificate]:
    q_of = _QCache()
    certificates = lower_bound_certificates(options, q_of)
    certificates.append(ordering_chain_certificate(options, q_of))
    certificates.extend(proof_comparison_certificates(options, q_of))
    certificates.extend(surgery_certificates(options))
    certificates.extend(degree_window_certificates(options))
    certificates.extend(forest_certificates(options))
    return certificates


# ------------------------------------------------------------------- theorem12

def closed_form_certificates(options: SuiteOptions) -> List[Certificate]:
    settings = get_config().verification
    tolerance = get_config().tolerances.residual
    certificates = []
    for claim_id, family, anchor in (
            ("thm1.2.ii.closed_form", FamilyId.K1vKP2P1, "Theorem 1.2(ii), (2k+3+√(4k²+4k+9))/2"),
            ("thm1.1.i.closed_form", FamilyId.K1vKP2, "Theorem 1.1(i), (2k+3+√(4k²−4k+9))/2")):
        ks = _k_range(options, settings.k_min, settings.closed_form_k_max, FAMILIES[family].min_k)
        evidence = []
        for k in ks:
            exact = closed_form_q(family, k)
            closed = float(exact.evalf(30))
            q = q_index(build_family(family, k).graph).q
            evidence.append(Evidence('closed_form', {'k': k},
                                     {'q': q, 'closed_form': str(exact), 'value': closed,
                                      'difference': abs(q - closed)},
                                     tolerance=tolerance, ok=abs(q - closed) <= tolerance))
        certificates.append(Certificate.build(
            claim_id, anchor, {'family': family.value, 'k_min': ks[0], 'k_max': ks[-1],
                               'tolerance': tolerance}, evidence))
    return certificates


def predicted_map_certificate(m_max: int = 120) -> Certificate:
    """Each predicted family member has size m and attains Δ = ⌊(2m+1)/3⌋."""
    evidence = []
    for m in range(6, m_max + 1):
        prediction = predicted_extremal(m)
        instance = build_family(prediction.family, prediction.k)
        delta = max(instance.graph.degrees)
        ok = (instance.graph.m == m and delta == (2 * m + 1) // 3
              and prediction.hypothesis_met == (m >= THEOREM_MIN_M))
        evidence.append(Evidence('predicted_extremal', {'m': m},
                                 {'family': prediction.family.value, 'k': prediction.k,
                                  'edges': instance.graph.m, 'max_degree': delta,
                                  'hypothesis_met': prediction.hypothesis_met},
                                 tolerance=0.0, ok=ok))
    return Certificate.build("thm1.2.predicted_map", "Theorem 1.2, extremal graph by m mod 3",
                             {'m_min': 6, 'm_max': m_max}, evidence)


def family_dominance_certificate(options: SuiteOptions) -> Certificate:
    """Within the family table, the predicted member has the largest Q-index for each m ≥ 17."""
    settings = get_config().verification
    k_max = settings.k_max if options.k_max is None else options.k_max
    gap = get_config().tolerances.gap
    q_of = _QCache()
    evidence = []
    for m in range(THEOREM_MIN_M, 3 * k_max + 1):
        prediction = predicted_extremal(m)
        best = q_of(prediction.family, prediction.k)
        rivals = {}
        for family, spec in FAMILIES.items():
            k = (m - spec.residue) // 3
            if family is prediction.family or (m - spec.residue) % 3 or k < spec.min_k:
                continue
            rivals[family.value] = q_of(family, k)
        runner_up = max(rivals.values())
        evidence.append(Evidence('family_dominance', {'m': m},
                                 {'predicted': prediction.family.value, 'q': best,
                                  'runner_up': max(rivals, key=rivals.get),
                                  'q_runner_up': runner_up, 'gap': best - runner_up},
                                 tolerance=gap, ok=best - runner_up > gap))
    return Certificate.build("thm1.2.family_dominance",
                             "Theorem 1.2, q(G)≤γ, with equality if and only if",
                             {'m_min': THEOREM_MIN_M, 'm_max': 3 * k_max, 'gap': gap},
                             evidence, reportable=True)


def search_certificates(options: SuiteOptions) -> List[Certificate]:
    """Desk-scale searches below the hypothesis, diffed against the predicted family."""
    m_max = min(get_config().verification.m_max if options.m_max is None else options.m_max, 9)
    certificates = []
    for m in range(6, m_max + 1):
        result = extremal_search(m, GraphFilter.TWO_LEAVES_FREE, workers=options.workers)
        prediction = predicted_extremal(m)
        predicted = build_family(prediction.family, prediction.k).graph
        predicted_key = canonical_key(predicted)
        argmax_keys = [canonical_key(decode_graph6(s)) for s in result.argmax]
        evidence = [Evidence(
            'extremal_search', {'m': m, 'max_n': result.max_n, 'filter': result.filter.value},
            {'graph_count': result.graph_count, 'max_q': result.max_q, 'argmax': result.argmax,
             'predicted': prediction.family.value, 'predicted_graph6': encode_graph6(predicted),
             'predicted_q': q_index(predicted).q, 'predicted_in_argmax': predicted_key in argmax_keys,
             'disconnected_count': result.disconnected_count,
             'disconnected_attains_max': result.disconnected_attains_max,
             'runtime_ms': result.runtime_ms},
            ok=predicted_key in argmax_keys)]
        certificates.append(Certificate.build(
            f"thm1.2.search.m{m}", "Theorem 1.2 hypothesis, 2 leaves-free graph with size m",
            {'m': m, 'max_n': result.max_n, 'filter': result.filter.value},
            evidence, informational=True))
    return certificates


def theorem12_suite(options: SuiteOptions) -> List[Certificate]:
    certificates = closed_form_certificates(options)
    certificates.append(predicted_map_certificate())
    certificates.append(family_dominance_certificate(options))
    certificates.extend(search_certificates(options))
    return certificates


# ----------------------------------------------------------------- delta-bound

def delta_bound_suite(options: SuiteOptions) -> List[Certificate]:
    m_max = get_config().verification.m_max if options.m_max is None else options.m_max
    return verify_delta_bound(range(3, m_max + 1), workers=options.workers)


def properties_suite(options: SuiteOptions) -> List[Certificate]:
    from core.properties import run_properties

    return run_properties(options.m_max, options.workers)


SUITES: Dict[str, Callable[[SuiteOptions], List[Certificate]]] = {
    'polynomials': polynomials_suite,
    'lemmas': lemmas_suite,
    'theorem12': theorem12_suite,
    'delta-bound': delta_bound_suite,
    'properties': properties_suite,
}


def suite_names() -> List[str]:
    return list(SUITES) + ['all']


def run_suite(name: str, options: Optional[SuiteOptions] = None) -> List[Certificate]:
    """Run one named suite, or every suite in registry order for 'all'."""
    options = options or SuiteOptions()
    if name == 'all':
        names: Sequence[str] = list(SUITES)
    elif name in SUITES:
        names = [name]
    else:
        raise DomainError(f"unknown suite {name!r}; expected one of: {', '.join(suite_names())}")

    logger = get_logger()
    certificates: List[Certificate] = []
    for suite in names:
        start = time.time()
        logger.log_info(f"Running suite {suite}")
        produced = SUITES[suite](options)
        certificates.extend(produced)
        logger.log_performance(f"suite {suite}", time.time() - start, certificates=len(produced))
    return certificates
