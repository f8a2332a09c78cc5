"""
Isomorph-free exhaustive generation of graphs by edge count, desk-scale extremal searches
and the exhaustive check of the maximum-degree bound.

Generation runs level by level over graphs without isolated vertices. A child adds one
edge to a parent (between two old vertices, from an old vertex to a new one, or between
two new vertices) and is kept iff the added edge is equivalent to the child's canonical
deletion edge, i.e. deleting either leaves isomorphic graphs. Within one parent, children
are de-duplicated by canonical form. Every class therefore appears exactly once, coming
from the unique representative of its canonical reduction.
"""

import json
import time
from dataclasses import dataclass, field
from enum import Enum
from multiprocessing import Pool
from pathlib import Path
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from tqdm import tqdm

from core.canonical import canonical_key, canonical_labeling, refine_ordered
from core.certificates import Certificate, Evidence
from core.config import get_config
from core.errors import CapabilityError, DomainError
from core.families import delta_equality_catalog
from core.graph import Edge, Graph, structural_profile
from core.graph_io import decode_graph6, encode_graph6
from core.log_writer import get_logger
from core.spectral import q_index


class GraphFilter(Enum):
    TWO_LEAVES_FREE = "two-leaves-free"
    LEAF_FREE = "leaf-free"
    ALL = "all"

    @classmethod
    def parse(cls, text: str) -> "GraphFilter":
        key = text.strip().lower().replace("_", "-")
        for option in cls:
            if key == option.value:
                return option
        raise DomainError(f"unknown filter {text!r}; expected one of: "
                          + ", ".join(o.value for o in cls))

    def accepts(self, g: Graph) -> bool:
        if self is GraphFilter.ALL:
            return True
        profile = structural_profile(g)
        if self is GraphFilter.LEAF_FREE:
            return profile.is_leaf_free
        return profile.is_two_leaves_free


def _reduction(g: Graph, edge: Edge) -> Graph:
    return g.edit(removed=[edge]).without_isolated()


def _candidates(parent: Graph, max_n: int) -> Iterator[Tuple[Graph, Edge]]:
    n = parent.n
    for u in range(n):
        for v in range(u + 1, n):
            if not parent.has_edge(u, v):
                yield parent.edit(added=[(u, v)]), (u, v)
    if n + 1 <= max_n:
        for u in range(n):
            yield parent.edit(added=[(u, n)], extra_vertices=1), (u, n)
    if n + 2 <= max_n:
        yield parent.edit(added=[(n, n + 1)], extra_vertices=2), (n, n + 1)


def _expand_parent(args: Tuple[Graph, int, int]) -> List[Graph]:
    """Accepted children of one parent, as canonical forms."""
    parent, max_n, bound = args
    seen: Set[str] = set()
    accepted: List[Graph] = []
    for child, added in _candidates(parent, max_n):
        labeling = canonical_labeling(child, bound)
        if labeling.bits in seen:
            continue
        perm = labeling.permutation

        def image(edge: Edge) -> Tuple[int, int]:
            a, b = perm[edge[0]], perm[edge[1]]
            return (a, b) if a < b else (b, a)

        deletion = max(child.edges, key=image)
        if added != deletion:
            cells = refine_ordered(child.adjacency, [list(range(child.n))])
            cell_of: Dict[int, int] = {v: i for i, cell in enumerate(cells) for v in cell}
            if sorted((cell_of[added[0]], cell_of[added[1]])) != \
                    sorted((cell_of[deletion[0]], cell_of[deletion[1]])):
                continue
            if canonical_key(_reduction(child, added), bound) != \
                    canonical_key(_reduction(child, deletion), bound):
                continue
        seen.add(labeling.bits)
        accepted.append(child.relabel(perm))
    return accepted


class EnumerationCache:
    """JSON-lines cache of enumeration results keyed by (m, max_n, filter)."""

    def __init__(self, cache_dir: str):
        self.cache_dir = Path(cache_dir)

    def path(self, m: int, max_n: int, graph_filter: GraphFilter) -> Path:
        return self.cache_dir / f"m{m}_n{max_n}_{graph_filter.value}.jsonl"

    def load(self, m: int, max_n: int, graph_filter: GraphFilter) -> Optional[List[Graph]]:
        path = self.path(m, max_n, graph_filter)
        if not path.exists():
            return None
        with open(path, 'r', encoding='utf-8') as f:
            return [decode_graph6(json.loads(line)['graph6']) for line in f if line.strip()]

    def store(self, m: int, max_n: int, graph_filter: GraphFilter, graphs: Sequence[Graph]) -> Path:
        self.cache_dir.mkdir(parents=True, exist_ok=True)
        path = self.path(m, max_n, graph_filter)
        with open(path, 'w', encoding='utf-8') as f:
            for g in graphs:
                f.write(json.dumps({'graph6': encode_graph6(g), 'n': g.n, 'm': g.m},
                                   sort_keys=True) + "\n")
        return path


class GraphEnumerator:
    """Level-by-level canonical augmentation with an optional worker pool."""

    def __init__(self, workers: Optional[int] = None, show_progress: bool = False):
        settings = get_config().enumeration
        self.settings = settings
        self.workers = settings.workers if workers is None else workers
        self.show_progress = show_progress
        self.logger = get_logger()

    def resolve_max_n(self, m: int, max_n: Optional[int]) -> int:
        if m < 0:
            raise DomainError(f"edge count must be nonnegative, got {m}")
        if m > self.settings.max_m:
            raise CapabilityError(f"enumeration supports m <= {self.settings.max_m}, got m = {m}")
        if max_n is None:
            max_n = min(m + 1, self.settings.max_n_cap)
        if max_n > self.settings.max_n_cap:
            raise CapabilityError(
                f"enumeration supports max_n <= {self.settings.max_n_cap}, got {max_n}")
        if max_n > self.settings.canonical_bound:
            raise CapabilityError(
                f"max_n {max_n} exceeds the canonical form bound {self.settings.canonical_bound}")
        return max_n

    def classes(self, m: int, max_n: int) -> List[Graph]:
        """All isolated-vertex-free classes with m edges and n <= max_n, sorted by graph6."""
        level: List[Graph] = [Graph(0, frozenset())]
        bound = self.settings.canonical_bound
        for depth in range(1, m + 1):
            start = time.time()
            parents = len(level)
            level = self._expand_level(level, max_n, bound)
            level.sort(key=encode_graph6)
            self.logger.log_level_progress(depth, m, parents=parents, accepted=len(level))
            self.logger.log_performance(f"enumeration level {depth}", time.time() - start,
                                        classes=len(level), max_n=max_n)
        return level

    def _expand_level(self, parents: List[Graph], max_n: int, bound: int) -> List[Graph]:
        if self.workers > 1 and len(parents) >= self.settings.parallel_threshold:
            return self._expand_multiprocessing(parents, max_n, bound)
        return self._expand_sequential(parents, max_n, bound)

    def _expand_sequential(self, parents: List[Graph], max_n: int, bound: int) -> List[Graph]:
        children: List[Graph] = []
        for parent in tqdm(parents, desc="augmenting", unit="graph", leave=False,
                           disable=not self.show_progress):
            children.extend(_expand_parent((parent, max_n, bound)))
        return children

    def _expand_multiprocessing(self, parents: List[Graph], max_n: int, bound: int) -> List[Graph]:
        try:
            with Pool(processes=self.workers) as pool:
                tasks = [(parent, max_n, bound) for parent in parents]
                chunk = max(1, len(tasks) // (4 * self.workers))
                children: List[Graph] = []
                for batch in tqdm(pool.imap(_expand_parent, tasks, chunksize=chunk),
                                  total=len(tasks), desc="augmenting", unit="graph",
                                  leave=False, disable=not self.show_progress):
                    children.extend(batch)
                return children
        except Exception as e:
            self.logger.log_error(f"Multiprocessing failed, falling back to sequential: {str(e)}")
            return self._expand_sequential(parents, max_n, bound)


def enumerate_graphs(m: int, max_n: Optional[int] = None,
                     graph_filter: GraphFilter = GraphFilter.ALL,
                     workers: Optional[int] = None, use_cache: Optional[bool] = None,
                     show_progress: bool = False) -> Iterator[Graph]:
    """
    One representative per isomorphism class of graphs with m edges, no isolated vertices,
    n <= max_n and passing the filter, streamed in graph6 order.
    """
    enumerator = GraphEnumerator(workers, show_progress)
    max_n = enumerator.resolve_max_n(m, max_n)
    settings = get_config().enumeration
    use_cache = settings.cache_enabled if use_cache is None else use_cache
    cache = EnumerationCache(settings.cache_dir) if use_cache else None

    if cache is not None:
        cached = cache.load(m, max_n, graph_filter)
        if cached is not None:
            get_logger().log_debug(f"Enumeration cache hit for m={m}, max_n={max_n}")
            yield from cached
            return

    start = time.time()
    result = [g for g in enumerator.classes(m, max_n) if graph_filter.accepts(g)]
    get_logger().log_performance(f"enumerate m={m}", time.time() - start,
                                 max_n=max_n, filter=graph_filter.value, classes=len(result))
    if cache is not None:
        cache.store(m, max_n, graph_filter, result)
    yield from result


@dataclass
class SearchResult:
    m: int
    filter: GraphFilter
    max_n: int
    graph_count: int
    max_q: Optional[float]
    argmax: List[str]
    runtime_ms: int
    disconnected_count: int = 0
    disconnected_attains_max: bool = False
    q_values: Dict[str, float] = field(default_factory=dict)

    def to_dict(self, include_values: bool = False) -> Dict[str, object]:
        data: Dict[str, object] = {
            'm': self.m,
            'filter': self.filter.value,
            'max_n': self.max_n,
            'graph_count': self.graph_count,
            'max_q': self.max_q,
            'argmax': list(self.argmax),
            'runtime_ms': self.runtime_ms,
            'disconnected_count': self.disconnected_count,
            'disconnected_attains_max': self.disconnected_attains_max,
        }
        if include_values:
            data['q_values'] = dict(self.q_values)
        return data


def extremal_search(m: int, graph_filter: GraphFilter = GraphFilter.TWO_LEAVES_FREE,
                    max_n: Optional[int] = None, workers: Optional[int] = None,
                    use_cache: Optional[bool] = None) -> SearchResult:
    """Largest Q-index over the enumerated classes, with every class within tolerance of it."""
    start = time.time()
    tolerance = get_config().tolerances.argmax
    resolved = GraphEnumerator(workers).resolve_max_n(m, max_n)
    graphs = list(enumerate_graphs(m, resolved, graph_filter, workers, use_cache))

    q_values = {encode_graph6(g): q_index(g).q for g in graphs}
    disconnected = {encode_graph6(g) for g in graphs if not g.is_connected()}
    max_q = max(q_values.values()) if q_values else None
    argmax = sorted(s for s, q in q_values.items() if max_q is not None and q >= max_q - tolerance)

    runtime_ms = int((time.time() - start) * 1000)
    get_logger().log_performance(f"extremal search m={m}", runtime_ms / 1000,
                                 filter=graph_filter.value, classes=len(graphs))
    return SearchResult(
        m=m,
        filter=graph_filter,
        max_n=resolved,
        graph_count=len(graphs),
        max_q=max_q,
        argmax=argmax,
        runtime_ms=runtime_ms,
        disconnected_count=len(disconnected),
        disconnected_attains_max=any(s in disconnected for s in argmax),
        q_values=q_values,
    )


def delta_bound(m: int) -> int:
    return (2 * m + 1) // 3


def verify_delta_bound(m_range: Iterable[int], max_n: Optional[int] = None,
                       workers: Optional[int] = None) -> List[Certificate]:
    """
    Exhaustive check of Δ(G) <= ⌊(2m+1)/3⌋ over 2-leaves-free classes.

    Returns the bound certificate first, then one equality-catalog comparison per m. Catalog
    mismatches at small k are findings, REPORTED with both sets.
    """
    ms = sorted(set(m_range))
    bound_evidence: List[Evidence] = []
    catalog_certificates: List[Certificate] = []
    enumerator = GraphEnumerator(workers)

    for m in ms:
        resolved = enumerator.resolve_max_n(m, max_n)
        graphs = list(enumerate_graphs(m, resolved, GraphFilter.TWO_LEAVES_FREE, workers))
        bound = delta_bound(m)
        degrees = {encode_graph6(g): max(g.degrees, default=0) for g in graphs}
        violations = sorted(s for s, d in degrees.items() if d > bound)
        bound_evidence.append(Evidence(
            'delta_bound', {'m': m, 'max_n': resolved},
            {'graphs': len(graphs), 'bound': bound, 'max_delta': max(degrees.values(), default=0),
             'violations': violations},
            ok=not violations))

        achievers = {canonical_key(g): s for s, g in zip(degrees, graphs) if degrees[s] == bound}
        catalog: Dict[Tuple[int, str], str] = {}
        out_of_scope: List[str] = []
        for instance in delta_equality_catalog(m):
            if instance.graph.n > resolved:
                out_of_scope.append(instance.id.value)
                continue
            catalog[canonical_key(instance.graph)] = instance.id.value

        missing_from_search = sorted(catalog[key] for key in catalog if key not in achievers)
        not_in_catalog = sorted(achievers[key] for key in achievers if key not in catalog)
        catalog_certificates.append(Certificate.build(
            f"lemma.delta_bound.equality.m{m}",
            "Δ-bound lemma, the equality holds if and only if G is in the catalog",
            {'m': m, 'k': m // 3, 'max_n': resolved},
            [Evidence('equality_catalog', {'m': m},
                      {'achievers': sorted(achievers.values()),
                       'catalog': sorted(catalog.values()),
                       'catalog_out_of_scope': out_of_scope,
                       'missing_from_search': missing_from_search,
                       'not_in_catalog': not_in_catalog},
                      ok=not missing_from_search and not not_in_catalog)],
            reportable=True))

    bound_certificate = Certificate.build(
        "lemma.delta_bound", "Δ-bound lemma, Δ(G)≤⌊(2m+1)/3⌋",
        {'m_min': ms[0] if ms else None, 'm_max': ms[-1] if ms else None, 'max_n': max_n,
         'filter': GraphFilter.TWO_LEAVES_FREE.value},
        bound_evidence)
    return [bound_certificate] + catalog_certificates
