"""
Immutable simple graphs, primitive constructors, union/join composition and structural
profiles.
"""

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from core.errors import DomainError

Edge = Tuple[int, int]


def _normalize(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1; isolated vertices count in n."""
    n: int
    edges: FrozenSet[Edge]

    def __post_init__(self):
        if self.n < 0:
            raise DomainError(f"vertex count must be nonnegative, got {self.n}")
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise DomainError(f"edge ({u}, {v}) is not a normalized pair on {self.n} vertices")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        """Build a graph, rejecting self-loops, duplicates and out-of-range endpoints."""
        normalized = set()
        for edge in edges:
            u, v = int(edge[0]), int(edge[1])
            if u == v:
                raise DomainError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"edge ({u}, {v}) outside vertex range 0..{n - 1}")
            pair = _normalize(u, v)
            if pair in normalized:
                raise DomainError(f"duplicate edge {pair}")
            normalized.add(pair)
        return cls(n, frozenset(normalized))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> Tuple[FrozenSet[int], ...]:
        neighbors: List[set] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            neighbors[u].add(v)
            neighbors[v].add(u)
        return tuple(frozenset(s) for s in neighbors)

    @cached_property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(len(s) for s in self.adjacency)

    def neighbors(self, v: int) -> FrozenSet[int]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return _normalize(u, v) in self.edges

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1
        return a

    def signless_laplacian(self) -> np.ndarray:
        """Q = D + A as a float matrix."""
        q = self.adjacency_matrix().astype(float)
        q[np.diag_indices(self.n)] = self.degrees
        return q

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex v renamed perm[v]."""
        if sorted(perm) != list(range(self.n)):
            raise DomainError("relabeling must be a permutation of the vertex set")
        return Graph(self.n, frozenset(_normalize(perm[u], perm[v]) for u, v in self.edges))

    def edit(self, removed: Iterable[Edge] = (), added: Iterable[Edge] = (),
             extra_vertices: int = 0) -> "Graph":
        """Remove and add edges, optionally after appending isolated vertices."""
        n = self.n + extra_vertices
        edges = set(self.edges)
        for u, v in removed:
            pair = _normalize(u, v)
            if pair not in edges:
                raise DomainError(f"cannot remove missing edge {pair}")
            edges.remove(pair)
        for u, v in added:
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"cannot add edge ({u}, {v}) on {n} vertices")
            pair = _normalize(u, v)
            if pair in edges:
                raise DomainError(f"cannot add existing edge {pair}")
            edges.add(pair)
        return Graph(n, frozenset(edges))

    @cached_property
    def nx_view(self) -> nx.Graph:
        """Frozen networkx copy, built once per graph."""
        return nx.freeze(self.to_networkx())

    @cached_property
    def components(self) -> Tuple[Tuple[int, ...], ...]:
        """Connected components, each sorted, ordered by smallest vertex."""
        return tuple(sorted(tuple(sorted(c)) for c in nx.connected_components(self.nx_view)))

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components) == 1

    def induced_subgraph(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph induced on `vertices`, relabeled 0.. in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        return Graph(len(vertices), frozenset(
            _normalize(index[u], index[v]) for u, v in self.edges if u in index and v in index
        ))

    def without_isolated(self) -> "Graph":
        keep = [v for v in range(self.n) if self.degrees[v] > 0]
        if len(keep) == self.n:
            return self
        return self.induced_subgraph(keep)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.sorted_edges())
        return g

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> "Graph":
        """Relabel nodes 0..n-1 in iteration order; self-loops and multi-edges are rejected."""
        index = {v: i for i, v in enumerate(g.nodes)}
        return cls.from_edges(len(index), ((index[u], index[v]) for u, v in g.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, edges={self.sorted_edges()})"


class PrimitiveKind(Enum):
    PATH = "path"
    CYCLE = "cycle"
    STAR = "star"
    DOUBLE_STAR = "double_star"
    STAR_PLUS = "star_plus"
    EDGELESS = "edgeless"


def build_primitive(kind: PrimitiveKind, *params: int) -> Graph:
    """
    Build one of the named primitive graphs.

    PATH, CYCLE, STAR, STAR_PLUS and EDGELESS take the order n. STAR of order n is
    K_{1,n-1} with center 0; STAR_PLUS adds the edge between leaves 1 and 2.
    DOUBLE_STAR takes (a, b): centers 0 and 1, then a leaves of 0, then b leaves of 1.
    """
    expected = 2 if kind is PrimitiveKind.DOUBLE_STAR else 1
    if len(params) != expected:
        raise DomainError(f"{kind.name} takes {expected} parameter(s), got {len(params)}")

    if kind is PrimitiveKind.DOUBLE_STAR:
        a, b = params
        if a < 1 or b < 1:
            raise DomainError(f"DOUBLE_STAR needs a >= 1 and b >= 1, got ({a}, {b})")
        edges = [(0, 1)]
        edges += [(0, 2 + i) for i in range(a)]
        edges += [(1, 2 + a + j) for j in range(b)]
        return Graph.from_edges(a + b + 2, edges)

    n = params[0]
    minimum = {
        PrimitiveKind.PATH: 1,
        PrimitiveKind.CYCLE: 3,
        PrimitiveKind.STAR: 1,
        PrimitiveKind.STAR_PLUS: 3,
        PrimitiveKind.EDGELESS: 0,
    }[kind]
    if n < minimum:
        raise DomainError(f"{kind.name} needs n >= {minimum}, got {n}")

    if kind is PrimitiveKind.PATH:
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if kind is PrimitiveKind.CYCLE:
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if kind is PrimitiveKind.STAR:
        return Graph.from_edges(n, [(0, i) for i in range(1, n)])
    if kind is PrimitiveKind.STAR_PLUS:
        return Graph.from_edges(n, [(0, i) for i in range(1, n)] + [(1, 2)])
    return Graph(n, frozenset())


def disjoint_union(graphs: Sequence[Graph], multiplicities: Optional[Sequence[int]] = None) -> Graph:
    """Vertex-disjoint union; copies are laid out in argument order."""
    if multiplicities is None:
        multiplicities = [1] * len(graphs)
    if len(multiplicities) != len(graphs):
        raise DomainError("one multiplicity is required per graph")
    offset = 0
    edges = []
    for g, count in zip(graphs, multiplicities):
        if count < 0:
            raise DomainError(f"multiplicity must be nonnegative, got {count}")
        for _ in range(count):
            edges.extend((u + offset, v + offset) for u, v in g.edges)
            offset += g.n
    return Graph(offset, frozenset(edges))


def join(g: Graph, h: Graph) -> Graph:
    """G ∨ H with the G block first."""
    edges = set(g.edges)
    edges.update((u + g.n, v + g.n) for u, v in h.edges)
    edges.update((u, g.n + v) for u in range(g.n) for v in range(h.n))
    return Graph(g.n + h.n, frozenset(edges))


@dataclass(frozen=True)
class StructuralProfile:
    degree_sequence: Tuple[int, ...]
    max_degree: int
    min_degree: int
    pendant_count: int
    isolated_count: int
    component_count: int

    @property
    def is_two_leaves_free(self) -> bool:
        return self.pendant_count <= 1

    @property
    def is_leaf_free(self) -> bool:
        return self.pendant_count == 0


def structural_profile(g: Graph) -> StructuralProfile:
    degrees = g.degrees
    return StructuralProfile(
        degree_sequence=tuple(sorted(degrees, reverse=True)),
        max_degree=max(degrees, default=0),
        min_degree=min(degrees, default=0),
        pendant_count=sum(1 for d in degrees if d == 1),
        isolated_count=sum(1 for d in degrees if d == 0),
        component_count=len(g.components),
    )


def is_forest(g: Graph) -> bool:
    # networkx treats the null graph as pointless
    return g.n == 0 or nx.is_forest(g.nx_view)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Isomorphism test: canonical forms within the configured bound, VF2 beyond it."""
    if g.n != h.n or g.m != h.m or sorted(g.degrees) != sorted(h.degrees):
        return False
    from core.canonical import canonical_form, canonical_bound

    if g.n <= canonical_bound():
        return canonical_form(g) == canonical_form(h)
    return nx.is_isomorphic(g.nx_view, h.nx_view)
