"""
Ordered equitable refinement and canonical labeling.

The canonical form of a graph is its relabeling whose row-major upper-triangle adjacency
bit string is lexicographically smallest among the leaves of an individualization-refinement
search. The search starts from the degree partition, always individualizes a vertex of the
first non-singleton cell, and skips siblings that an already discovered automorphism
(fixing the current prefix) maps onto an explored branch.
"""

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from core.config import get_config
from core.errors import CapabilityError
from core.graph import Graph

Cells = List[List[int]]


def refine_ordered(adjacency: Sequence[FrozenSet[int]], cells: Sequence[Sequence[int]]) -> Cells:
    """
    Split cells by their neighbor counts into every current cell until nothing splits.

    Sub-cells of a split cell stay in place and are ordered by signature, so the result
    depends only on the graph and the ordered seed, never on vertex names.
    """
    current = [list(c) for c in cells if c]
    while True:
        cell_of: Dict[int, int] = {}
        for index, cell in enumerate(current):
            for v in cell:
                cell_of[v] = index

        refined: Cells = []
        for cell in current:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups: Dict[Tuple[int, ...], List[int]] = {}
            for v in cell:
                counts = [0] * len(current)
                for w in adjacency[v]:
                    counts[cell_of[w]] += 1
                groups.setdefault(tuple(counts), []).append(v)
            for signature in sorted(groups):
                refined.append(sorted(groups[signature]))

        if len(refined) == len(current):
            return refined
        current = refined


@dataclass
class CanonicalLabeling:
    order: List[int]
    bits: str
    automorphisms: List[Tuple[int, ...]] = field(default_factory=list)

    @property
    def permutation(self) -> List[int]:
        """perm[v] is the canonical label of vertex v."""
        perm = [0] * len(self.order)
        for label, v in enumerate(self.order):
            perm[v] = label
        return perm


def adjacency_bits(g: Graph, order: Sequence[int]) -> str:
    adjacency = g.adjacency
    n = len(order)
    return "".join(
        "1" if order[j] in adjacency[order[i]] else "0"
        for i in range(n) for j in range(i + 1, n)
    )


class _Search:
    def __init__(self, g: Graph):
        self.g = g
        self.n = g.n
        self.first: Optional[Tuple[List[int], str]] = None
        self.best: Optional[Tuple[List[int], str]] = None
        self.automorphisms: List[Tuple[int, ...]] = []

    def run(self) -> CanonicalLabeling:
        self._visit(refine_ordered(self.g.adjacency, [list(range(self.n))]), ())
        assert self.best is not None
        return CanonicalLabeling(self.best[0], self.best[1], self.automorphisms)

    def _visit(self, cells: Cells, fixed: Tuple[int, ...]) -> None:
        target = next((i for i, cell in enumerate(cells) if len(cell) > 1), None)
        if target is None:
            self._leaf([cell[0] for cell in cells])
            return

        explored: List[int] = []
        for v in cells[target]:
            if explored and self._same_orbit(v, explored, fixed):
                continue
            explored.append(v)
            rest = [w for w in cells[target] if w != v]
            child = cells[:target] + [[v], rest] + cells[target + 1:]
            self._visit(refine_ordered(self.g.adjacency, child), fixed + (v,))

    def _leaf(self, order: List[int]) -> None:
        bits = adjacency_bits(self.g, order)
        if self.first is None or self.best is None:
            self.first = self.best = (order, bits)
            return
        if bits == self.first[1]:
            self._record(self.first[0], order)
        elif bits == self.best[1]:
            self._record(self.best[0], order)
        elif bits < self.best[1]:
            self.best = (order, bits)

    def _record(self, source: Sequence[int], target: Sequence[int]) -> None:
        gamma = [0] * self.n
        for x, y in zip(source, target):
            gamma[x] = y
        self.automorphisms.append(tuple(gamma))

    def _same_orbit(self, v: int, explored: Sequence[int], fixed: Tuple[int, ...]) -> bool:
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gamma in self.automorphisms:
            if all(gamma[f] == f for f in fixed):
                for x in range(self.n):
                    a, b = find(x), find(gamma[x])
                    if a != b:
                        parent[a] = b

        root = find(v)
        return any(find(w) == root for w in explored)


def canonical_bound() -> int:
    return get_config().enumeration.canonical_bound


def canonical_labeling(g: Graph, bound: Optional[int] = None) -> CanonicalLabeling:
    limit = canonical_bound() if bound is None else bound
    if g.n > limit:
        raise CapabilityError(f"canonical form supports n <= {limit}, got n = {g.n}")
    if g.n == 0:
        return CanonicalLabeling([], "")
    return _Search(g).run()


def canonical_form(g: Graph, bound: Optional[int] = None) -> Graph:
    """Return the canonical representative of g's isomorphism class."""
    return g.relabel(canonical_labeling(g, bound).permutation)


def canonical_key(g: Graph, bound: Optional[int] = None) -> Tuple[int, str]:
    """Hashable isomorphism-class key: (n, canonical bit string)."""
    return g.n, canonical_labeling(g, bound).bits
