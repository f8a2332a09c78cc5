"""
Equitable partitions and quotient matrices of Q = D + A, numeric and parameterized in k.
"""

from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from core.canonical import refine_ordered
from core.errors import CapabilityError, DomainError
from core.exactpoly import K, MatrixZk
from core.families import FamilyId, FamilyInstance
from core.graph import Graph

Partition = Tuple[Tuple[int, ...], ...]


def _validate_cover(g: Graph, cells: Sequence[Sequence[int]]) -> None:
    seen = sorted(v for cell in cells for v in cell)
    if seen != list(range(g.n)) or any(len(cell) == 0 for cell in cells):
        raise DomainError("partition cells must be nonempty and cover every vertex exactly once")


def coarsest_equitable(g: Graph, seed: Optional[Sequence[Sequence[int]]] = None) -> Partition:
    """Coarsest equitable refinement of `seed`, cells ordered by smallest vertex."""
    cells = [list(range(g.n))] if seed is None else [list(c) for c in seed]
    _validate_cover(g, cells)
    refined = refine_ordered(g.adjacency, cells)
    return tuple(sorted((tuple(sorted(c)) for c in refined), key=lambda c: c[0]))


def equitable_violation(g: Graph, cells: Sequence[Sequence[int]]) -> Optional[Tuple[int, int, int, int, int, int]]:
    """First (i, j, a, count_a, b, count_b) where cell i is not uniform towards cell j."""
    cell_sets = [set(c) for c in cells]
    for i, cell in enumerate(cells):
        for j, target in enumerate(cell_sets):
            counts = [(v, len(g.adjacency[v] & target)) for v in cell]
            a, count_a = counts[0]
            for b, count_b in counts[1:]:
                if count_b != count_a:
                    return i, j, a, count_a, b, count_b
    return None


def is_equitable(g: Graph, cells: Sequence[Sequence[int]]) -> bool:
    return equitable_violation(g, cells) is None


def quotient_q(g: Graph, cells: Sequence[Sequence[int]]) -> np.ndarray:
    """Quotient B of Q over an equitable partition: neighbor counts plus degree on the diagonal."""
    _validate_cover(g, cells)
    violation = equitable_violation(g, cells)
    if violation is not None:
        i, j, a, count_a, b, count_b = violation
        raise DomainError(
            f"partition is not equitable for cells ({i}, {j}): vertex {a} has {count_a} "
            f"neighbors in cell {j}, vertex {b} has {count_b}")

    size = len(cells)
    matrix = np.zeros((size, size), dtype=np.int64)
    cell_sets = [set(c) for c in cells]
    for i, cell in enumerate(cells):
        representative = cell[0]
        for j, target in enumerate(cell_sets):
            matrix[i, j] = len(g.adjacency[representative] & target)
        matrix[i, i] += g.degrees[representative]
    return matrix


# orbit cells by role name, then B rows
_TEMPLATES: Dict[FamilyId, Tuple[Tuple[str, ...], int, List[list]]] = {
    FamilyId.K1vKP2: (("w", "pairs"), 1, [
        [2 * K, 2 * K],
        [1, 3],
    ]),
    FamilyId.K1vKP2P1: (("w", "pairs", "P1"), 1, [
        [2 * K + 1, 2 * K, 1],
        [1, 3, 0],
        [1, 0, 1],
    ]),
    FamilyId.K1vS3P1: (("w", "pairs", "S3.leaves", "S3.hub", "P1"), 3, [
        [2 * K, 2 * K - 4, 2, 1, 1],
        [1, 3, 0, 0, 0],
        [1, 0, 2, 1, 0],
        [1, 0, 2, 3, 0],
        [1, 0, 0, 0, 1],
    ]),
    FamilyId.K1vS4P1: (("w", "pairs", "S4.leaves", "S4.hub", "P1"), 3, [
        [2 * K + 1, 2 * K - 4, 3, 1, 1],
        [1, 3, 0, 0, 0],
        [1, 0, 2, 1, 0],
        [1, 0, 3, 4, 0],
        [1, 0, 0, 0, 1],
    ]),
    FamilyId.K1vKP2_S4: (("w", "pairs", "S4.leaves", "S4.hub"), 3, [
        [2 * K, 2 * K - 4, 3, 1],
        [1, 3, 0, 0],
        [1, 0, 2, 1],
        [1, 0, 3, 4],
    ]),
    FamilyId.K1vKP2_S3: (("w", "pairs", "S3.leaves", "S3.hub"), 2, [
        [2 * K + 1, 2 * K - 2, 2, 1],
        [1, 3, 0, 0],
        [1, 0, 2, 1],
        [1, 0, 2, 3],
    ]),
    FamilyId.L2: (("w", "pairs", "u3", "w'"), 2, [
        [2 * K + 1, 2 * K, 1, 0],
        [1, 3, 0, 0],
        [1, 0, 2, 1],
        [0, 0, 1, 1],
    ]),
}


def has_template(family: FamilyId) -> bool:
    return family in _TEMPLATES


def symbolic_quotient(family: FamilyId) -> MatrixZk:
    """Parameterized quotient B(k) over the family's orbit partition."""
    if family not in _TEMPLATES:
        raise CapabilityError(f"no quotient template stored for {family.value}")
    return MatrixZk(_TEMPLATES[family][2])


def template_min_k(family: FamilyId) -> int:
    """Smallest k at which every template cell is nonempty."""
    if family not in _TEMPLATES:
        raise CapabilityError(f"no quotient template stored for {family.value}")
    return _TEMPLATES[family][1]


def family_partition(instance: FamilyInstance) -> Partition:
    """The construction-order orbit partition matching the family's template."""
    if instance.id not in _TEMPLATES:
        raise CapabilityError(f"no quotient template stored for {instance.id.value}")
    return instance.cells(_TEMPLATES[instance.id][0])
