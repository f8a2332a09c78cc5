"""
Numeric spectral computations on the signless Laplacian Q = D + A.

Every Q-index returned here is residual-certified: the reported eigenpair satisfies
||Qx - qx||_inf <= the configured residual tolerance, whichever solver produced it.
"""

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
import scipy.linalg

from core.config import get_config
from core.errors import DomainError, NumericError
from core.graph import Edge, Graph
from core.log_writer import get_logger


@dataclass
class QSpectrumResult:
    """Q-index, Perron vector of the achieving component and certification data."""
    q: float
    perron: np.ndarray
    residual: float
    component_q: List[float]
    solver: str = 'eigh'
    iterations: int = 0


def power_iteration(matrix: np.ndarray, tol: float, max_iterations: int,
                    residual_tol: Optional[float] = None) -> Tuple[float, np.ndarray, float, int]:
    """
    Rayleigh-quotient power iteration from the all-ones vector.

    Q is positive semidefinite, so the dominant eigenvalue is the largest one. Stops once
    the residual is certified and the Rayleigh quotient has settled to `tol`.

    Returns:
        (eigenvalue, unit eigenvector, inf-norm residual, iterations)
    """
    if residual_tol is None:
        residual_tol = get_config().tolerances.residual
    x = np.ones(matrix.shape[0]) / np.sqrt(matrix.shape[0])
    previous = np.inf
    best: Tuple[float, np.ndarray, float] = (0.0, x, np.inf)

    for iteration in range(1, max_iterations + 1):
        y = matrix @ x
        value = float(x @ y)
        residual = float(np.max(np.abs(y - value * x)))
        if residual < best[2]:
            best = (value, x, residual)
        if residual <= residual_tol and abs(value - previous) <= tol * max(1.0, abs(value)):
            return value, x, residual, iteration
        norm = np.linalg.norm(y)
        if norm == 0.0:
            return 0.0, x, residual, iteration
        previous = value
        x = y / norm

    raise NumericError("power iteration did not converge", best_vector=best[1],
                       residual=best[2], iterations=max_iterations)


def _top_eigenpair(matrix: np.ndarray, tol: float, solver: str) -> Tuple[float, np.ndarray, float, str, int]:
    config = get_config()
    residual_tol = config.tolerances.residual
    size = matrix.shape[0]

    if solver == 'eigh':
        values, vectors = scipy.linalg.eigh(matrix, subset_by_index=[size - 1, size - 1])
        value = float(values[0])
        x = vectors[:, 0]
        if x.sum() < 0:
            x = -x
        # nonnegative irreducible matrix: the top eigenvector is positive up to roundoff
        x = np.abs(x)
        x /= np.linalg.norm(x)
        residual = float(np.max(np.abs(matrix @ x - value * x)))
        if residual <= residual_tol:
            return value, x, residual, 'eigh', 0
        get_logger().log_warning(
            f"eigh residual {residual:.3e} above {residual_tol:.1e}, falling back to power iteration")

    value, x, residual, iterations = power_iteration(
        matrix, tol, config.spectral.max_iterations, residual_tol)
    return value, x, residual, 'power', iterations


def q_index(g: Graph, tol: Optional[float] = None, solver: Optional[str] = None) -> QSpectrumResult:
    """
    Q-index of g: the largest eigenvalue of Q over all connected components.

    Isolated vertices contribute 0. The Perron vector is supported on the first
    component attaining the maximum.
    """
    config = get_config()
    tol = config.spectral.eigen_tol if tol is None else tol
    solver = config.spectral.solver if solver is None else solver
    if g.n < 1:
        raise DomainError("Q-index needs at least one vertex")
    if tol < 1e-12:
        raise DomainError(f"tolerance must be at least 1e-12, got {tol}")

    component_q: List[float] = []
    best: Optional[Tuple[float, Sequence[int], np.ndarray, float, str, int]] = None
    for block in g.components:
        if len(block) == 1:
            entry = (0.0, block, np.ones(1), 0.0, solver, 0)
        else:
            matrix = g.induced_subgraph(block).signless_laplacian()
            value, x, residual, used, iterations = _top_eigenpair(matrix, tol, solver)
            entry = (value, block, x, residual, used, iterations)
        component_q.append(entry[0])
        if best is None or entry[0] > best[0]:
            best = entry

    assert best is not None
    value, block, x, residual, used, iterations = best
    perron = np.zeros(g.n)
    perron[list(block)] = x
    return QSpectrumResult(value, perron, residual, component_q, used, iterations)


def perron_vector(g: Graph) -> np.ndarray:
    """Positive unit Perron vector of a connected graph."""
    if g.n < 2 or not g.is_connected():
        raise DomainError("Perron vector needs a connected graph with at least 2 vertices")
    return q_index(g).perron


def perron_identity(g: Graph, x: np.ndarray) -> float:
    """Sum over edges of (x_i + x_j)^2, which equals x'Qx."""
    return float(sum((x[u] + x[v]) ** 2 for u, v in g.edges))


@dataclass(frozen=True)
class VertexBound:
    vertex: int
    degree: int
    average_degree: Fraction
    d_plus_m: Fraction
    first_cap: Fraction
    second_cap: Fraction


@dataclass
class DegreeBoundReport:
    records: List[VertexBound]
    max_d_plus_m: Fraction
    lemma24_ok: bool
    violations: List[int] = field(default_factory=list)


def degree_bound_report(g: Graph) -> DegreeBoundReport:
    """
    Exact d(v) + m(v) bounds with m(v) the average degree of v's neighbors.

    Checks m(v) <= min{2m/d(v) - 1, m/d(v) + (d(v) - 1)/2} for every non-isolated vertex.
    """
    if g.m == 0:
        raise DomainError("degree bound report needs at least one edge")
    degrees = g.degrees
    records: List[VertexBound] = []
    violations: List[int] = []
    for v in range(g.n):
        d = degrees[v]
        if d == 0:
            continue
        average = Fraction(sum(degrees[w] for w in g.adjacency[v]), d)
        first_cap = Fraction(2 * g.m, d) - 1
        second_cap = Fraction(g.m, d) + Fraction(d - 1, 2)
        records.append(VertexBound(v, d, average, d + average, first_cap, second_cap))
        if average > first_cap or average > second_cap:
            violations.append(v)
    return DegreeBoundReport(
        records=records,
        max_d_plus_m=max(r.d_plus_m for r in records),
        lemma24_ok=not violations,
        violations=violations,
    )


def rotate_edges(g: Graph, u: int, v: int, moved: Iterable[int]) -> Graph:
    """Replace every edge wv (w in moved) by wu."""
    moved = sorted(set(moved))
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise DomainError(f"vertices {u}, {v} outside 0..{g.n - 1}")
    if u == v:
        raise DomainError("rotation needs u != v")
    if not g.is_connected():
        raise DomainError("rotation needs a connected graph")
    for w in moved:
        if w == u:
            raise DomainError(f"vertex {w} is u itself")
        if w not in g.adjacency[v]:
            raise DomainError(f"vertex {w} is not a neighbor of v = {v}")
        if w in g.adjacency[u]:
            raise DomainError(f"vertex {w} is already a neighbor of u = {u}")
    return g.edit(removed=[(w, v) for w in moved], added=[(w, u) for w in moved])


def check_rotation_monotonicity(g: Graph, u: int, v: int, moved: Iterable[int],
                                margin: Optional[float] = None) -> bool:
    """True iff rotating `moved` from v to u raises the Q-index by more than the margin."""
    tolerances = get_config().tolerances
    margin = tolerances.strict_margin if margin is None else margin
    rotated = rotate_edges(g, u, v, moved)
    x = perron_vector(g)
    if x[u] < x[v] - tolerances.perron_tie:
        raise DomainError(f"Perron entry at u = {u} ({x[u]:.12g}) is below v = {v} ({x[v]:.12g})")
    if not rotated.is_connected():
        raise DomainError("rotated graph is disconnected")
    return q_index(rotated).q > q_index(g).q + margin


def rayleigh_gain(g: Graph, removed: Iterable[Edge], added: Iterable[Edge],
                  extra_vertices: int = 0) -> float:
    """
    X'^T (Q(G') - Q(G)) X' for the Perron vector X of g padded with zeros.

    A positive gain certifies q(G') > q(G), because q(G') >= X'^T Q(G') X'.
    """
    x = np.concatenate([q_index(g).perron, np.zeros(extra_vertices)])
    gain = sum((x[i] + x[j]) ** 2 for i, j in added)
    gain -= sum((x[i] + x[j]) ** 2 for i, j in removed)
    return float(gain)


def is_star(g: Graph) -> bool:
    core = g.without_isolated()
    return core.m == core.n - 1 and core.m >= 1 and max(core.degrees) == core.m


def star_bound_holds(g: Graph) -> bool:
    """q(G) >= Δ + 1 for connected G, with equality exactly for stars."""
    if g.m == 0 or not g.is_connected():
        raise DomainError("star bound needs a connected graph with an edge")
    tolerances = get_config().tolerances
    q = q_index(g).q
    bound = max(g.degrees) + 1
    equal = abs(q - bound) <= tolerances.agreement
    return q >= bound - tolerances.residual and equal == is_star(g)


def timed_q_index(graphs: Sequence[Graph], label: str) -> List[QSpectrumResult]:
    """Q-index of many graphs with one performance log line."""
    start = time.time()
    results = [q_index(g) for g in graphs]
    get_logger().log_performance(label, time.time() - start, graphs=len(graphs))
    return results
