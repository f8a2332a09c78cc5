"""
Parameterized extremal families and proof gadgets.

Every K1-join family is laid out as the center w = 0, then the (k - offset) matched pairs,
then its special components in table order. The L-families are built edge by edge with
the same center-first convention, the outside vertex w' always last.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import sympy

from core.errors import DomainError
from core.graph import Graph, PrimitiveKind, build_primitive, disjoint_union, join

Roles = Dict[str, Tuple[int, ...]]

THEOREM_MIN_M = 17


class FamilyId(Enum):
    K1vKP2 = "K1v(kP2)"
    K1vKP2_S4 = "K1v(S4)"
    K1vKP2_S3 = "K1v(S3)"
    K1vKP2P1 = "K1v(kP2+P1)"
    K1vS3P1 = "K1v(S3+P1)"
    K1vS4P1 = "K1v(S4+P1)"
    K1v2S3P1 = "K1v(2S3+P1)"
    K1vP4P1 = "K1v(P4+P1)"
    K1vS5 = "K1v(S5)"
    K1vS6 = "K1v(S6)"
    K1vS7P1 = "K1v(S7+P1)"
    K1vS5P1 = "K1v(S5+P1)"
    K1vS6P1 = "K1v(S6+P1)"
    K1vC3 = "K1v(C3)"
    K1vC3P1 = "K1v(C3+P1)"
    K1vC4 = "K1v(C4)"
    K1vC4P1 = "K1v(C4+P1)"
    K1vC3S3 = "K1v(C3+S3)"
    K1vS3C3P1 = "K1v(S3+C3+P1)"
    L1 = "L1"
    L2 = "L2"
    L3 = "L3"
    L4 = "L4"
    L5 = "L5"

    @classmethod
    def parse(cls, text: str) -> "FamilyId":
        """Accept the display name ("K1v(kP2+P1)") or the tag ("K1vKP2P1")."""
        key = text.strip().replace(" ", "").lower()
        for family in cls:
            if key in (family.value.lower(), family.name.lower()):
                return family
        names = ", ".join(f.value for f in cls)
        raise DomainError(f"unknown family {text!r}; expected one of: {names}")


# (label, primitive kind, order)
Component = Tuple[str, PrimitiveKind, int]


@dataclass(frozen=True)
class FamilySpec:
    family: FamilyId
    residue: int
    min_k: int
    center_offset: int
    anchor: str
    pair_offset: Optional[int] = None
    components: Tuple[Component, ...] = ()
    leaf_free: bool = False


@dataclass
class FamilyInstance:
    id: FamilyId
    k: int
    graph: Graph
    expected_m: int
    expected_delta: int
    roles: Roles = field(default_factory=dict)

    def cells(self, names: Sequence[str]) -> Tuple[Tuple[int, ...], ...]:
        """Partition built from named roles, empty roles dropped."""
        return tuple(self.roles[name] for name in names if self.roles.get(name))


_STAR = PrimitiveKind.STAR
_PATH = PrimitiveKind.PATH
_CYCLE = PrimitiveKind.CYCLE

FAMILIES: Dict[FamilyId, FamilySpec] = {spec.family: spec for spec in [
    FamilySpec(FamilyId.K1vKP2, 0, 1, 0, "Theorem 1.1(i), K1∨kP2", 0, (), True),
    FamilySpec(FamilyId.K1vKP2_S4, 1, 2, 0, "Theorem 1.1(ii), K1∨((k−2)P2∪S4)", 2,
               (("S4", _STAR, 4),), True),
    FamilySpec(FamilyId.K1vKP2_S3, 2, 1, 1, "Theorem 1.1(iii), K1∨((k−1)P2∪S3)", 1,
               (("S3", _STAR, 3),), True),
    FamilySpec(FamilyId.K1vKP2P1, 1, 1, 1, "Theorem 1.2(ii), G≅K1∨(kP2∪P1)", 0,
               (("P1", _PATH, 1),)),
    FamilySpec(FamilyId.K1vS3P1, 0, 2, 0, "Theorem 1.2(i), G≅K1∨((k−2)P2∪S3∪P1)", 2,
               (("S3", _STAR, 3), ("P1", _PATH, 1))),
    FamilySpec(FamilyId.K1vS4P1, 2, 2, 1, "Theorem 1.2(iii), G≅K1∨((k−2)P2∪S4∪P1)", 2,
               (("S4", _STAR, 4), ("P1", _PATH, 1))),
    FamilySpec(FamilyId.K1v2S3P1, 2, 3, 1, "Δ-bound lemma, K1∨((k−3)P2∪2S3∪P1)", 3,
               (("S3a", _STAR, 3), ("S3b", _STAR, 3), ("P1", _PATH, 1))),
    FamilySpec(FamilyId.K1vP4P1, 2, 2, 1, "Δ-bound lemma, K1∨((k−2)P2∪P4∪P1)", 2,
               (("P4", _PATH, 4), ("P1", _PATH, 1))),
    FamilySpec(FamilyId.K1vS5, 0, 3, -1, "proof of Theorem 1.2, K1∨((k−3)P2∪S5)", 3,
               (("S5", _STAR, 5),)),
    FamilySpec(FamilyId.K1vS6, 2, 3, 0, "proof of Theorem 1.2, K1∨((k−3)P2∪S6)", 3,
               (("S6", _STAR, 6),)),
    FamilySpec(FamilyId.K1vS7P1, 2, 4, 0, "proof of Theorem 1.2, K1∨((k−4)P2∪S7∪P1)", 4,
               (("S7", _STAR, 7), ("P1", _PATH, 1))),
    FamilySpec(FamilyId.K1vS5P1, 1, 3, 0, "proof of Theorem 1.2, K1∨((k−3)P2∪S5∪P1)", 3,
               (("S5", _STAR, 5), ("P1", _PATH, 1))),
    FamilySpec(FamilyId.K1vS6P1, 0, 4, -1, "proof of Theorem 1.2, K1∨((k−4)P2∪S6∪P1)", 4,
               (("S6", _STAR, 6), ("P1", _PATH, 1))),
    FamilySpec(FamilyId.K1vC3, 0, 2, -1, "proof of Theorem 1.2, K1∨((k−2)P2∪C3)", 2,
               (("C3", _CYCLE, 3),)),
    FamilySpec(FamilyId.K1vC3P1, 1, 2, 0, "proof of Theorem 1.2, K1∨((k−2)P2∪C3∪P1)", 2,
               (("C3", _CYCLE, 3), ("P1", _PATH, 1))),
    FamilySpec(FamilyId.K1vC4, 2, 2, 0, "proof of Theorem 1.2, K1∨((k−2)P2∪C4)", 2,
               (("C4", _CYCLE, 4),)),
    FamilySpec(FamilyId.K1vC4P1, 0, 3, -1, "proof of Theorem 1.2, K1∨((k−3)P2∪C4∪P1)", 3,
               (("C4", _CYCLE, 4), ("P1", _PATH, 1))),
    FamilySpec(FamilyId.K1vC3S3, 2, 3, 0, "proof of Theorem 1.2, K1∨((k−3)P2∪C3∪S3)", 3,
               (("C3", _CYCLE, 3), ("S3", _STAR, 3))),
    FamilySpec(FamilyId.K1vS3C3P1, 0, 4, -1, "proof of Theorem 1.2, K1∨((k−4)P2∪S3∪C3∪P1)", 4,
               (("S3", _STAR, 3), ("C3", _CYCLE, 3), ("P1", _PATH, 1))),
    FamilySpec(FamilyId.L1, 2, 2, 1, "Δ-bound lemma, G∈{L1,L2}"),
    FamilySpec(FamilyId.L2, 2, 2, 1, "Δ-bound lemma, G∈{L1,L2}"),
    FamilySpec(FamilyId.L3, 1, 2, 0, "proof of Theorem 1.2, G≅L3"),
    FamilySpec(FamilyId.L4, 1, 3, 0, "proof of Theorem 1.2, L4"),
    FamilySpec(FamilyId.L5, 1, 2, 0, "proof of Theorem 1.2, L5"),
]}

THEOREM_11_FAMILIES = (FamilyId.K1vKP2, FamilyId.K1vKP2_S4, FamilyId.K1vKP2_S3)
THEOREM_12_FAMILIES = (FamilyId.K1vS3P1, FamilyId.K1vKP2P1, FamilyId.K1vS4P1)


def min_k(family: FamilyId) -> int:
    return FAMILIES[family].min_k


def k1_join(pairs: int, *components: Graph) -> Graph:
    """K1 ∨ (pairs·P2 ∪ components...), center first."""
    p2 = build_primitive(PrimitiveKind.PATH, 2)
    union = disjoint_union([p2, *components], [pairs] + [1] * len(components))
    return join(build_primitive(PrimitiveKind.EDGELESS, 1), union)


def _build_join_family(spec: FamilySpec, k: int) -> Tuple[Graph, Roles]:
    assert spec.pair_offset is not None
    pairs = k - spec.pair_offset
    parts = [build_primitive(kind, order) for _, kind, order in spec.components]
    graph = k1_join(pairs, *parts)

    roles: Roles = {"w": (0,), "pairs": tuple(range(1, 2 * pairs + 1))}
    offset = 2 * pairs + 1
    for (label, kind, order), part in zip(spec.components, parts):
        block = tuple(range(offset, offset + part.n))
        roles[label] = block
        if kind is PrimitiveKind.STAR:
            roles[f"{label}.hub"] = block[:1]
            roles[f"{label}.leaves"] = block[1:]
        offset += part.n
    return graph, roles


class _Layout:
    """Center-first edge-by-edge layout for the L-families."""

    def __init__(self):
        self.n = 1
        self.edges: List[Tuple[int, int]] = []
        self.roles: Dict[str, List[int]] = {"w": [0], "pairs": []}

    def vertex(self, role: str, joined: bool = True) -> int:
        v = self.n
        self.n += 1
        self.roles.setdefault(role, []).append(v)
        if joined:
            self.edges.append((0, v))
        return v

    def pairs(self, count: int) -> None:
        for _ in range(count):
            a, b = self.vertex("pairs"), self.vertex("pairs")
            self.edges.append((a, b))

    def edge(self, u: int, v: int) -> None:
        self.edges.append((u, v))

    def result(self) -> Tuple[Graph, Roles]:
        roles = {name: tuple(vs) for name, vs in self.roles.items()}
        return Graph.from_edges(self.n, self.edges), roles


def _build_l1(k: int) -> Tuple[Graph, Roles]:
    layout = _Layout()
    layout.pairs(k - 1)
    layout.vertex("u1")
    u2, u3 = layout.vertex("u2"), layout.vertex("u3")
    outside = layout.vertex("w'", joined=False)
    layout.edge(u2, outside)
    layout.edge(u3, outside)
    return layout.result()


def _build_l2(k: int) -> Tuple[Graph, Roles]:
    layout = _Layout()
    layout.pairs(k)
    u3 = layout.vertex("u3")
    layout.edge(u3, layout.vertex("w'", joined=False))
    return layout.result()


def _build_l3(k: int) -> Tuple[Graph, Roles]:
    layout = _Layout()
    layout.pairs(k - 1)
    u1, u2 = layout.vertex("u1"), layout.vertex("u2")
    outside = layout.vertex("w'", joined=False)
    layout.edge(u1, outside)
    layout.edge(u2, outside)
    return layout.result()


def _build_l4(k: int) -> Tuple[Graph, Roles]:
    layout = _Layout()
    layout.pairs(k - 3)
    u1, u2 = layout.vertex("u1"), layout.vertex("u2")
    u3, u4, u5 = layout.vertex("u3"), layout.vertex("u4"), layout.vertex("u5")
    layout.vertex("pendant")
    outside = layout.vertex("w'", joined=False)
    layout.edge(u1, outside)
    layout.edge(u2, outside)
    layout.edge(u3, u4)
    layout.edge(u3, u5)
    return layout.result()


def _build_l5(k: int) -> Tuple[Graph, Roles]:
    layout = _Layout()
    layout.pairs(k - 2)
    us = [layout.vertex("u1"), layout.vertex("u2"), layout.vertex("u3")]
    layout.vertex("pendant")
    outside = layout.vertex("w'", joined=False)
    for u in us:
        layout.edge(u, outside)
    return layout.result()


_L_BUILDERS: Dict[FamilyId, Callable[[int], Tuple[Graph, Roles]]] = {
    FamilyId.L1: _build_l1,
    FamilyId.L2: _build_l2,
    FamilyId.L3: _build_l3,
    FamilyId.L4: _build_l4,
    FamilyId.L5: _build_l5,
}


def build_family(family: FamilyId, k: int) -> FamilyInstance:
    """Build the member of `family` with parameter k."""
    spec = FAMILIES[family]
    if k < spec.min_k:
        raise DomainError(f"{family.value} needs k >= {spec.min_k}, got k = {k}")

    if family in _L_BUILDERS:
        graph, roles = _L_BUILDERS[family](k)
    else:
        graph, roles = _build_join_family(spec, k)

    return FamilyInstance(
        id=family,
        k=k,
        graph=graph,
        expected_m=3 * k + spec.residue,
        expected_delta=2 * k + spec.center_offset,
        roles=roles,
    )


@dataclass(frozen=True)
class Prediction:
    family: FamilyId
    k: int
    hypothesis_met: bool
    warning: Optional[str] = None
    has_member: bool = True


def predicted_extremal(m: int) -> Prediction:
    """Residue-class extremal family for 2-leaves-free graphs of size m, warning below m = 17."""
    if m < 0:
        raise DomainError(f"size must be nonnegative, got m = {m}")
    k, residue = divmod(m, 3)
    family = {0: FamilyId.K1vS3P1, 1: FamilyId.K1vKP2P1, 2: FamilyId.K1vS4P1}[residue]
    if m >= THEOREM_MIN_M:
        return Prediction(family, k, True)
    warning = f"theorem hypothesis m >= {THEOREM_MIN_M} unmet for m = {m}"
    if k < FAMILIES[family].min_k:
        return Prediction(family, k, False, f"{warning}; no {family.value} member has size m",
                          has_member=False)
    return Prediction(family, k, False, warning)


def closed_form_q(family: FamilyId, k: int) -> Optional[sympy.Expr]:
    """Exact Q-index where a closed form exists, else None."""
    if k < FAMILIES[family].min_k:
        raise DomainError(f"{family.value} needs k >= {FAMILIES[family].min_k}, got k = {k}")
    k_ = sympy.Integer(k)
    if family is FamilyId.K1vKP2P1:
        return (2 * k_ + 3 + sympy.sqrt(4 * k_**2 + 4 * k_ + 9)) / 2
    if family is FamilyId.K1vKP2:
        return (2 * k_ + 3 + sympy.sqrt(4 * k_**2 - 4 * k_ + 9)) / 2
    return None


# m = 3k: the equality case is K1∨kP2 as the proof derives it; the statement's
# "K1∨(kP2∪P1)" has 3k+1 edges.
DELTA_CATALOG: Dict[int, Tuple[FamilyId, ...]] = {
    0: (FamilyId.K1vKP2, FamilyId.K1vS3P1),
    1: (FamilyId.K1vKP2P1,),
    2: (FamilyId.L1, FamilyId.L2, FamilyId.K1vKP2_S3, FamilyId.K1vS4P1,
        FamilyId.K1vP4P1, FamilyId.K1v2S3P1),
}


def delta_equality_catalog(m: int) -> List[FamilyInstance]:
    """Δ-bound equality graphs for size m, members below their min_k skipped."""
    k, residue = divmod(m, 3)
    return [build_family(f, k) for f in DELTA_CATALOG[residue] if k >= FAMILIES[f].min_k]
