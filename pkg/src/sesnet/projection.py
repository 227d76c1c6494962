"""Projection of a complex onto its underlying graph, and what that loses."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .complex import (
    Simplex,
    SimplicialComplex,
    VertexUniverse,
    f_vector,
    p_skeleton,
    require_same_universe,
)

__all__ = [
    "Collision",
    "LossReport",
    "UnderlyingGraph",
    "graphs_identical",
    "loss_report",
    "skeleton_collision",
    "to_tgf",
    "to_underlying_graph",
]


@dataclass(frozen=True)
class UnderlyingGraph:
    universe: VertexUniverse
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        vs = set(self.vertices)
        for a, b in self.edges:
            if a == b:
                raise ValueError(f"self-loop on vertex {a}")
            if a > b:
                raise ValueError(f"edge ({a}, {b}) is not canonical")
            if a not in vs or b not in vs:
                raise ValueError(f"edge ({a}, {b}) has an endpoint outside the vertex set")
        if len(set(self.edges)) != len(self.edges):
            raise ValueError("duplicate edge")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UnderlyingGraph):
            return NotImplemented
        return (self.universe, self.vertices, self.edges) == (other.universe, other.vertices, other.edges)

    __hash__ = None  # type: ignore[assignment]


def to_underlying_graph(cx: SimplicialComplex) -> UnderlyingGraph:
    skel = p_skeleton(cx, 1)
    vertices = tuple(s[0] for s in skel.stratum(0))
    edges = tuple((s[0], s[1]) for s in skel.stratum(1))
    return UnderlyingGraph(cx.universe, vertices, edges)


def graphs_identical(g1: UnderlyingGraph, g2: UnderlyingGraph) -> bool:
    """Labeled equality over a shared universe (not isomorphism)."""
    require_same_universe(g1.universe, g2.universe)
    return g1.vertices == g2.vertices and g1.edges == g2.edges


def to_tgf(graph: UnderlyingGraph) -> str:
    """Trivial Graph Format: node lines, a ``#`` separator, then edge lines."""
    ids = graph.universe.ids
    lines = [ids[v] for v in graph.vertices]
    lines.append("#")
    lines.extend(f"{ids[a]} {ids[b]}" for a, b in graph.edges)
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class LossReport:
    simplices_total: int
    simplices_surviving: int
    lost_by_dimension: dict[int, int]
    dimension: int

    @property
    def dimension_drop(self) -> int:
        return self.dimension - min(self.dimension, 1)

    @property
    def simplices_lost(self) -> int:
        return sum(self.lost_by_dimension.values())

    def to_dict(self) -> dict:
        return {
            "simplices_total": self.simplices_total,
            "simplices_surviving": self.simplices_surviving,
            "simplices_lost": self.simplices_lost,
            "lost_by_dimension": {str(d): n for d, n in self.lost_by_dimension.items()},
            "dimension": self.dimension,
            "dimension_drop": self.dimension_drop,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_table(self) -> str:
        rows = [
            ("simplices in complex", self.simplices_total),
            ("simplices in underlying graph", self.simplices_surviving),
        ]
        rows += [(f"lost {d}-simplices", n) for d, n in self.lost_by_dimension.items()]
        rows += [("dimension", self.dimension), ("dimension drop", self.dimension_drop)]
        width = max(len(k) for k, _ in rows)
        return "\n".join(f"{k:<{width}}  {v}" for k, v in rows) + "\n"


def loss_report(cx: SimplicialComplex) -> LossReport:
    f = f_vector(cx)
    return LossReport(
        simplices_total=sum(f),
        simplices_surviving=sum(f[:2]),
        lost_by_dimension={d: f[d] for d in range(2, len(f))},
        dimension=cx.dimension,
    )


@dataclass(frozen=True)
class Collision:
    """``collides`` is true when the underlying graphs agree but the complexes do not.

    ``witness`` is a highest-dimensional member found in exactly one of the
    two complexes, or None when they are equal.
    """

    collides: bool
    witness: Simplex | None


def skeleton_collision(c1: SimplicialComplex, c2: SimplicialComplex) -> Collision:
    require_same_universe(c1.universe, c2.universe)
    diff = set(c1.members()).symmetric_difference(c2.members())
    witness = min(diff, key=lambda s: (-len(s), s)) if diff else None
    same_graph = graphs_identical(to_underlying_graph(c1), to_underlying_graph(c2))
    return Collision(same_graph and bool(diff), witness)
