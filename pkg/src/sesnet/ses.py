"""Social-ecological systems and the networks built from them.

A system is a vertex universe split into social and ecological units, a
family of interactions (plain, not auto-closed) and a set of opaque constant
labels. A network is a time-indexed sequence of simplicial complexes over
that universe, produced by a step algorithm.
"""

from __future__ import annotations

import enum
from collections.abc import Callable, Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from itertools import combinations

from .complex import (
    DEFAULT_SIMPLEX_CAP,
    Simplex,
    SimplicialComplex,
    VertexUniverse,
    canonicalize,
    validate,
)
from .errors import (
    DimensionError,
    DisjointnessError,
    DuplicateVertexError,
    EmptyUniverseError,
    ParseError,
    RangeError,
    UnknownVertexError,
)

__all__ = [
    "DependencyReport",
    "Environment",
    "InteractionPartition",
    "OrderClass",
    "SenNetwork",
    "SesStructure",
    "UnitKind",
    "build_ses",
    "check_subset_dependency",
    "classify_order",
    "embed_in_environment",
    "interaction_order",
    "parse_ses_document",
    "partition_interactions",
    "ses_to_sen",
]


class UnitKind(enum.Enum):
    SOCIAL = "social"
    ECOLOGICAL = "ecological"


class OrderClass(enum.Enum):
    LOWER = "lower"
    HIGHER = "higher"


@dataclass(frozen=True)
class SesStructure:
    universe: VertexUniverse
    kinds: Mapping[str, UnitKind]
    interactions: tuple[Simplex, ...]
    constants: tuple[str, ...] = ()

    @property
    def social_vertices(self) -> frozenset[str]:
        return frozenset(v for v, k in self.kinds.items() if k is UnitKind.SOCIAL)

    @property
    def ecological_vertices(self) -> frozenset[str]:
        return frozenset(v for v, k in self.kinds.items() if k is UnitKind.ECOLOGICAL)

    @property
    def vertices(self) -> frozenset[str]:
        return frozenset(self.kinds)

    def kind_of(self, index: int) -> UnitKind:
        return self.kinds[self.universe.ids[index]]

    def label(self, simplex: Sequence[int]) -> tuple[str, ...]:
        return self.universe.labels(simplex)


def _build(
    pairs: Sequence[tuple[str, UnitKind, int | None]],
    interactions: Sequence[tuple[Sequence[str], int | None]],
    constants: Iterable[str],
    allow_single_kind: bool,
) -> SesStructure:
    universe = VertexUniverse()
    kinds: dict[str, UnitKind] = {}
    for vid, kind, line in pairs:
        if vid in kinds:
            if kinds[vid] is not kind:
                raise DisjointnessError(
                    f"vertex {vid!r} is declared both social and ecological", line=line
                )
            raise DuplicateVertexError(f"duplicate vertex id {vid!r}", line=line)
        try:
            universe.register(vid)
        except ParseError as exc:
            raise ParseError(str(exc), line=line) from None
        kinds[vid] = kind

    present = set(kinds.values())
    if not present:
        raise EmptyUniverseError("the system has no vertices")
    if not allow_single_kind:
        for kind in UnitKind:
            if kind not in present:
                raise EmptyUniverseError(
                    f"no {kind.value} vertices; both kinds are required (use allow-single-kind to relax)"
                )

    family: list[Simplex] = []
    seen: set[Simplex] = set()
    for ids, line in interactions:
        try:
            s = canonicalize(universe, ids)
        except UnknownVertexError as exc:
            raise UnknownVertexError(f"interaction references {exc}", line=line) from None
        if s not in seen:
            seen.add(s)
            family.append(s)
    family.sort()
    return SesStructure(universe, kinds, tuple(family), tuple(constants))


def build_ses(
    social_ids: Iterable[str],
    ecological_ids: Iterable[str],
    interaction_lists: Iterable[Sequence[str]] = (),
    constant_labels: Iterable[str] = (),
    *,
    allow_single_kind: bool = False,
) -> SesStructure:
    """Build a system, registering social ids first, then ecological ids.

    Interactions are canonicalized and deduplicated but not closed.
    """
    social = list(social_ids)
    ecological = list(ecological_ids)
    overlap = sorted(set(social) & set(ecological))
    if overlap:
        raise DisjointnessError(f"vertex {overlap[0]!r} is declared both social and ecological")
    pairs = [(v, UnitKind.SOCIAL, None) for v in social]
    pairs += [(v, UnitKind.ECOLOGICAL, None) for v in ecological]
    return _build(pairs, [(list(e), None) for e in interaction_lists], constant_labels, allow_single_kind)


def interaction_order(interaction: Sequence[int]) -> int:
    return len(interaction) - 1


def classify_order(interaction: Sequence[int]) -> OrderClass:
    return OrderClass.HIGHER if len(interaction) >= 3 else OrderClass.LOWER


@dataclass(frozen=True)
class DependencyReport:
    holds: bool
    missing: tuple[Simplex, ...]
    missing_total: int


def check_subset_dependency(
    ses: SesStructure | Iterable[Sequence[int]], witness_limit: int = 10
) -> DependencyReport:
    """Is the interaction family closed under non-empty subsets?

    Missing subsets are reported largest first, so the witnesses name the
    immediate faces of an offending interaction before its vertices.
    """
    family = ses.interactions if isinstance(ses, SesStructure) else [Simplex(e) for e in ses]
    members = set(family)
    missing: set[Simplex] = set()
    for e in members:
        for r in range(1, len(e)):
            for c in combinations(e, r):
                if c not in members:
                    missing.add(Simplex._trusted(c))
    ordered = sorted(missing, key=lambda s: (-len(s), s))
    return DependencyReport(not missing, tuple(ordered[:witness_limit]), len(missing))


@dataclass(frozen=True)
class InteractionPartition:
    """Interactions split by the kinds of vertex they touch.

    ``cross`` holds every interaction with at least one vertex of each kind.
    """

    social_pure: tuple[Simplex, ...]
    ecological_pure: tuple[Simplex, ...]
    cross: tuple[Simplex, ...]


def partition_interactions(ses: SesStructure) -> InteractionPartition:
    buckets: dict[str, list[Simplex]] = {"social": [], "ecological": [], "cross": []}
    for e in ses.interactions:
        kinds = {ses.kind_of(i) for i in e}
        key = kinds.pop().value if len(kinds) == 1 else "cross"
        buckets[key].append(e)
    return InteractionPartition(
        tuple(buckets["social"]), tuple(buckets["ecological"]), tuple(buckets["cross"])
    )


@dataclass(frozen=True)
class Environment:
    """The universe X the system is embedded in; ``kinds`` tags whatever is known."""

    universe: frozenset[str]
    embedded_system: SesStructure
    kinds: Mapping[str, UnitKind | None] = field(default_factory=dict)

    def inclusion(self, vid: str) -> str:
        if vid not in self.embedded_system.kinds:
            raise UnknownVertexError(f"{vid!r} is not a vertex of the embedded system")
        return vid

    def complement(self) -> frozenset[str]:
        return self.universe - self.embedded_system.vertices


def embed_in_environment(
    ses: SesStructure,
    extra_ids: Iterable[str] | Mapping[str, UnitKind | None] = (),
) -> Environment:
    extra = dict(extra_ids) if isinstance(extra_ids, Mapping) else dict.fromkeys(extra_ids)
    clash = sorted(set(extra) & ses.vertices)
    if clash:
        raise DisjointnessError(f"environment id {clash[0]!r} collides with a system vertex")
    kinds: dict[str, UnitKind | None] = dict(ses.kinds)
    kinds.update(extra)
    return Environment(frozenset(kinds), ses, kinds)


@dataclass(frozen=True)
class SenNetwork:
    universe: VertexUniverse
    time_index: tuple[int, ...]
    complexes: Mapping[int, SimplicialComplex]

    @property
    def is_static(self) -> bool:
        return len(self.time_index) == 1

    def at(self, alpha: int) -> SimplicialComplex:
        return self.complexes[alpha]

    def final(self) -> SimplicialComplex:
        return self.complexes[self.time_index[-1]]


Algorithm = Callable[[int], Iterable[Sequence[int] | Sequence[str]]]


def _as_simplex(universe: VertexUniverse, item) -> Simplex:
    if isinstance(item, Simplex):
        return item
    items = list(item)
    if items and all(isinstance(x, str) for x in items):
        return canonicalize(universe, items)
    return Simplex(items)


def ses_to_sen(
    ses: SesStructure,
    algorithm: Algorithm,
    time_index: Iterable[int],
    *,
    simplex_cap: int = DEFAULT_SIMPLEX_CAP,
) -> SenNetwork:
    """Run ``algorithm`` at each step and close its output into a complex.

    Steps run in increasing order. Every resulting complex must have
    dimension at least 1.
    """
    steps = sorted(set(time_index))
    if not steps:
        raise RangeError("time index must be non-empty")
    if any(a < 0 for a in steps):
        raise RangeError("time index must contain natural numbers")
    complexes: dict[int, SimplicialComplex] = {}
    for alpha in steps:
        cx = SimplicialComplex(ses.universe, simplex_cap)
        for item in algorithm(alpha):
            cx.insert_closed(_as_simplex(ses.universe, item))
        if cx.dimension < 1:
            raise DimensionError(f"step {alpha} produced a complex of dimension {cx.dimension}; at least 1 is required")
        complexes[alpha] = cx.freeze()
    return SenNetwork(ses.universe, tuple(steps), complexes)


def network_is_valid(net: SenNetwork) -> bool:
    return all(validate(cx).ok for cx in net.complexes.values())


_SECTIONS = ("vertices", "interactions", "constants")


def parse_ses_document(text: str, *, allow_single_kind: bool = False) -> SesStructure:
    """Parse the ingestion document.

    Layout::

        # comment
        [vertices]
        s1 social
        e1 ecological
        [interactions]
        s1 e1
        [constants]
        no-felling-in-monsoon

    Errors carry the 1-based line number of the offending line.
    """
    section: str | None = None
    seen_sections: set[str] = set()
    pairs: list[tuple[str, UnitKind, int | None]] = []
    interactions: list[tuple[list[str], int | None]] = []
    constants: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("["):
            name = line.strip("[]").strip().lower()
            if not line.endswith("]") or name not in _SECTIONS:
                raise ParseError(f"unknown section header {line!r}", line=lineno)
            if name in seen_sections:
                raise ParseError(f"section [{name}] appears twice", line=lineno)
            seen_sections.add(name)
            section = name
            continue
        if section is None:
            raise ParseError("content before the first section header", line=lineno)
        if section == "vertices":
            tokens = line.split()
            if len(tokens) != 2:
                raise ParseError("expected '<id> <kind>'", line=lineno)
            vid, kind_name = tokens
            try:
                kind = UnitKind(kind_name.lower())
            except ValueError:
                raise ParseError(
                    f"unknown kind {kind_name!r}, expected 'social' or 'ecological'", line=lineno
                ) from None
            pairs.append((vid, kind, lineno))
        elif section == "interactions":
            interactions.append((line.split(), lineno))
        else:
            constants.append(line)
    if "vertices" not in seen_sections:
        raise ParseError("missing [vertices] section", line=max(1, len(text.splitlines())))
    return _build(pairs, interactions, constants, allow_single_kind)
