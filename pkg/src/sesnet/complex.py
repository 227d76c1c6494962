"""Abstract simplicial complexes over a registered vertex universe.

Simplices are canonical: strictly increasing tuples of dense vertex indices.
A :class:`SimplicialComplex` is kept downward closed at all times, so every
query is a scan over per-dimension strata.
"""

from __future__ import annotations

import re
import warnings
from collections import deque
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .errors import (
    DuplicateVertexError,
    EmptySimplexError,
    ParseError,
    RangeError,
    SizeGuardError,
    UniverseMismatchError,
    UnknownVertexError,
)

__all__ = [
    "DEFAULT_SIMPLEX_CAP",
    "FacetWarning",
    "Simplex",
    "SimplicialComplex",
    "ValidationReport",
    "Vertex",
    "VertexUniverse",
    "Violation",
    "boundary",
    "canonicalize",
    "f_vector",
    "faces",
    "facets_paper",
    "from_text",
    "insert_closed",
    "maximal_simplices",
    "p_skeleton",
    "register_vertex",
    "to_text",
    "validate",
]

DEFAULT_SIMPLEX_CAP = 25

_HEADER = re.compile(r"^dim=(-?\d+) vertices=(\d+)$")


class FacetWarning(UserWarning):
    """Raised through :mod:`warnings` when facets are requested on a complex of dimension < 1."""


@dataclass(frozen=True)
class Vertex:
    id: str
    index: int


class VertexUniverse:
    """Registry of vertex ids with stable, dense indices."""

    def __init__(self, ids: Iterable[str] = ()) -> None:
        self._ids: list[str] = []
        self._index: dict[str, int] = {}
        for vid in ids:
            self.register(vid)

    def register(self, vid: str) -> Vertex:
        if not isinstance(vid, str) or not vid or any(ch.isspace() for ch in vid):
            raise ParseError(f"invalid vertex id {vid!r}: must be a non-empty string without whitespace")
        if vid in self._index:
            raise DuplicateVertexError(f"duplicate vertex id {vid!r}")
        index = len(self._ids)
        self._ids.append(vid)
        self._index[vid] = index
        return Vertex(vid, index)

    def index(self, vid: str) -> int:
        try:
            return self._index[vid]
        except KeyError:
            raise UnknownVertexError(f"unknown vertex id {vid!r}") from None

    def vertex(self, index: int) -> Vertex:
        return Vertex(self._ids[index], index)

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(self._ids)

    def labels(self, simplex: Sequence[int]) -> tuple[str, ...]:
        return tuple(self._ids[i] for i in simplex)

    def __len__(self) -> int:
        return len(self._ids)

    def __contains__(self, vid: object) -> bool:
        return vid in self._index

    def __iter__(self) -> Iterator[Vertex]:
        return (Vertex(vid, i) for i, vid in enumerate(self._ids))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VertexUniverse):
            return NotImplemented
        return self._ids == other._ids

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"VertexUniverse({self._ids!r})"


def register_vertex(universe: VertexUniverse, vid: str) -> Vertex:
    return universe.register(vid)


class Simplex(tuple):
    """A non-empty strictly increasing tuple of vertex indices.

    Construction sorts and deduplicates, so ``Simplex([2, 0, 2]) == (0, 2)``.
    Compares and hashes like the underlying tuple.
    """

    __slots__ = ()

    def __new__(cls, indices: Iterable[int]) -> Simplex:
        canonical = sorted(set(indices))
        if not canonical:
            raise EmptySimplexError("the empty simplex is not allowed")
        if canonical[0] < 0:
            raise UnknownVertexError(f"negative vertex index {canonical[0]}")
        return tuple.__new__(cls, canonical)

    @classmethod
    def _trusted(cls, indices: tuple[int, ...]) -> Simplex:
        # caller guarantees canonical form
        return tuple.__new__(cls, indices)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(self)

    @property
    def dimension(self) -> int:
        return len(self) - 1

    def __repr__(self) -> str:
        return f"Simplex{tuple(self)!r}"


def canonicalize(universe: VertexUniverse, vertex_ids: Iterable[str]) -> Simplex:
    ids = list(vertex_ids)
    if not ids:
        raise EmptySimplexError("cannot build a simplex from an empty id list")
    return Simplex(universe.index(v) for v in ids)


def faces(simplex: Sequence[int]) -> list[Simplex]:
    """All non-empty subsets of ``simplex`` (itself included), lexicographically ordered."""
    s = tuple(simplex)
    out = [Simplex._trusted(c) for r in range(1, len(s) + 1) for c in combinations(s, r)]
    out.sort()
    return out


class SimplicialComplex:
    """A downward-closed family of simplices, stored as one set per dimension.

    Only :meth:`insert_closed` adds members, and it always adds the full face
    lattice, so the closure invariant never needs checking after the fact.
    Call :meth:`freeze` once construction is done to make the complex
    read-only.
    """

    def __init__(self, universe: VertexUniverse | None = None, simplex_cap: int = DEFAULT_SIMPLEX_CAP) -> None:
        self.universe = universe if universe is not None else VertexUniverse()
        self.simplex_cap = simplex_cap
        self._strata: list[set[Simplex]] = []
        self._frozen = False

    @classmethod
    def from_simplices(
        cls,
        universe: VertexUniverse,
        simplices: Iterable[Iterable[int]],
        simplex_cap: int = DEFAULT_SIMPLEX_CAP,
    ) -> SimplicialComplex:
        cx = cls(universe, simplex_cap)
        for s in simplices:
            cx.insert_closed(s if isinstance(s, Simplex) else Simplex(s))
        return cx

    @classmethod
    def from_ids(
        cls,
        universe: VertexUniverse,
        id_lists: Iterable[Iterable[str]],
        simplex_cap: int = DEFAULT_SIMPLEX_CAP,
    ) -> SimplicialComplex:
        cx = cls(universe, simplex_cap)
        for ids in id_lists:
            cx.insert_closed(canonicalize(universe, ids))
        return cx

    def insert_closed(self, simplex: Simplex) -> None:
        if self._frozen:
            raise RuntimeError("complex is frozen")
        if not isinstance(simplex, Simplex):
            simplex = Simplex(simplex)
        if len(simplex) > self.simplex_cap:
            raise SizeGuardError(
                f"simplex of cardinality {len(simplex)} exceeds the cap of {self.simplex_cap}"
            )
        if simplex[-1] >= len(self.universe):
            raise UnknownVertexError(f"vertex index {simplex[-1]} is not registered")
        dim = simplex.dimension
        if dim < len(self._strata) and simplex in self._strata[dim]:
            return
        while len(self._strata) <= dim:
            self._strata.append(set())
        for r in range(1, len(simplex) + 1):
            stratum = self._strata[r - 1]
            for c in combinations(simplex, r):
                stratum.add(Simplex._trusted(c))

    def freeze(self) -> SimplicialComplex:
        self._frozen = True
        return self

    @property
    def frozen(self) -> bool:
        return self._frozen

    @property
    def dimension(self) -> int:
        return len(self._strata) - 1

    def stratum(self, dim: int) -> list[Simplex]:
        if 0 <= dim < len(self._strata):
            return sorted(self._strata[dim])
        return []

    def stratum_size(self, dim: int) -> int:
        return len(self._strata[dim]) if 0 <= dim < len(self._strata) else 0

    def members(self) -> list[Simplex]:
        out = [s for stratum in self._strata for s in stratum]
        out.sort()
        return out

    def label(self, simplex: Sequence[int]) -> tuple[str, ...]:
        return self.universe.labels(simplex)

    def copy(self) -> SimplicialComplex:
        cx = SimplicialComplex(self.universe, self.simplex_cap)
        cx._strata = [set(s) for s in self._strata]
        return cx

    def __len__(self) -> int:
        return sum(len(s) for s in self._strata)

    def __contains__(self, simplex: object) -> bool:
        if not isinstance(simplex, tuple) or not simplex:
            return False
        dim = len(simplex) - 1
        return dim < len(self._strata) and simplex in self._strata[dim]

    def __iter__(self) -> Iterator[Simplex]:
        return iter(self.members())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.universe == other.universe and self._strata == other._strata

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"<SimplicialComplex dim={self.dimension} f={f_vector(self)}>"


def insert_closed(complex_: SimplicialComplex, simplex: Simplex) -> SimplicialComplex:
    complex_.insert_closed(simplex)
    return complex_


def _non_maximal(cx: SimplicialComplex) -> set[Simplex]:
    # In a closed complex a member is non-maximal iff it is a codimension-1
    # face of some member one dimension up.
    covered: set[Simplex] = set()
    for dim in range(1, cx.dimension + 1):
        for s in cx._strata[dim]:
            for c in combinations(s, dim):
                covered.add(Simplex._trusted(c))
    return covered


def maximal_simplices(cx: SimplicialComplex) -> list[Simplex]:
    covered = _non_maximal(cx)
    return [s for s in cx.members() if s not in covered]


def boundary(cx: SimplicialComplex) -> list[Simplex]:
    """Members that are proper faces of some other member."""
    return sorted(_non_maximal(cx))


def facets_paper(cx: SimplicialComplex) -> list[Simplex]:
    """Every member of dimension ``dim(cx) - 1``.

    This is the literal "face of dimension d - 1" reading, not the maximal
    simplices (see :func:`maximal_simplices`). Complexes of dimension below 1
    have none; a :class:`FacetWarning` is emitted.
    """
    d = cx.dimension
    if d < 1:
        warnings.warn(f"facets requested on a complex of dimension {d}", FacetWarning, stacklevel=2)
        return []
    return cx.stratum(d - 1)


def p_skeleton(cx: SimplicialComplex, p: int) -> SimplicialComplex:
    if p < 0:
        raise RangeError(f"skeleton order must be non-negative, got {p}")
    out = SimplicialComplex(cx.universe, cx.simplex_cap)
    out._strata = [set(s) for s in cx._strata[: p + 1]]
    return out


def f_vector(cx: SimplicialComplex) -> tuple[int, ...]:
    return tuple(len(s) for s in cx._strata)


@dataclass(frozen=True)
class Violation:
    kind: str  # "closure" | "vertex" | "intersection"
    witness: tuple[Simplex, ...]

    def describe(self, universe: VertexUniverse | None = None) -> str:
        def show(s: Simplex) -> str:
            body = " ".join(universe.labels(s)) if universe is not None else " ".join(map(str, s))
            return "{" + body + "}"

        if self.kind == "closure":
            missing, member = self.witness
            return f"closure: face {show(missing)} of {show(member)} is missing"
        if self.kind == "vertex":
            vertex, member = self.witness
            return f"vertex: {show(vertex)} appears in {show(member)} but is not a 0-simplex"
        a, b, meet = self.witness
        return f"intersection: {show(a)} and {show(b)} meet in {show(meet)}, which is not a member"


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)
    truncated: bool = False

    @property
    def ok(self) -> bool:
        return not self.violations

    def of_kind(self, kind: str) -> list[Violation]:
        return [v for v in self.violations if v.kind == kind]

    def __bool__(self) -> bool:
        return bool(self.violations)


def _missing_faces(members: set[Simplex]) -> list[tuple[Simplex, Simplex]]:
    """(missing face, a member containing it) for every non-empty proper subset not in ``members``.

    Walks the face lattice one codimension at a time, visiting each subset once.
    """
    seen: set[Simplex] = set(members)
    queue = deque((s, s) for s in members)
    missing: list[tuple[Simplex, Simplex]] = []
    while queue:
        s, origin = queue.popleft()
        if len(s) == 1:
            continue
        for c in combinations(s, len(s) - 1):
            face = Simplex._trusted(c)
            if face in seen:
                continue
            seen.add(face)
            missing.append((face, origin))
            queue.append((face, origin))
    missing.sort()
    return missing


def _intersection_failures(ordered: list[Simplex], members: set[Simplex], limit: int | None):
    n_vertices = max(s[-1] for s in ordered) + 1
    if n_vertices <= 63:
        masks = np.array([sum(1 << v for v in s) for s in ordered], dtype=np.int64)
        present = np.sort(masks)
        found = []
        chunk = max(1, 4_000_000 // len(masks))
        for start in range(0, len(masks), chunk):
            block = masks[start : start + chunk, None] & masks[None, :]
            pos = np.searchsorted(present, block).clip(max=len(present) - 1)
            bad = (block != 0) & (present[pos] != block)
            rows, cols = np.nonzero(bad)
            for r, c in zip(rows.tolist(), cols.tolist()):
                i = start + r
                if i < c:
                    found.append((i, c))
            if limit is not None and len(found) >= limit:
                break
        found.sort()
        for i, j in found:
            meet = Simplex._trusted(tuple(sorted(set(ordered[i]) & set(ordered[j]))))
            yield ordered[i], ordered[j], meet
        return
    for i, a in enumerate(ordered):
        sa = set(a)
        for b in ordered[i + 1 :]:
            common = sa.intersection(b)
            if common:
                meet = Simplex._trusted(tuple(sorted(common)))
                if meet not in members:
                    yield a, b, meet


def validate(
    family: SimplicialComplex | Iterable[Iterable[int]],
    *,
    limit: int | None = None,
) -> ValidationReport:
    """Check closure, vertex presence and the intersection property of ``family``.

    ``family`` may be a complex or any iterable of vertex-index collections.
    Violations are listed closure first, then vertex, then intersection, each
    group in lexicographic witness order. ``limit`` caps the number reported
    per group and sets ``truncated`` when it bites.
    """
    if isinstance(family, SimplicialComplex):
        members = {s for stratum in family._strata for s in stratum}
    else:
        members = {s if isinstance(s, Simplex) else Simplex(s) for s in family}
    report = ValidationReport()
    if not members:
        return report

    def take(items, kind):
        for n, witness in enumerate(items):
            if limit is not None and n >= limit:
                report.truncated = True
                return
            report.violations.append(Violation(kind, witness))

    take(_missing_faces(members), "closure")

    vertex_missing: dict[int, Simplex] = {}
    for s in sorted(members):
        for v in s:
            if (v,) not in members and v not in vertex_missing:
                vertex_missing[v] = s
    take(((Simplex._trusted((v,)), s) for v, s in sorted(vertex_missing.items())), "vertex")

    ordered = sorted(members)
    take(_intersection_failures(ordered, members, None if limit is None else limit + 1), "intersection")
    return report


def to_text(cx: SimplicialComplex) -> str:
    """Canonical text form: a header line, then one simplex per line in lexicographic order."""
    lines = [f"dim={cx.dimension} vertices={cx.stratum_size(0)}"]
    ids = cx.universe.ids
    lines.extend(" ".join(ids[i] for i in s) for s in cx.members())
    return "\n".join(lines) + "\n"


def from_text(text: str, simplex_cap: int = DEFAULT_SIMPLEX_CAP) -> SimplicialComplex:
    """Parse the canonical text form.

    Vertices are registered in the order their 0-simplex lines appear, which
    reproduces the original indices for anything written by :func:`to_text`.
    The family must already be closed; a missing face is a parse error.
    """
    raw = text.splitlines()
    if not raw:
        raise ParseError("empty document", line=1)
    m = _HEADER.match(raw[0].strip())
    if m is None:
        raise ParseError(f"bad header {raw[0]!r}, expected 'dim=<d> vertices=<n>'", line=1)
    declared_dim, declared_vertices = int(m.group(1)), int(m.group(2))

    rows: list[tuple[int, list[str]]] = []
    universe = VertexUniverse()
    for lineno, line in enumerate(raw[1:], start=2):
        tokens = line.split()
        if not tokens:
            continue
        rows.append((lineno, tokens))
        if len(tokens) == 1:
            try:
                universe.register(tokens[0])
            except DuplicateVertexError:
                raise ParseError(f"duplicate simplex {{{tokens[0]}}}", line=lineno) from None

    members: set[Simplex] = set()
    where: dict[Simplex, int] = {}
    for lineno, tokens in rows:
        if len(set(tokens)) != len(tokens):
            raise ParseError("repeated vertex within a simplex", line=lineno)
        if len(tokens) > simplex_cap:
            raise SizeGuardError(
                f"simplex of cardinality {len(tokens)} exceeds the cap of {simplex_cap}", line=lineno
            )
        try:
            s = canonicalize(universe, tokens)
        except UnknownVertexError as exc:
            raise ParseError(f"{exc} (no 0-simplex line declares it)", line=lineno) from None
        if s in members:
            raise ParseError("duplicate simplex", line=lineno)
        members.add(s)
        where[s] = lineno

    missing = _missing_faces(members)
    if missing:
        face, origin = missing[0]
        raise ParseError(
            f"not closed: face {{{' '.join(universe.labels(face))}}} is missing",
            line=where[origin],
        )

    cx = SimplicialComplex(universe, simplex_cap)
    top = max((len(s) for s in members), default=0)
    cx._strata = [set() for _ in range(top)]
    for s in members:
        cx._strata[len(s) - 1].add(s)
    if cx.dimension != declared_dim or cx.stratum_size(0) != declared_vertices:
        raise ParseError(
            f"header declares dim={declared_dim} vertices={declared_vertices}, "
            f"body has dim={cx.dimension} vertices={cx.stratum_size(0)}",
            line=1,
        )
    return cx


def require_same_universe(a: VertexUniverse, b: VertexUniverse) -> None:
    if a != b:
        raise UniverseMismatchError(f"vertex universes differ: {a.ids} vs {b.ids}")
