"""Coloured directed acyclic graphs and their colour statistics.

A coloured DAG carries a colour label on every vertex and every edge.
Colour labels are opaque strings compared by exact equality.  Vertices of
one colour form a colour class; the parent-relationship colours of a
vertex colour ``s`` are the colours of edges pointing at a vertex of
colour ``s``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Mapping

from .errors import (
    CycleDetected,
    DuplicateEdge,
    GraphError,
    SelfLoop,
    UnknownColour,
    UnknownVertexReference,
)


@dataclass(frozen=True)
class Edge:
    source: int
    target: int
    colour: str


@dataclass(frozen=True)
class ColouredDag:
    """Immutable coloured DAG with derived lookup tables.

    Vertices are (id, colour) pairs with distinct positive integer ids.
    Within a colour class, vertices are always ordered by ascending id;
    parent-relationship colours are ordered lexicographically.  Both
    conventions are relied on by the augmented-matrix construction.
    """

    vertices: tuple[tuple[int, str], ...]
    edges: tuple[Edge, ...]

    # derived, filled in by __post_init__
    ids: tuple[int, ...] = field(init=False, repr=False)
    colour_of: Mapping[int, str] = field(init=False, repr=False)
    edge_colour: Mapping[tuple[int, int], str] = field(init=False, repr=False)
    topological_order: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self):
        ids = tuple(sorted(v for v, _ in self.vertices))
        if len(set(ids)) != len(ids):
            raise GraphError("duplicate vertex id")
        if any(v <= 0 for v in ids):
            raise GraphError("vertex ids must be positive integers")
        colour_of = {v: c for v, c in self.vertices}

        seen = set()
        for e in self.edges:
            if e.source == e.target:
                raise SelfLoop(e.source)
            for endpoint in (e.source, e.target):
                if endpoint not in colour_of:
                    raise UnknownVertexReference(endpoint)
            if (e.source, e.target) in seen:
                raise DuplicateEdge(e.source, e.target)
            seen.add((e.source, e.target))

        object.__setattr__(self, "ids", ids)
        object.__setattr__(self, "colour_of", colour_of)
        object.__setattr__(
            self, "edge_colour", {(e.source, e.target): e.colour for e in self.edges}
        )
        object.__setattr__(self, "topological_order", self._toposort())

    # -- structure ---------------------------------------------------------

    def _toposort(self) -> tuple[int, ...]:
        out = {v: [] for v in self.ids}
        indeg = {v: 0 for v in self.ids}
        for e in self.edges:
            out[e.source].append(e.target)
            indeg[e.target] += 1
        ready = sorted(v for v in self.ids if indeg[v] == 0)
        order = []
        while ready:
            v = ready.pop(0)
            order.append(v)
            for w in sorted(out[v]):
                indeg[w] -= 1
                if indeg[w] == 0:
                    ready.append(w)
            ready.sort()
        if len(order) != len(self.ids):
            raise CycleDetected(self._find_cycle(out, set(order)))
        return tuple(order)

    def _find_cycle(self, out, done):
        start = next(v for v in self.ids if v not in done)
        path, seen = [start], {start}
        v = start
        while True:
            v = next(w for w in out[v] if w not in done)
            if v in seen:
                return path[path.index(v):] + [v]
            path.append(v)
            seen.add(v)

    def parents(self, i: int) -> tuple[int, ...]:
        return tuple(sorted(e.source for e in self.edges if e.target == i))

    def children(self, i: int) -> tuple[int, ...]:
        return tuple(sorted(e.target for e in self.edges if e.source == i))

    def has_edge(self, source: int, target: int) -> bool:
        return (source, target) in self.edge_colour

    @property
    def num_vertices(self) -> int:
        return len(self.ids)

    def row_index(self, i: int) -> int:
        """Position of vertex ``i`` in the ascending-id row order."""
        return self.ids.index(i)

    # -- colour statistics --------------------------------------------------

    @property
    def vertex_colours(self) -> tuple[str, ...]:
        return tuple(sorted({c for _, c in self.vertices}))

    @property
    def edge_colours(self) -> tuple[str, ...]:
        return tuple(sorted({e.colour for e in self.edges}))

    def colour_class(self, s: str) -> tuple[int, ...]:
        """Vertices of colour ``s``, ascending id."""
        cls = tuple(v for v in self.ids if self.colour_of[v] == s)
        if not cls:
            raise UnknownColour(s)
        return cls

    def alpha(self, s: str) -> int:
        """Number of vertices of colour ``s``."""
        return len(self.colour_class(s))

    def prc(self, s: str) -> tuple[str, ...]:
        """Parent-relationship colours of ``s``: colours of edges whose
        target has vertex colour ``s``, sorted."""
        self.colour_class(s)
        return tuple(
            sorted({e.colour for e in self.edges if self.colour_of[e.target] == s})
        )

    def beta(self, s: str) -> int:
        return len(self.prc(s))

    # -- (de)serialisation ----------------------------------------------------

    def to_document(self) -> dict:
        return {
            "vertices": [{"id": v, "colour": c} for v, c in sorted(self.vertices)],
            "edges": [
                {"source": e.source, "target": e.target, "colour": e.colour}
                for e in self.edges
            ],
        }

    def with_vertex_colouring(self, colouring: Mapping[int, str]) -> "ColouredDag":
        """Copy of this graph with vertex colours replaced."""
        return ColouredDag(
            vertices=tuple((v, colouring[v]) for v, _ in sorted(self.vertices)),
            edges=self.edges,
        )


@dataclass(frozen=True)
class DisjointnessViolation:
    vertex: int
    edge: tuple[int, int]
    colour: str


@dataclass(frozen=True)
class ChildColourViolation:
    edge1: tuple[int, int]
    edge2: tuple[int, int]
    colour: str


@dataclass(frozen=True)
class CompatibilityReport:
    is_compatible: bool
    violations: tuple


def load_graph(description: dict | str) -> ColouredDag:
    """Build a validated ColouredDag from a graph document.

    ``description`` is either the parsed JSON document or a JSON string;
    see README for the schema.
    """
    if isinstance(description, str):
        description = json.loads(description)
    try:
        vertices = tuple(
            (int(v["id"]), str(v["colour"])) for v in description["vertices"]
        )
        edges = tuple(
            Edge(int(e["source"]), int(e["target"]), str(e["colour"]))
            for e in description["edges"]
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphError(f"malformed graph document: {exc}") from exc
    return ColouredDag(vertices=vertices, edges=edges)


def check_compatibility(g: ColouredDag) -> CompatibilityReport:
    """Check the two compatibility conditions of a colouring.

    The colouring is compatible iff vertex- and edge-colour label sets are
    disjoint, and any two edges of the same colour have targets of the
    same vertex colour.  All violations are enumerated.
    """
    violations = []
    edge_colour_set = set(g.edge_colours)
    for v, c in sorted(g.vertices):
        if c in edge_colour_set:
            for e in g.edges:
                if e.colour == c:
                    violations.append(
                        DisjointnessViolation(v, (e.source, e.target), c)
                    )
    edges = sorted(g.edges, key=lambda e: (e.colour, e.target, e.source))
    for a in range(len(edges)):
        for b in range(a + 1, len(edges)):
            e1, e2 = edges[a], edges[b]
            if e1.colour == e2.colour and (
                g.colour_of[e1.target] != g.colour_of[e2.target]
            ):
                violations.append(
                    ChildColourViolation(
                        (e1.source, e1.target), (e2.source, e2.target), e1.colour
                    )
                )
    return CompatibilityReport(not violations, tuple(violations))


def require_compatible(g: ColouredDag) -> None:
    report = check_compatibility(g)
    if not report.is_compatible:
        from .errors import IncompatibleColouring

        raise IncompatibleColouring(list(report.violations))


def finest_compatible_vertex_colouring(g: ColouredDag) -> dict[int, str]:
    """The vertex colouring with the most colours that is compatible with
    the given edge colouring.

    Targets of equally coloured edges are merged (transitively); every
    other vertex keeps its own class.  Fresh labels are chosen disjoint
    from the edge colours, named after the smallest vertex id in each
    class.
    """
    parent = {v: v for v in g.ids}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    by_colour: dict[str, list[int]] = {}
    for e in g.edges:
        by_colour.setdefault(e.colour, []).append(e.target)
    for targets in by_colour.values():
        for t in targets[1:]:
            union(targets[0], t)

    edge_colour_set = set(g.edge_colours)
    labels = {}
    for v in g.ids:
        root = find(v)
        label = f"v{root}"
        while label in edge_colour_set:
            label = "_" + label
        labels[v] = label
    return labels
