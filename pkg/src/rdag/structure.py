"""Structural criteria on coloured DAGs.

The three subgraph families compared here (per-vertex stars, per-edge
wedges, per-edge butterflies) are determined up to coloured-graph
isomorphism by canonical signatures, so isomorphism tests reduce to
sorted-multiset comparisons.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import ColouredDag, require_compatible


@dataclass(frozen=True)
class StarSignature:
    """The subgraph on a vertex and its children, up to isomorphism."""

    centre_colour: str
    branches: tuple[tuple[str, str], ...]  # sorted (edge colour, child colour)


@dataclass(frozen=True)
class WedgeSignature:
    """The doubled-edge graph of an edge j->i over shared children.

    The per-child colour pair is unordered: the two edges into a shared
    child contribute symmetrically.
    """

    centre_colour: str
    branches: tuple[tuple[str, tuple[str, str]], ...]


@dataclass(frozen=True)
class ButterflySignature:
    """The 2-path graph between the endpoints of an edge j->i.

    The per-path pair is ordered: (colour of k->i, colour of j->k).
    """

    target_colour: str
    source_colour: str
    paths: tuple[tuple[str, str], ...]


def star_signature(g: ColouredDag, i: int) -> StarSignature:
    branches = sorted(
        (g.edge_colour[(i, k)], g.colour_of[k]) for k in g.children(i)
    )
    return StarSignature(g.colour_of[i], tuple(branches))


def wedge_signature(g: ColouredDag, source: int, target: int) -> WedgeSignature:
    shared = set(g.children(source)) & set(g.children(target))
    branches = sorted(
        (
            g.colour_of[k],
            tuple(sorted((g.edge_colour[(target, k)], g.edge_colour[(source, k)]))),
        )
        for k in shared
    )
    return WedgeSignature(g.colour_of[target], tuple(branches))


def butterfly_signature(g: ColouredDag, source: int, target: int) -> ButterflySignature:
    # 2-paths source -> k -> target
    mid = [k for k in g.ids if g.has_edge(k, target) and g.has_edge(source, k)]
    paths = sorted((g.edge_colour[(k, target)], g.edge_colour[(source, k)]) for k in mid)
    return ButterflySignature(
        g.colour_of[target], g.colour_of[source], tuple(paths)
    )


def find_unshielded_colliders(g: ColouredDag) -> list[tuple[int, int, int]]:
    """All triples (i, p, j) with i -> p <- j and no edge between i and j."""
    out = []
    for p in g.ids:
        pa = g.parents(p)
        for a in range(len(pa)):
            for b in range(a + 1, len(pa)):
                i, j = pa[a], pa[b]
                if not g.has_edge(i, j) and not g.has_edge(j, i):
                    out.append((i, p, j))
    return out


@dataclass(frozen=True)
class RconDecision:
    equal: bool
    failed_condition: str | None  # "a", "b" or "c"
    witness: tuple | None


def rcon_equivalent(g: ColouredDag) -> RconDecision:
    """Decide equality of the directed coloured model with the undirected
    coloured model on the same graph.

    Equality holds iff (a) there are no unshielded colliders, (b) star
    signatures agree on every same-coloured vertex pair and (c) wedge
    signatures agree on every same-coloured edge pair.  Requires a
    compatible colouring.
    """
    require_compatible(g)

    colliders = find_unshielded_colliders(g)
    if colliders:
        return RconDecision(False, "a", colliders[0])

    for s in g.vertex_colours:
        cls = g.colour_class(s)
        sigs = [star_signature(g, v) for v in cls]
        for k in range(1, len(cls)):
            if sigs[k] != sigs[0]:
                return RconDecision(False, "b", (cls[0], cls[k]))

    by_colour: dict[str, list] = {}
    for e in g.edges:
        by_colour.setdefault(e.colour, []).append(e)
    for colour, edges in sorted(by_colour.items()):
        sigs = [wedge_signature(g, e.source, e.target) for e in edges]
        for k in range(1, len(edges)):
            if sigs[k] != sigs[0]:
                e0, ek = edges[0], edges[k]
                return RconDecision(
                    False, "c", ((e0.source, e0.target), (ek.source, ek.target))
                )
    return RconDecision(True, None, None)


def is_transitive(g: ColouredDag) -> tuple[bool, tuple[int, int] | None]:
    """True iff every 2-path k -> j -> i has the shortcut k -> i.

    On failure, returns the first missing shortcut (k, i).
    """
    for e1 in g.edges:
        for e2 in g.edges:
            if e1.target == e2.source and not g.has_edge(e1.source, e2.target):
                return False, (e1.source, e2.target)
    return True, None


@dataclass(frozen=True)
class GroupDecision:
    group: bool
    failed: str | None  # "transitivity" or "butterfly"
    witness: tuple | None


def is_group(g: ColouredDag) -> GroupDecision:
    """Decide whether the structured upper-triangular matrices of the
    coloured graph are closed under multiplication (and hence a group).

    This holds iff the graph is transitive and butterfly signatures agree
    on every same-coloured edge pair.  Requires a compatible colouring.
    """
    require_compatible(g)

    transitive, witness = is_transitive(g)
    if not transitive:
        return GroupDecision(False, "transitivity", witness)

    by_colour: dict[str, list] = {}
    for e in g.edges:
        by_colour.setdefault(e.colour, []).append(e)
    for colour, edges in sorted(by_colour.items()):
        sigs = [butterfly_signature(g, e.source, e.target) for e in edges]
        for k in range(1, len(edges)):
            if sigs[k] != sigs[0]:
                e0, ek = edges[0], edges[k]
                return GroupDecision(
                    False, "butterfly", ((e0.source, e0.target), (ek.source, ek.target))
                )
    return GroupDecision(True, None, None)


def has_monochrome_edge(g: ColouredDag) -> tuple[bool, tuple[int, int] | None]:
    """True iff some edge joins two vertices of the same colour."""
    for e in g.edges:
        if g.colour_of[e.source] == g.colour_of[e.target]:
            return True, (e.source, e.target)
    return False, None
