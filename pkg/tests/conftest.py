"""Shared graph fixtures: small coloured DAGs used across the suite."""

import numpy as np
import pytest

from rdag.graphs import ColouredDag, Edge


def make_graph(vertices, edges):
    return ColouredDag(
        vertices=tuple(vertices),
        edges=tuple(Edge(s, t, c) for s, t, c in edges),
    )


def running_example():
    """Two same-coloured leaves with a common parent and equal edges."""
    return make_graph(
        [(1, "blue"), (2, "blue"), (3, "black")],
        [(3, 1, "red"), (3, 2, "red")],
    )


def two_blue_edge():
    """Two same-coloured vertices joined by an edge."""
    return make_graph([(1, "blue"), (2, "blue")], [(2, 1, "red")])


def gap_graph(k=5):
    """Two shared sinks fed by k parents, one edge colour per parent.

    Existence threshold 1, uniqueness threshold k.
    """
    vertices = [(1, "blue"), (2, "blue")] + [(j, "black") for j in range(3, k + 3)]
    edges = []
    for j in range(3, k + 3):
        edges += [(j, 1, f"t{j}"), (j, 2, f"t{j}")]
    return make_graph(vertices, edges)


def seven_vertex_left():
    """Mostly one-sided parent blocks; thresholds (2, 4)."""
    vertices = [(1, "blue"), (2, "blue")] + [(j, "black") for j in range(3, 8)]
    edges = [
        (3, 1, "red"),
        (4, 1, "orange"),
        (4, 2, "brown"),
        (5, 1, "green"),
        (6, 1, "purple"),
        (7, 1, "brown"),
    ]
    return make_graph(vertices, edges)


def seven_vertex_right():
    """Interleaved parent blocks with summed entries; thresholds (3, 3)."""
    vertices = [(1, "blue"), (2, "blue")] + [(j, "black") for j in range(3, 8)]
    edges = [
        (3, 1, "red"),
        (3, 2, "orange"),
        (4, 1, "brown"),
        (4, 2, "green"),
        (5, 1, "green"),
        (5, 2, "orange"),
        (6, 1, "purple"),
        (6, 2, "orange"),
        (7, 1, "brown"),
    ]
    return make_graph(vertices, edges)


def dog_graph():
    """Two traits of two offspring depending on two parent traits;
    thresholds (1, 2)."""
    vertices = [
        (1, "black"),
        (2, "blue"),
        (3, "black"),
        (4, "blue"),
        (5, "purple"),
        (6, "grey"),
    ]
    edges = [
        (5, 1, "red"),
        (5, 3, "red"),
        (5, 2, "browndot"),
        (5, 4, "browndot"),
        (6, 2, "green"),
        (6, 4, "green"),
        (6, 1, "orange"),
        (6, 3, "orange"),
    ]
    return make_graph(vertices, edges)


def ten_vertex_two_component():
    """Two non-isomorphic components sharing all colour classes; the
    directed and undirected coloured models coincide."""
    vertices = [(i, "black") for i in range(1, 7)] + [
        (7, "blue"),
        (8, "blue"),
        (9, "purple"),
        (10, "purple"),
    ]
    edges = [
        (7, 1, "orange"),
        (7, 2, "red"),
        (7, 3, "green"),
        (9, 1, "red"),
        (9, 2, "green"),
        (9, 3, "orange"),
        (9, 7, "brown"),
        (8, 4, "red"),
        (8, 5, "orange"),
        (8, 6, "green"),
        (10, 4, "orange"),
        (10, 5, "green"),
        (10, 6, "red"),
        (10, 8, "brown"),
    ]
    return make_graph(vertices, edges)


def chain_no_shortcut():
    """3 -> 2 -> 1 without the shortcut 3 -> 1."""
    return make_graph(
        [(1, "a"), (2, "b"), (3, "c")],
        [(3, 2, "e1"), (2, 1, "e2")],
    )


def complete_dag(m, coloured=False):
    """Transitive complete DAG on m vertices, j -> i for j > i."""
    vertices = [(i, "v" if coloured else f"v{i}") for i in range(1, m + 1)]
    edges = [
        (j, i, f"e{i}_{j}")
        for i in range(1, m + 1)
        for j in range(i + 1, m + 1)
    ]
    return make_graph(vertices, edges)


def heights_sample():
    """Mean-centred single sample for the running example."""
    return np.array([[-4.08], [-2.27], [-8.51]])


@pytest.fixture
def running():
    return running_example()


@pytest.fixture
def heights():
    return heights_sample()
