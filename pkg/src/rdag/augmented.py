"""Augmented sample matrices and rank services.

For a vertex colour ``s`` with ``alpha`` vertices and ``beta``
parent-relationship colours, the augmented sample matrix has shape
``(beta + 1) x (alpha * n)``.  Its top row concatenates the data rows of
the colour-``s`` vertices (ascending id); the row for parent-relationship
colour ``t`` holds, in the block of vertex ``k``, the sum of the data
rows of the parents of ``k`` joined by an edge of colour ``t``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, UnknownColour
from .graphs import ColouredDag, require_compatible

# Mersenne prime used for exact randomized rank evaluation.
FIELD_PRIME = 2**61 - 1

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class AugmentedMatrix:
    colour: str
    matrix: np.ndarray  # (beta + 1, alpha * n)
    row_labels: tuple[str, ...]  # colour s, then prc(s) in sorted order
    block_vertices: tuple[int, ...]  # colour-s vertices, ascending id
    n_samples: int

    @property
    def beta(self) -> int:
        return len(self.row_labels) - 1

    @property
    def alpha(self) -> int:
        return len(self.block_vertices)


def as_sample_matrix(g: ColouredDag, Y) -> np.ndarray:
    """Validate a sample matrix against the graph; returns an (m, n) array."""
    Y = np.atleast_2d(np.asarray(Y, dtype=float))
    if Y.shape[0] != g.num_vertices:
        raise DimensionMismatch(
            f"sample matrix has {Y.shape[0]} rows, graph has {g.num_vertices} vertices"
        )
    if Y.shape[1] < 1:
        raise DimensionMismatch("sample matrix needs at least one column")
    if not np.all(np.isfinite(Y)):
        raise DimensionMismatch("sample matrix contains non-finite entries")
    return Y


def build_augmented(g: ColouredDag, Y, s: str) -> AugmentedMatrix:
    """Build the augmented sample matrix for vertex colour ``s``."""
    require_compatible(g)
    if s not in g.vertex_colours:
        raise UnknownColour(s)
    Y = as_sample_matrix(g, Y)
    n = Y.shape[1]
    vertices = g.colour_class(s)
    prc = g.prc(s)
    alpha, beta = len(vertices), len(prc)

    M = np.zeros((beta + 1, alpha * n))
    for b, v in enumerate(vertices):
        M[0, b * n:(b + 1) * n] = Y[g.row_index(v)]
        for r, t in enumerate(prc, start=1):
            for p in g.parents(v):
                if g.edge_colour[(p, v)] == t:
                    M[r, b * n:(b + 1) * n] += Y[g.row_index(p)]
    return AugmentedMatrix(
        colour=s,
        matrix=M,
        row_labels=(s,) + prc,
        block_vertices=vertices,
        n_samples=n,
    )


def numeric_rank(M, tol: float = DEFAULT_TOL) -> int:
    """Rank as the number of singular values above a relative threshold."""
    M = np.atleast_2d(np.asarray(M, dtype=float))
    if M.size == 0:
        return 0
    sv = np.linalg.svd(M, compute_uv=False)
    if sv.size == 0 or sv[0] == 0.0:
        return 0
    return int(np.sum(sv > tol * max(M.shape) * sv[0]))


@dataclass(frozen=True)
class SpanResult:
    in_span: bool
    residual_norm_sq: float
    coefficients: np.ndarray  # length beta, minimal-norm


def row_in_span(M: AugmentedMatrix, tol: float = DEFAULT_TOL) -> SpanResult:
    """Least-squares projection of the top row onto the span of the rest.

    ``in_span`` is decided relative to the top row's norm; a zero top row
    lies in every span.  Coefficients are the minimal-norm solution, so
    the result is well defined even when the lower rows are dependent.
    """
    top = M.matrix[0]
    rest = M.matrix[1:]
    top_sq = float(top @ top)
    if rest.shape[0] == 0:
        return SpanResult(top_sq == 0.0, top_sq, np.zeros(0))
    coeffs, *_ = np.linalg.lstsq(rest.T, top, rcond=None)
    resid = top - coeffs @ rest
    resid_sq = float(resid @ resid)
    in_span = top_sq == 0.0 or resid_sq <= tol**2 * top_sq
    return SpanResult(in_span, resid_sq, coeffs)


def _symbolic_rows(g: ColouredDag, s: str, include_top_row: bool):
    """Row layout of the augmented matrix as sums of (vertex, sample) cells.

    Each entry of the matrix is a sum of Y-indeterminates; we return, per
    row, per column, the list of vertex ids whose sample value is summed.
    """
    vertices = g.colour_class(s)
    prc = g.prc(s)
    rows = []
    if include_top_row:
        rows.append([[v] for v in vertices])
    for t in prc:
        rows.append(
            [
                [p for p in g.parents(v) if g.edge_colour[(p, v)] == t]
                for v in vertices
            ]
        )
    return rows


def _field_rank(rows: list[list[int]], p: int = FIELD_PRIME) -> int:
    """Gaussian elimination rank over the prime field."""
    mat = [r[:] for r in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if mat else 0
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if mat[r][col] % p), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = pow(mat[rank][col], p - 2, p)
        mat[rank] = [(x * inv) % p for x in mat[rank]]
        for r in range(nrows):
            if r != rank and mat[r][col]:
                f = mat[r][col]
                mat[r] = [(a - f * b) % p for a, b in zip(mat[r], mat[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


def generic_rank(
    g: ColouredDag,
    s: str,
    n: int,
    include_top_row: bool = True,
    seed: int = 0,
    trials: int = 3,
) -> int:
    """Generic rank of the (symbolic) augmented matrix for colour ``s``
    with ``n`` samples, optionally without its top row.

    The symbolic matrix is evaluated at uniformly random elements of the
    prime field of size 2**61 - 1 and the exact rank over the field is
    maximised over ``trials`` independent evaluations.  By the
    Schwartz-Zippel bound the result equals the generic rank except with
    negligible probability.
    """
    require_compatible(g)
    if s not in g.vertex_colours:
        raise UnknownColour(s)
    if n < 1 or trials < 1:
        raise ValueError("n and trials must be >= 1")
    layout = _symbolic_rows(g, s, include_top_row)
    if not layout:
        return 0

    best = 0
    max_rank = len(layout)
    for trial in range(trials):
        rng = random.Random(f"{seed}:{trial}")
        values = {
            (v, j): rng.randrange(FIELD_PRIME) for v in g.ids for j in range(n)
        }
        rows = [
            [
                sum(values[(v, j)] for v in cell) % FIELD_PRIME
                for cell in row
                for j in range(n)
            ]
            for row in layout
        ]
        best = max(best, _field_rank(rows))
        if best == max_rank:
            break
    return best
