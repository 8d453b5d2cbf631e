"""Closed-form maximum likelihood estimation for coloured DAG models.

The negative log-likelihood decomposes into one summand per vertex
colour; each summand is minimised by an orthogonal projection of the top
row of the colour's augmented sample matrix onto the span of its other
rows, followed by a one-dimensional minimisation for the error variance.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .augmented import (
    DEFAULT_TOL,
    AugmentedMatrix,
    as_sample_matrix,
    build_augmented,
    numeric_rank,
    row_in_span,
)
from .errors import NoMleError, NotPositiveDefinite
from .graphs import ColouredDag, require_compatible


class MleVerdict(str, Enum):
    UNBOUNDED = "UnboundedLikelihood"
    EXISTS_NON_UNIQUE = "ExistsNonUnique"
    EXISTS_UNIQUE = "ExistsUnique"


@dataclass(frozen=True)
class ColourEvidence:
    in_span: bool
    full_row_rank: bool


@dataclass(frozen=True)
class MleClassification:
    verdict: MleVerdict
    per_colour: dict[str, ColourEvidence]


@dataclass(frozen=True)
class MleFit:
    lambda_: dict[str, float]  # edge colour -> regression coefficient
    omega: dict[str, float]  # vertex colour -> error variance
    residuals: dict[str, float]  # vertex colour -> squared residual
    unique: bool
    log_likelihood_at_fit: float


@dataclass(frozen=True)
class MleSetDescription:
    base: MleFit
    # vertex colour -> (k, beta_s) array; row v satisfies
    # sum_t v[t] * M^{(t)} = 0 with t running over prc(s) in sorted order
    kernel_bases: dict[str, np.ndarray]


def classify(g: ColouredDag, Y, tol: float = DEFAULT_TOL) -> MleClassification:
    """Trichotomy for MLE existence and uniqueness.

    The likelihood is unbounded iff the top row of some augmented matrix
    lies in the span of its other rows; the MLE is unique iff every
    augmented matrix has full row rank.
    """
    require_compatible(g)
    Y = as_sample_matrix(g, Y)
    per_colour = {}
    for s in g.vertex_colours:
        M = build_augmented(g, Y, s)
        span = row_in_span(M, tol)
        full = numeric_rank(M.matrix, tol) == M.beta + 1
        per_colour[s] = ColourEvidence(span.in_span, full)
    if any(ev.in_span for ev in per_colour.values()):
        verdict = MleVerdict.UNBOUNDED
    elif all(ev.full_row_rank for ev in per_colour.values()):
        verdict = MleVerdict.EXISTS_UNIQUE
    else:
        verdict = MleVerdict.EXISTS_NON_UNIQUE
    return MleClassification(verdict, per_colour)


def _project(M: AugmentedMatrix, tol: float):
    """Per-colour projection step shared by fit and mle_set."""
    span = row_in_span(M, tol)
    if span.in_span:
        raise NoMleError(M.colour)
    return span


def fit(g: ColouredDag, Y, tol: float = DEFAULT_TOL) -> MleFit:
    """Compute an MLE; raises NoMleError when the likelihood is unbounded.

    When the MLE is not unique, the returned regression coefficients are
    the minimal-norm representative of the solution set.
    """
    require_compatible(g)
    Y = as_sample_matrix(g, Y)
    n = Y.shape[1]

    lambda_: dict[str, float] = {}
    omega: dict[str, float] = {}
    residuals: dict[str, float] = {}
    unique = True
    for s in g.vertex_colours:
        M = build_augmented(g, Y, s)
        span = _project(M, tol)
        for t, coeff in zip(M.row_labels[1:], span.coefficients):
            lambda_[t] = float(coeff)
        residuals[s] = span.residual_norm_sq
        omega[s] = span.residual_norm_sq / (M.alpha * n)
        if numeric_rank(M.matrix[1:], tol) < M.beta:
            unique = False

    loglik = log_likelihood(
        concentration_from_parts(g, lambda_, omega), Y
    )
    return MleFit(lambda_, omega, residuals, unique, loglik)


def concentration_from_parts(
    g: ColouredDag, lambda_: dict[str, float], omega: dict[str, float]
) -> np.ndarray:
    """Expand colour-indexed parameters to the full concentration matrix.

    Entry (i, j) of the coefficient matrix is the value of the colour of
    edge j -> i; the concentration matrix is
    (id - L)^T diag(omega)^{-1} (id - L).
    """
    m = g.num_vertices
    L = np.zeros((m, m))
    for (src, tgt), colour in g.edge_colour.items():
        L[g.row_index(tgt), g.row_index(src)] = lambda_[colour]
    omega_diag = np.array([omega[g.colour_of[v]] for v in g.ids])
    if np.any(omega_diag <= 0):
        raise NotPositiveDefinite("error variances must be positive")
    B = np.eye(m) - L
    return B.T @ np.diag(1.0 / omega_diag) @ B


def concentration(g: ColouredDag, mle: MleFit) -> np.ndarray:
    return concentration_from_parts(g, mle.lambda_, mle.omega)


def log_likelihood(Psi: np.ndarray, Y) -> float:
    """log det(Psi) - tr(Psi S) with S the sample covariance of Y."""
    Psi = np.asarray(Psi, dtype=float)
    Y = np.atleast_2d(np.asarray(Y, dtype=float))
    if Psi.shape[0] != Psi.shape[1] or Psi.shape[0] != Y.shape[0]:
        raise NotPositiveDefinite("dimension mismatch between Psi and Y")
    try:
        chol = np.linalg.cholesky(Psi)
    except np.linalg.LinAlgError as exc:
        raise NotPositiveDefinite("concentration matrix is not positive definite") from exc
    logdet = 2.0 * float(np.sum(np.log(np.diag(chol))))
    n = Y.shape[1]
    S = (Y @ Y.T) / n
    return logdet - float(np.sum(Psi * S))


def mle_set(g: ColouredDag, Y, tol: float = DEFAULT_TOL) -> MleSetDescription:
    """Describe the full set of MLEs.

    All MLEs share the error variances; the coefficient vectors for
    colour ``s`` form an affine space: the base fit plus any combination
    of the kernel basis vectors of that colour.
    """
    base = fit(g, Y, tol)
    Y = as_sample_matrix(g, Y)
    kernel_bases = {}
    for s in g.vertex_colours:
        M = build_augmented(g, Y, s)
        rest = M.matrix[1:]
        if rest.shape[0] == 0:
            kernel_bases[s] = np.zeros((0, 0))
            continue
        # left null space of the lower rows: vectors k with k @ rest = 0
        u, sv, _ = np.linalg.svd(rest, full_matrices=True)
        rank = int(np.sum(sv > tol * max(rest.shape) * sv[0])) if sv[0] > 0 else 0
        kernel_bases[s] = u[:, rank:].T.copy()
    return MleSetDescription(base, kernel_bases)
