"""Orbit-stability classification of sample matrices.

A sample matrix is classified through the same linear-independence
conditions that govern maximum likelihood estimation: it is unstable
exactly when the likelihood is unbounded, stable exactly when the MLE is
unique, and polystable-but-not-stable in between.  Semistable and
polystable coincide here, so only three classes occur.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .augmented import DEFAULT_TOL
from .errors import NotPolystable
from .estimator import ColourEvidence, MleVerdict, classify, mle_set
from .graphs import ColouredDag


class StabilityVerdict(str, Enum):
    UNSTABLE = "Unstable"
    POLYSTABLE_NOT_STABLE = "PolystableNotStable"
    STABLE = "Stable"


@dataclass(frozen=True)
class StabilityClass:
    verdict: StabilityVerdict
    per_colour: dict[str, ColourEvidence]
    # total dimension of the unipotent stabiliser; None when unstable
    stabiliser_dimension: int | None


def classify_stability(g: ColouredDag, Y, tol: float = DEFAULT_TOL) -> StabilityClass:
    cls = classify(g, Y, tol)
    if cls.verdict is MleVerdict.UNBOUNDED:
        return StabilityClass(StabilityVerdict.UNSTABLE, cls.per_colour, None)
    bases = mle_set(g, Y, tol).kernel_bases
    dim = sum(b.shape[0] for b in bases.values())
    verdict = (
        StabilityVerdict.STABLE if dim == 0 else StabilityVerdict.POLYSTABLE_NOT_STABLE
    )
    return StabilityClass(verdict, cls.per_colour, dim)


def stabiliser_basis(g: ColouredDag, Y, tol: float = DEFAULT_TOL) -> dict[str, np.ndarray]:
    """Basis of the unipotent stabiliser directions, per vertex colour.

    Each basis vector, indexed by the parent-relationship colours of its
    vertex colour in sorted order, combines the lower rows of that
    colour's augmented matrix to zero.  Only defined for polystable
    samples.
    """
    cls = classify(g, Y, tol)
    if cls.verdict is MleVerdict.UNBOUNDED:
        raise NotPolystable("sample matrix is unstable; the stabiliser is not unipotent")
    return mle_set(g, Y, tol).kernel_bases
