"""Maximum likelihood thresholds: bound formulas and randomized search.

The existence threshold of a vertex colour is the smallest sample count
at which the top row of its augmented matrix generically escapes the
span of the other rows; the uniqueness threshold is the smallest sample
count at which the matrix generically has full row rank.  Both are at
most beta + 1, which bounds the randomized search.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .augmented import generic_rank
from .graphs import ColouredDag, require_compatible
from .structure import has_monochrome_edge


@dataclass(frozen=True)
class ColourThresholds:
    colour: str
    alpha: int
    beta: int
    generic_rank_n1: int  # rank of the top-row-less matrix at one sample
    existence_bounds: tuple[int, int] | None
    uniqueness_bounds: tuple[int, int] | None
    existence: int | None = None
    uniqueness: int | None = None


@dataclass(frozen=True)
class ThresholdReport:
    per_colour: dict[str, ColourThresholds]
    bounds_applicable: bool
    seed: int
    trials: int
    mlt_existence: int | None = None
    mlt_uniqueness: int | None = None
    existence_bounds: tuple[int, int] | None = None
    uniqueness_bounds: tuple[int, int] | None = None

    def to_dict(self) -> dict:
        d = {
            "bounds_applicable": self.bounds_applicable,
            "seed": self.seed,
            "trials": self.trials,
            "per_colour": {
                s: {
                    "alpha": ct.alpha,
                    "beta": ct.beta,
                    "generic_rank_n1": ct.generic_rank_n1,
                    "existence_bounds": ct.existence_bounds,
                    "uniqueness_bounds": ct.uniqueness_bounds,
                    "mlt_e": ct.existence,
                    "mlt_u": ct.uniqueness,
                }
                for s, ct in sorted(self.per_colour.items())
            },
        }
        if self.mlt_existence is not None:
            d["mlt_e"] = self.mlt_existence
            d["mlt_u"] = self.mlt_uniqueness
        if self.existence_bounds is not None:
            d["existence_bounds"] = self.existence_bounds
            d["uniqueness_bounds"] = self.uniqueness_bounds
        return d


def _colour_bounds(alpha: int, beta: int, r: int) -> tuple[tuple[int, int], tuple[int, int]]:
    """Per-colour bound intervals for the existence and uniqueness
    thresholds, assuming no edges between same-coloured vertices."""
    if alpha == 1:
        # single-vertex colour class behaves like the uncoloured case
        return (beta + 1, beta + 1), (beta + 1, beta + 1)
    e_lo = max(1, (r - 1) // (alpha - 1) + 1)
    e_hi = beta // alpha + 1
    u_lo = beta // alpha + 1
    if Fraction(r) != Fraction(beta + 1) - Fraction(beta, alpha):
        u_hi = beta + 1 - r
    else:
        u_hi = beta + 2 - r
    u_hi = max(u_hi, u_lo)
    return (e_lo, e_hi), (u_lo, u_hi)


def threshold_bounds(g: ColouredDag, seed: int = 0, trials: int = 3) -> ThresholdReport:
    """Bound intervals for the thresholds, per colour and overall.

    The bound formulas require that no edge joins two vertices of the
    same colour; otherwise the report flags the bounds as inapplicable
    and leaves them empty.
    """
    require_compatible(g)
    mono, _ = has_monochrome_edge(g)
    per_colour = {}
    for s in g.vertex_colours:
        alpha, beta = g.alpha(s), g.beta(s)
        r = generic_rank(g, s, n=1, include_top_row=False, seed=seed, trials=trials)
        if mono:
            eb = ub = None
        else:
            eb, ub = _colour_bounds(alpha, beta, r)
        per_colour[s] = ColourThresholds(s, alpha, beta, r, eb, ub)
    existence_bounds = uniqueness_bounds = None
    if not mono:
        existence_bounds = (
            max(ct.existence_bounds[0] for ct in per_colour.values()),
            max(ct.existence_bounds[1] for ct in per_colour.values()),
        )
        uniqueness_bounds = (
            max(ct.uniqueness_bounds[0] for ct in per_colour.values()),
            max(ct.uniqueness_bounds[1] for ct in per_colour.values()),
        )
    return ThresholdReport(
        per_colour=per_colour,
        bounds_applicable=not mono,
        seed=seed,
        trials=trials,
        existence_bounds=existence_bounds,
        uniqueness_bounds=uniqueness_bounds,
    )


def compute_thresholds(g: ColouredDag, seed: int = 0, trials: int = 3) -> ThresholdReport:
    """Exact thresholds via randomized generic-rank evaluation."""
    base = threshold_bounds(g, seed=seed, trials=trials)
    per_colour = {}
    for s, ct in base.per_colour.items():
        mlt_e = mlt_u = None
        for n in range(1, ct.beta + 2):
            rk_full = generic_rank(g, s, n, include_top_row=True, seed=seed, trials=trials)
            if mlt_e is None:
                rk_low = generic_rank(
                    g, s, n, include_top_row=False, seed=seed, trials=trials
                )
                if rk_full > rk_low:
                    mlt_e = n
            if mlt_u is None and rk_full == ct.beta + 1:
                mlt_u = n
            if mlt_e is not None and mlt_u is not None:
                break
        per_colour[s] = ColourThresholds(
            ct.colour,
            ct.alpha,
            ct.beta,
            ct.generic_rank_n1,
            ct.existence_bounds,
            ct.uniqueness_bounds,
            existence=mlt_e,
            uniqueness=mlt_u,
        )
    return ThresholdReport(
        per_colour=per_colour,
        bounds_applicable=base.bounds_applicable,
        seed=seed,
        trials=trials,
        mlt_existence=max(ct.existence for ct in per_colour.values()),
        mlt_uniqueness=max(ct.uniqueness for ct in per_colour.values()),
        existence_bounds=base.existence_bounds,
        uniqueness_bounds=base.uniqueness_bounds,
    )
