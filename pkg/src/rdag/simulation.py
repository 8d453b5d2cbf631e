"""Simulation harness comparing coloured and uncoloured MLE accuracy.

Each replicate draws a random coloured DAG model, samples from it, fits
the model twice (once with the generating colouring, once with every
vertex and edge given its own colour) and records the log10 distance of
each fit to the true parameters in shared per-edge/per-vertex
coordinates.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass

import numpy as np

from .errors import NoMleError
from .estimator import classify, fit
from .graphs import ColouredDag, Edge, finest_compatible_vertex_colouring

CSV_COLUMNS = [
    "replicate",
    "seed",
    "m",
    "p",
    "K",
    "n",
    "num_vertex_colours",
    "rdag_verdict",
    "dag_verdict",
    "rdag_error",
    "dag_error",
]


@dataclass(frozen=True)
class SimConfig:
    m: int = 10
    p: float = 0.5
    edge_colours: int = 5
    n: int = 100
    replicates: int = 50
    seed: int = 0
    omega_low: float = 0.01
    omega_high: float = 1.0

    def __post_init__(self):
        if self.m < 2:
            raise ValueError("need at least two vertices")
        if not 0.0 < self.p < 1.0:
            raise ValueError("edge probability must be in (0, 1)")
        if not 1 <= self.edge_colours <= self.m * (self.m - 1) // 2:
            raise ValueError("edge colour count out of range")
        if self.n < 1 or self.replicates < 1:
            raise ValueError("sample and replicate counts must be positive")
        if not 0 <= self.omega_low < self.omega_high:
            raise ValueError("invalid omega sampling interval")


@dataclass(frozen=True)
class SimRecord:
    replicate: int
    seed: int
    config: SimConfig
    num_vertex_colours: int
    rdag_verdict: str
    dag_verdict: str
    rdag_error: float | None
    dag_error: float | None

    def to_row(self) -> list:
        return [
            self.replicate,
            self.seed,
            self.config.m,
            self.config.p,
            self.config.edge_colours,
            self.config.n,
            self.num_vertex_colours,
            self.rdag_verdict,
            self.dag_verdict,
            "" if self.rdag_error is None else f"{self.rdag_error:.6f}",
            "" if self.dag_error is None else f"{self.dag_error:.6f}",
        ]


def replicate_seed(master_seed: int, replicate: int) -> int:
    """Stable per-replicate seed derived from the master seed."""
    ss = np.random.SeedSequence([master_seed, replicate])
    return int(ss.generate_state(1, dtype=np.uint32)[0])


def sample_edge_weight(rng: np.random.Generator) -> float:
    """Uniform on [-1, -0.25] U [0.25, 1]."""
    w = rng.uniform(0.25, 1.0)
    return float(w if rng.random() < 0.5 else -w)


def generate_random_rdag(
    cfg: SimConfig, seed: int
) -> tuple[ColouredDag, dict[str, float], dict[str, float]]:
    """Random coloured DAG model.

    An Erdos-Renyi undirected graph is directed from higher to lower
    index; edge colours are drawn uniformly; vertex colours are the
    finest colouring compatible with the edge colours.  Returns the graph
    and the true per-colour coefficients and variances.
    """
    rng = np.random.default_rng(seed)
    edges = []
    for i in range(1, cfg.m + 1):
        for j in range(i + 1, cfg.m + 1):
            if rng.random() < cfg.p:
                colour = f"e{rng.integers(cfg.edge_colours)}"
                edges.append(Edge(source=j, target=i, colour=colour))
    g = ColouredDag(
        vertices=tuple((v, "tmp") for v in range(1, cfg.m + 1)),
        edges=tuple(edges),
    )
    g = g.with_vertex_colouring(finest_compatible_vertex_colouring(g))

    lambda_ = {t: sample_edge_weight(rng) for t in g.edge_colours}
    omega = {
        s: float(rng.uniform(cfg.omega_low, cfg.omega_high)) for s in g.vertex_colours
    }
    return g, lambda_, omega


def sample_from_model(
    g: ColouredDag,
    lambda_: dict[str, float],
    omega: dict[str, float],
    n: int,
    seed: int,
) -> np.ndarray:
    """Draw n columns y = (id - L)^{-1} eps with independent normal noise."""
    rng = np.random.default_rng(seed)
    m = g.num_vertices
    L = np.zeros((m, m))
    for (src, tgt), colour in g.edge_colour.items():
        L[g.row_index(tgt), g.row_index(src)] = lambda_[colour]
    std = np.sqrt([omega[g.colour_of[v]] for v in g.ids])
    eps = rng.standard_normal((m, n)) * std[:, None]
    return np.linalg.solve(np.eye(m) - L, eps)


def distinct_colouring(g: ColouredDag) -> ColouredDag:
    """Every vertex and edge its own colour (the uncoloured model)."""
    return ColouredDag(
        vertices=tuple((v, f"u{v}") for v, _ in sorted(g.vertices)),
        edges=tuple(
            Edge(e.source, e.target, f"u{e.source}_{e.target}") for e in g.edges
        ),
    )


def _expanded_parameters(
    g: ColouredDag, lambda_: dict[str, float], omega: dict[str, float]
) -> np.ndarray:
    """Stack per-edge coefficients and per-vertex variances so coloured
    and uncoloured fits live in the same coordinates."""
    lams = [lambda_[g.edge_colour[(e.source, e.target)]] for e in sorted(
        g.edges, key=lambda e: (e.target, e.source)
    )]
    oms = [omega[g.colour_of[v]] for v in g.ids]
    return np.array(lams + oms)


def run_comparison(cfg: SimConfig) -> list[SimRecord]:
    records = []
    for rep in range(cfg.replicates):
        seed = replicate_seed(cfg.seed, rep)
        g, true_lambda, true_omega = generate_random_rdag(cfg, seed)
        Y = sample_from_model(g, true_lambda, true_omega, cfg.n, seed + 1)
        truth = _expanded_parameters(g, true_lambda, true_omega)
        g_plain = distinct_colouring(g)

        results = {}
        for label, graph in (("rdag", g), ("dag", g_plain)):
            verdict = classify(graph, Y).verdict.value
            error = None
            try:
                f = fit(graph, Y)
                est = _expanded_parameters(graph, f.lambda_, f.omega)
                error = float(math.log10(np.linalg.norm(est - truth)))
            except NoMleError:
                pass
            results[label] = (verdict, error)

        records.append(
            SimRecord(
                replicate=rep,
                seed=seed,
                config=cfg,
                num_vertex_colours=len(g.vertex_colours),
                rdag_verdict=results["rdag"][0],
                dag_verdict=results["dag"][0],
                rdag_error=results["rdag"][1],
                dag_error=results["dag"][1],
            )
        )
    return records


def write_csv(records: list[SimRecord], path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_COLUMNS)
        for rec in sorted(records, key=lambda r: r.replicate):
            writer.writerow(rec.to_row())


def median_errors(records: list[SimRecord]) -> tuple[float, float]:
    """Median log10 parameter error for the coloured and uncoloured fits,
    over replicates where each respective fit exists."""
    rdag = [r.rdag_error for r in records if r.rdag_error is not None]
    dag = [r.dag_error for r in records if r.dag_error is not None]
    return float(np.median(rdag)), float(np.median(dag))
