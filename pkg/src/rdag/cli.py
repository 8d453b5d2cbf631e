"""Command-line interface.

Subcommands: check, fit, classify, thresholds, simulate.  Structured
output is JSON with sorted keys; bulk numeric I/O is CSV.  Exit codes:
0 success, 1 validation or input error, 2 no MLE exists.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import estimator, simulation, stability, thresholds
from .errors import NoMleError, RdagError, NonNumericCell, RaggedRows, SampleFormatError
from .graphs import check_compatibility, load_graph
from .structure import find_unshielded_colliders, is_group, rcon_equivalent


def read_samples(path, center: bool = False, mean=None) -> np.ndarray:
    """Load an m x n sample CSV (no header, row i = i-th vertex by id).

    With ``center``, each row is shifted by ``mean`` (a scalar, or a
    per-row vector loaded by the caller); by default the row's own sample
    mean is subtracted.
    """
    rows = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            cells = line.split(",")
            parsed = []
            for col, cell in enumerate(cells, start=1):
                try:
                    parsed.append(float(cell))
                except ValueError:
                    raise NonNumericCell(lineno, col, cell.strip()) from None
            if rows and len(parsed) != len(rows[0]):
                raise RaggedRows(lineno)
            rows.append(parsed)
    if not rows:
        raise SampleFormatError(f"no data rows in {path}")
    Y = np.array(rows)
    if center:
        if mean is None:
            Y = Y - Y.mean(axis=1, keepdims=True)
        else:
            mean = np.asarray(mean, dtype=float)
            Y = Y - np.atleast_1d(mean).reshape(-1, 1)
    return Y


def _load_mean(spec: str, m: int) -> np.ndarray:
    """--mean accepts a scalar or a path to a per-row file."""
    try:
        return np.full(m, float(spec))
    except ValueError:
        values = [float(line) for line in open(spec) if line.strip()]
        if len(values) != m:
            raise SampleFormatError(
                f"mean file has {len(values)} rows, expected {m}"
            ) from None
        return np.array(values)


def _emit(payload: dict, out) -> None:
    text = json.dumps(payload, sort_keys=True, indent=2, default=str)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_check(args) -> int:
    g = load_graph(json.load(open(args.graph)))
    report = check_compatibility(g)
    payload = {
        "compatible": report.is_compatible,
        "violations": [repr(v) for v in report.violations],
    }
    if args.colliders:
        payload["unshielded_colliders"] = find_unshielded_colliders(g)
    if args.rcon:
        d = rcon_equivalent(g)
        payload["rcon_equivalent"] = {
            "equal": d.equal,
            "failed_condition": d.failed_condition,
            "witness": d.witness,
        }
    if args.group:
        d = is_group(g)
        payload["group"] = {"group": d.group, "failed": d.failed, "witness": d.witness}
    _emit(payload, args.out)
    return 0


def cmd_fit(args) -> int:
    g = load_graph(json.load(open(args.graph)))
    mean = _load_mean(args.mean, g.num_vertices) if args.mean else None
    Y = read_samples(args.samples, center=args.center or mean is not None, mean=mean)
    f = estimator.fit(g, Y, tol=args.tol)
    _emit(
        {
            "lambda": {k: round(v, 12) for k, v in f.lambda_.items()},
            "omega": {k: round(v, 12) for k, v in f.omega.items()},
            "unique": f.unique,
            "loglik": round(f.log_likelihood_at_fit, 12),
        },
        args.out,
    )
    return 0


def cmd_classify(args) -> int:
    g = load_graph(json.load(open(args.graph)))
    Y = read_samples(args.samples, center=args.center)
    cls = estimator.classify(g, Y, tol=args.tol)
    stab = stability.classify_stability(g, Y, tol=args.tol)
    _emit(
        {
            "mle": cls.verdict.value,
            "stability": stab.verdict.value,
            "stabiliser_dimension": stab.stabiliser_dimension,
            "per_colour": {
                s: {"in_span": ev.in_span, "full_row_rank": ev.full_row_rank}
                for s, ev in cls.per_colour.items()
            },
        },
        args.out,
    )
    return 0


def cmd_thresholds(args) -> int:
    print(f"seed: {args.seed}")
    g = load_graph(json.load(open(args.graph)))
    if args.bounds_only:
        report = thresholds.threshold_bounds(g, seed=args.seed, trials=args.trials)
    else:
        report = thresholds.compute_thresholds(g, seed=args.seed, trials=args.trials)
    _emit(report.to_dict(), args.out)
    return 0


def cmd_simulate(args) -> int:
    print(f"seed: {args.seed}")
    cfg = simulation.SimConfig(
        m=args.vertices,
        p=args.edge_prob,
        edge_colours=args.edge_colours,
        n=args.samples,
        replicates=args.replicates,
        seed=args.seed,
    )
    records = simulation.run_comparison(cfg)
    simulation.write_csv(records, args.out)
    med_rdag, med_dag = simulation.median_errors(records)
    print(f"median log10 error: coloured {med_rdag:.3f}, uncoloured {med_dag:.3f}")
    if args.plot:
        from .plotting import plot_error_comparison

        plot_error_comparison(
            records,
            args.plot,
            title=f"m={cfg.m} p={cfg.p} K={cfg.edge_colours} n={cfg.n}",
        )
        print(f"figure written to {args.plot}")
    print(f"records written to {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rdag",
        description="Coloured Gaussian DAG models: validation, MLE, thresholds, simulation",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, samples=False):
        p.add_argument("graph", help="graph document (JSON)")
        if samples:
            p.add_argument("samples", help="sample matrix (CSV, no header)")
            p.add_argument("--tol", type=float, default=1e-9)
            p.add_argument("--center", action="store_true", help="subtract row means")
        p.add_argument("--out", help="write output to this file instead of stdout")

    p = sub.add_parser("check", help="validate and run structural criteria")
    add_common(p)
    p.add_argument("--rcon", action="store_true")
    p.add_argument("--group", action="store_true")
    p.add_argument("--colliders", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("fit", help="compute the MLE")
    add_common(p, samples=True)
    p.add_argument("--mean", help="scalar or per-row file to centre against")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("classify", help="MLE verdict and stability class")
    add_common(p, samples=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("thresholds", help="maximum likelihood thresholds")
    add_common(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--bounds-only", action="store_true")
    p.set_defaults(func=cmd_thresholds)

    p = sub.add_parser("simulate", help="coloured vs uncoloured MLE comparison")
    p.add_argument("--vertices", type=int, default=10)
    p.add_argument("--edge-prob", type=float, default=0.5)
    p.add_argument("--edge-colours", type=int, default=5)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--replicates", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True, help="CSV output path")
    p.add_argument("--plot", help="also render a figure to this path")
    p.set_defaults(func=cmd_simulate)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NoMleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (RdagError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
