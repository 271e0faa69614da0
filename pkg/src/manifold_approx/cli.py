"""Command-line front end.

``approx run <scenario>`` reproduces an experiment and writes CSV plus a JSON
manifest; ``approx bound`` and ``approx triangle`` evaluate the closed-form
certificates.  Exit codes: 0 success, 2 configuration error, 3 numerical or
chart failure.
"""

from __future__ import annotations

import argparse
import sys

from . import bounds
from .errors import ManifoldError, UnsupportedRetraction
from .experiments import KrylovBreakdown, ScenarioConfig, SCENARIOS, emit_csv, run_manifest, run_scenario

CONFIG_ERROR = 2
NUMERICAL_ERROR = 3


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="approx",
        description="Approximate maps into Riemannian manifolds and certify the error.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run an experiment scenario and emit CSV")
    run.add_argument("scenario", choices=SCENARIOS)
    run.add_argument("--n", type=int, help="ambient size (scenario dependent)")
    run.add_argument("--k", type=int, help="subspace dimension (grassmann/retractions)")
    run.add_argument("--nmin", type=int, help="smallest interpolation degree")
    run.add_argument("--nmax", type=int, help="largest interpolation degree")
    run.add_argument("--rank", type=int, nargs="+", metavar="INT",
                     help="Tucker ranks, one per tensor mode (component mode last)")
    run.add_argument("--seed", type=int, default=0)
    run.add_argument("--variant", choices=["explog", "qr", "polar"], default="explog")
    run.add_argument("--precond", choices=["none", "jacobi"], default="jacobi")
    run.add_argument("--validation", type=int, default=1000,
                     help="number of validation draws per degree")
    run.add_argument("--out", default=None, help="CSV output path (default <scenario>.csv)")

    bound = sub.add_parser("bound", help="evaluate the forward-error certificate")
    bound.add_argument("--eps", type=float, required=True, help="tangent-space error")
    bound.add_argument("--sigma", type=float, required=True, help="chart radius")
    bound.add_argument("--H", type=float, required=True, dest="curvature",
                       help="sectional-curvature lower bound")
    bound.add_argument("--zeta", type=float, default=None,
                       help="retraction-vs-exponential gap")
    bound.add_argument("--eta", type=float, default=None,
                       help="inverse-retraction-vs-logarithm gap")
    bound.add_argument("--lambda", type=float, default=None, dest="scheme_norm",
                       help="max norm of the linear scheme")
    bound.add_argument("--simplified", action="store_true",
                       help="use the looser logarithmic form")

    triangle = sub.add_parser("triangle", help="solve the model-space law of cosines")
    triangle.add_argument("--A", type=float, required=True, dest="side_a")
    triangle.add_argument("--B", type=float, required=True, dest="side_b")
    triangle.add_argument("--c", type=float, required=True, dest="angle",
                          help="angle between the two given sides (radians)")
    triangle.add_argument("--H", type=float, required=True, dest="curvature")
    return parser


def _cmd_run(args):
    config = ScenarioConfig(
        scenario=args.scenario,
        n=args.n,
        k=args.k,
        nmin=args.nmin,
        nmax=args.nmax,
        ranks=tuple(args.rank) if args.rank else None,
        seed=args.seed,
        variant=args.variant,
        preconditioner=args.precond,
        validation_count=args.validation,
    )
    record = run_scenario(config)
    out = args.out or f"{args.scenario}.csv"
    emit_csv(record, out)
    manifest_path = f"{out}.manifest.json"
    with open(manifest_path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(run_manifest(record) + "\n")
    written = [out, manifest_path]
    grid = record.children.get("grid")
    if grid is not None:
        grid_path = f"{out.removesuffix('.csv')}_grid.csv"
        emit_csv(grid, grid_path)
        written.append(grid_path)
    for path in written:
        print(path)
    return 0


def _cmd_bound(args):
    retraction_terms = [args.zeta, args.eta, args.scheme_norm]
    if any(term is not None for term in retraction_terms):
        value = bounds.retraction_error_bound(
            args.eps, args.sigma, args.curvature,
            retraction_error=args.zeta or 0.0,
            pullback_error=args.eta or 0.0,
            scheme_norm=args.scheme_norm if args.scheme_norm is not None else 1.0,
        )
    else:
        form = "simplified" if args.simplified else "exact"
        value = bounds.forward_error_bound(args.eps, args.sigma, args.curvature, form=form)
    print(format(value, ".17g"))
    return 0


def _cmd_triangle(args):
    value = bounds.model_triangle_side(args.side_a, args.side_b, args.angle, args.curvature)
    print(format(value, ".17g"))
    return 0


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    commands = {"run": _cmd_run, "bound": _cmd_bound, "triangle": _cmd_triangle}
    try:
        return commands[args.command](args)
    except (ValueError, UnsupportedRetraction) as exc:
        print(f"approx: configuration error: {exc}", file=sys.stderr)
        return CONFIG_ERROR
    except (ManifoldError, KrylovBreakdown, FloatingPointError) as exc:
        print(f"approx: numerical failure: {exc}", file=sys.stderr)
        return NUMERICAL_ERROR
    except OSError as exc:
        print(f"approx: {exc}", file=sys.stderr)
        return NUMERICAL_ERROR


if __name__ == "__main__":
    sys.exit(main())
