"""Command line interface.

Subcommands:
  stratify complex INPUT   stratify a simplicial complex with a chosen sheaf
  stratify nerve POINTS COVER   stratify the nerve of a point-cloud cover
  mapper POINTS            pullback cover + nerve + stratification
  delta INPUT              emit only the delta-labeled Hasse diagram

Exit codes: 0 success, 2 input error, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import geometry, serialize
from .linalg import FieldSpec
from .sheaves import (ConstantSheaf, LocalHomologySheaf, MaximalElementSheaf,
                      SheafOracle, covering_delta_map, hasse_dot)
from .spaces import FiniteSpace, MalformedInputError
from .stratify import (InternalInvariantError, coarsest_stratification,
                       minimal_homogeneous_stratification)

SHEAF_KINDS = ("local-homology", "max-elements", "constant", "vanishing-poly")


@dataclass
class RunConfig:
    command: str
    inputs: tuple[str, ...]
    sheaf: str
    field: FieldSpec = FieldSpec(2)
    tolerance: float = geometry.DEFAULT_TOL
    homogeneous: bool = False
    output_format: str = "json"
    output: str | None = None
    threads: int = 1

    def __post_init__(self):
        if self.sheaf not in SHEAF_KINDS:
            raise ValueError(f"unknown sheaf kind {self.sheaf!r}")
        if self.tolerance <= 0:
            raise ValueError("tolerance must be positive")


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except (MalformedInputError, OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InternalInvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="strata")
    sub = parser.add_subparsers(dest="command", required=True)

    strat = sub.add_parser("stratify", help="compute a stratification")
    strat_sub = strat.add_subparsers(dest="target", required=True)

    sc = strat_sub.add_parser("complex", help="stratify a simplicial complex")
    sc.add_argument("input", help="complex.json or plain-text maximal simplices")
    sc.add_argument("--sheaf", default="local-homology",
                    choices=("local-homology", "max-elements", "constant"))
    _common_flags(sc)
    sc.set_defaults(run=_run_complex)

    sn = strat_sub.add_parser("nerve", help="stratify the nerve of a cover")
    sn.add_argument("points", help="CSV point cloud, one point per row")
    sn.add_argument("cover", help="JSON cover {\"sets\": {...}}")
    _nerve_flags(sn)
    _common_flags(sn)
    sn.set_defaults(run=_run_nerve)

    mp = sub.add_parser("mapper", help="interval-pullback cover of a function")
    mp.add_argument("points", help="CSV point cloud, one point per row")
    mp.add_argument("--function-column", type=int, required=True,
                    help="column index holding the filter value")
    mp.add_argument("--intervals", required=True,
                    help="comma-separated lo:hi interval list")
    mp.add_argument("--radius", type=float, required=True,
                    help="neighborhood-graph radius for splitting fibers")
    mp.add_argument("--dims", type=int, default=None,
                    help="number of coordinate columns (default: all)")
    _nerve_flags(mp)
    _common_flags(mp)
    mp.set_defaults(run=_run_mapper)

    de = sub.add_parser("delta", help="emit the delta-labeled Hasse diagram")
    de.add_argument("input", help="complex.json or plain-text maximal simplices")
    de.add_argument("--sheaf", default="local-homology",
                    choices=("local-homology", "max-elements", "constant"))
    de.add_argument("--field", type=int, default=2)
    de.add_argument("--format", dest="output_format", default="dot",
                    choices=("json", "dot"))
    de.add_argument("--output", default=None)
    de.add_argument("--threads", type=int, default=None)
    de.set_defaults(run=_run_delta)

    return parser


def _common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--field", type=int, default=2,
                   help="coefficient field: a prime, or 0 for the rationals")
    p.add_argument("--homogeneous", action="store_true",
                   help="compute the minimal homogeneous stratification")
    p.add_argument("--format", dest="output_format", default="json",
                   choices=("json", "dot"))
    p.add_argument("--output", default=None, help="output path (default stdout)")
    p.add_argument("--threads", type=int, default=None,
                   help="worker threads for per-element computations "
                        "(default: STRATA_THREADS or 1)")


def _nerve_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-degree", type=int, default=None,
                   help="use all monomials of total degree <= d")
    p.add_argument("--monomials", default=None,
                   help="JSON file with explicit exponent vectors")
    p.add_argument("--tol", type=float, default=geometry.DEFAULT_TOL,
                   help="relative singular-value threshold for kernels")
    p.add_argument("--exact", action="store_true",
                   help="exact rational kernels instead of SVD")
    p.add_argument("--max-nerve-dim", type=int, default=None,
                   help="cap the nerve dimension (default: cover size - 1)")


def _threads(args) -> int:
    if args.threads is not None:
        return max(1, args.threads)
    env = os.environ.get("STRATA_THREADS", "")
    return max(1, int(env)) if env.isdigit() else 1


def _sheaf_for(space: FiniteSpace, kind: str, field: FieldSpec,
               threads: int) -> SheafOracle:
    if kind == "local-homology":
        return LocalHomologySheaf(space, field, threads=threads)
    if kind == "max-elements":
        return MaximalElementSheaf(space)
    return ConstantSheaf(space)


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _stratify(space, oracle, config: RunConfig, nerve=None) -> str:
    if config.homogeneous:
        strat = minimal_homogeneous_stratification(space, oracle)
    else:
        strat = coarsest_stratification(space, oracle)
    dm = covering_delta_map(space, oracle)
    if config.output_format == "dot":
        return hasse_dot(space, dm, oracle)
    return serialize.dump_json(serialize.stratification_report(strat, dm, nerve))


def _run_complex(args) -> int:
    config = RunConfig("stratify complex", (args.input,), args.sheaf,
                       field=FieldSpec(args.field), homogeneous=args.homogeneous,
                       output_format=args.output_format, output=args.output,
                       threads=_threads(args))
    space = serialize.load_complex(args.input)
    oracle = _sheaf_for(space, config.sheaf, config.field, config.threads)
    _emit(_stratify(space, oracle, config), config.output)
    return 0


def _monomials_from(args, ambient_dim: int) -> geometry.MonomialSet:
    if (args.max_degree is None) == (args.monomials is None):
        raise MalformedInputError("give exactly one of --max-degree / --monomials")
    if args.max_degree is not None:
        return geometry.monomials_up_to_degree(ambient_dim, args.max_degree)
    return serialize.load_monomials(args.monomials, ambient_dim)


def _run_nerve(args) -> int:
    config = RunConfig("stratify nerve", (args.points, args.cover), "vanishing-poly",
                       tolerance=args.tol, homogeneous=args.homogeneous,
                       output_format=args.output_format, output=args.output,
                       threads=_threads(args))
    cloud, _ = serialize.load_points_csv(args.points)
    cover = serialize.load_cover(args.cover, len(cloud))
    monomials = _monomials_from(args, cloud.ambient_dim)
    max_dim = args.max_nerve_dim if args.max_nerve_dim is not None \
        else max(len(cover.sets) - 1, 0)
    nerve = geometry.build_nerve(cover, max_dim)
    oracle = geometry.vanishing_presheaf(nerve, cloud, monomials,
                                         tol=config.tolerance, exact=args.exact)
    _emit(_stratify(nerve.space, oracle, config, nerve), config.output)
    return 0


def _parse_intervals(text: str) -> list[tuple[float, float]]:
    out = []
    for part in text.split(","):
        lo, _, hi = part.partition(":")
        try:
            out.append((float(lo), float(hi)))
        except ValueError:
            raise MalformedInputError(f"bad interval {part!r}") from None
    return out


def _run_mapper(args) -> int:
    config = RunConfig("mapper", (args.points,), "vanishing-poly",
                       tolerance=args.tol, homogeneous=args.homogeneous,
                       output_format=args.output_format, output=args.output,
                       threads=_threads(args))
    cloud, rows = serialize.load_points_csv(args.points, dims=args.dims)
    col = args.function_column
    if col < 0 or col >= len(rows[0]):
        raise MalformedInputError(f"function column {col} out of range")
    f_values = [r[col] for r in rows]
    intervals = _parse_intervals(args.intervals)
    cover = geometry.mapper_pullback_cover(cloud, f_values, intervals, args.radius)
    monomials = _monomials_from(args, cloud.ambient_dim)
    nerve = geometry.build_nerve(cover, max_dim=max(len(cover.sets) - 1, 0)
                                 if args.max_nerve_dim is None else args.max_nerve_dim)
    oracle = geometry.vanishing_presheaf(nerve, cloud, monomials,
                                         tol=config.tolerance, exact=args.exact)
    if config.homogeneous:
        strat = minimal_homogeneous_stratification(nerve.space, oracle)
    else:
        strat = coarsest_stratification(nerve.space, oracle)
    dm = covering_delta_map(nerve.space, oracle)
    payload = {
        "cover": serialize.cover_report(cover),
        "nerve": serialize.nerve_report(nerve),
        "stratification": serialize.stratification_report(strat, dm, nerve),
    }
    _emit(serialize.dump_json(payload), config.output)
    return 0


def _run_delta(args) -> int:
    space = serialize.load_complex(args.input)
    oracle = _sheaf_for(space, args.sheaf, FieldSpec(args.field), _threads(args))
    dm = covering_delta_map(space, oracle)
    if args.output_format == "dot":
        text = hasse_dot(space, dm, oracle)
    else:
        edges = [[serialize._label_json(space.elements[i]),
                  serialize._label_json(space.elements[j]), bool(v)]
                 for (i, j), v in sorted(dm.labels.items())]
        values = {",".join(map(str, e)): oracle.value_summary(e)
                  for e in space.elements}
        text = serialize.dump_json({"delta_edges": edges, "values": values})
    _emit(text, args.output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
