"""Command-line front end.

Usage:
    sectorcover density --model s2 --radius 1.4142135 --angle 60 --degrees
    sectorcover optimize --model s1 --alpha-max 0.7853982
    sectorcover alpha1
    sectorcover cover --model s1 --radius 1.1547005 --angle 60 --degrees --length 4.62 --out cover.json
    sectorcover verify --cover cover.json --grid 2000 1000 --samples 100000 --seed 42
    sectorcover compare --a s3 --b s2 [--format csv]
    sectorcover render --cover cover.json --out cover.svg --ppu 200

Exit codes: 0 success, 2 bad arguments, 3 invalid or infeasible parameters,
4 verification failure (gaps found by ``verify`` or by the construction
gate of ``cover``).
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import compare, models, optimize, placement, render, verify
from .errors import ConstructionError, InfeasibleParametersError, InvalidParametersError, SectorCoverError
from .geometry import StripWindow

EXIT_OK, EXIT_ARGS, EXIT_PARAMS, EXIT_VERIFY = 0, 2, 3, 4


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def _angle(args) -> float:
    return math.radians(args.angle) if args.degrees else args.angle


def _load_cover(path: str) -> placement.Cover:
    with open(path) as fh:
        return placement.Cover.from_json(fh.read())


def cmd_density(args) -> int:
    _emit(models.density(args.model, args.radius, _angle(args)).to_dict())
    return EXIT_OK


def cmd_optimize(args) -> int:
    alpha_max = None if args.alpha_max is None else (math.radians(args.alpha_max) if args.degrees else args.alpha_max)
    model = models.CoverageModel.parse(args.model)
    if model is models.CoverageModel.S1 and alpha_max is not None and alpha_max < math.pi / 3:
        # capped S1 angle: tight-radius endpoint formula, plus the free-radius optimum for reference
        tight = optimize.optimize_model(optimize.default_domain(model, alpha_max, optimize.TIGHT), args.tol)
        closed = models.remark_restricted_density(tight.alpha_star)
        out = tight.to_dict()
        out["density_star"] = closed.density
        out["radius_rule"] = optimize.TIGHT
        out["free_radius_optimum"] = optimize.optimize_model(optimize.default_domain(model, alpha_max), args.tol).to_dict()
        _emit(out)
        return EXIT_OK
    res = optimize.optimize_model(optimize.default_domain(model, alpha_max, args.radius_rule), args.tol)
    out = res.to_dict()
    out["radius_rule"] = args.radius_rule
    _emit(out)
    return EXIT_OK


def cmd_alpha1(args) -> int:
    a1, d = optimize.find_alpha1(args.tol)
    _emit({"alpha1": a1, "density": d})
    return EXIT_OK


def cmd_cover(args) -> int:
    window = StripWindow(args.x_min, args.x_min + args.length)
    cov = placement.generate_cover(args.model, args.radius, _angle(args), window)
    with open(args.out, "w") as fh:
        fh.write(cov.to_json())
    _emit({"out": args.out, "period": cov.period, "offset": cov.offset, "placements": len(cov.placements)})
    return EXIT_OK


def cmd_verify(args) -> int:
    cov = _load_cover(args.cover)
    spec = verify.SamplingSpec(args.grid[0], args.grid[1], args.samples, args.seed)
    rep = verify.verify_cover(cov, spec)
    _emit(rep.to_dict())
    return EXIT_OK if rep.coverage_fraction == 1.0 else EXIT_VERIFY


def cmd_compare(args) -> int:
    rep = compare.compare_optima(args.a, args.b)
    if args.format == "csv":
        sys.stdout.write(rep.to_csv())
    else:
        _emit(rep.to_dict())
    return EXIT_OK


def cmd_render(args) -> int:
    cov = _load_cover(args.cover)
    spec = render.RenderSpec(args.out, args.ppu, not args.no_tiles, args.opacity)
    render.write_svg(cov, spec)
    _emit({"out": args.out})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sectorcover", description="Directional strip covers by identical sectors")
    sub = parser.add_subparsers(dest="command", required=True)
    models_ = ["s1", "s2", "s3", "S1", "S2", "S3"]

    p = sub.add_parser("density", help="closed-form density of one model")
    p.add_argument("--model", required=True, choices=models_)
    p.add_argument("--radius", type=float, required=True)
    p.add_argument("--angle", type=float, required=True)
    p.add_argument("--degrees", action="store_true", help="angle given in degrees")
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("optimize", help="minimum density over the model's domain")
    p.add_argument("--model", required=True, choices=models_)
    p.add_argument("--alpha-max", type=float, default=None)
    p.add_argument("--radius-rule", choices=[optimize.FREE, optimize.TIGHT], default=optimize.FREE)
    p.add_argument("--tol", type=float, default=optimize.DEFAULT_TOL)
    p.add_argument("--degrees", action="store_true")
    p.set_defaults(func=cmd_optimize)

    p = sub.add_parser("alpha1", help="stationary point of the tight-radius S1 density")
    p.add_argument("--tol", type=float, default=optimize.DEFAULT_TOL)
    p.set_defaults(func=cmd_alpha1)

    p = sub.add_parser("cover", help="build a verified periodic cover and write it as JSON")
    p.add_argument("--model", required=True, choices=models_)
    p.add_argument("--radius", type=float, required=True)
    p.add_argument("--angle", type=float, required=True)
    p.add_argument("--degrees", action="store_true")
    p.add_argument("--length", type=float, required=True)
    p.add_argument("--x-min", type=float, default=0.0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("verify", help="sample a cover JSON for directional coverage")
    p.add_argument("--cover", required=True)
    p.add_argument("--grid", type=int, nargs=2, metavar=("NX", "NY"), default=[2000, 1000])
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=42)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("compare", help="energy and lifetime comparison of two optimal covers")
    p.add_argument("--a", required=True, choices=models_)
    p.add_argument("--b", required=True, choices=models_)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("render", help="draw a cover JSON as SVG")
    p.add_argument("--cover", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--ppu", type=int, default=200)
    p.add_argument("--opacity", type=float, default=0.25)
    p.add_argument("--no-tiles", action="store_true")
    p.set_defaults(func=cmd_render)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_ARGS
    try:
        return args.func(args)
    except ConstructionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (InvalidParametersError, InfeasibleParametersError, SectorCoverError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ARGS
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ARGS


def main() -> None:
    sys.exit(run())
