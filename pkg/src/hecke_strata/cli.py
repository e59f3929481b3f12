"""Command-line front end.

Every subcommand writes one JSON document. Exit status is 0 on success,
1 when a check fails and 2 for bad flags or parameters. Errors raised by
the library are reported as ``{"error": {"type": ..., "message": ...}}``.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Sequence

from .center import StratumPoint, central_keys, enumerate_strata
from .errors import HeckeStrataError
from .finite_torus import TorusOrbit, deep_bound, is_generic, is_n_deep, rep_system
from .galois import parametrize_stratum
from .gl2_oracle import gl2_crosscheck
from .selfcheck import run_all
from .units import UnitValue
from .weyl_lattice import Composition, HeckeParams, all_compositions

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE = 0, 1, 2


def stratum_to_json(pt: StratumPoint) -> dict:
    return {
        "composition": list(pt.composition.parts),
        "orbit": list(pt.torus_orbit.rep),
        "units": [z.to_json() for z in pt.z],
    }


def stratum_from_json(data: dict, q: int) -> StratumPoint:
    composition = Composition(tuple(int(m) for m in data["composition"]))
    orbit = TorusOrbit.of(composition, [int(a) for a in data["orbit"]], q)
    return StratumPoint(orbit, tuple(UnitValue.from_json(q, u) for u in data["units"]))


def parse_units(specs: Sequence[str], q: int) -> tuple[UnitValue, ...]:
    """Read ``order:power`` items, each the root of unity ``zeta_order^power``."""
    out = []
    for spec in specs:
        for item in spec.split(","):
            order, _, power = item.partition(":")
            if not power:
                raise argparse.ArgumentTypeError(f"unit {item!r} is not of the form order:power")
            out.append(UnitValue.root_of_unity(q, int(order), int(power)))
    return tuple(out)


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _params(args: argparse.Namespace) -> HeckeParams:
    return HeckeParams(args.n, args.p, args.f)


def _params_json(params: HeckeParams) -> dict:
    return {"n": params.n, "p": params.p, "f": params.f, "q": params.q}


def cmd_strata(args: argparse.Namespace) -> tuple[dict, int]:
    params = _params(args)
    q = params.q
    entries = []
    for composition, count in enumerate_strata(params):
        generic = sum(is_generic(mu, composition, q) for mu in rep_system(composition, q))
        entries.append(
            {"composition": list(composition.parts), "components": count, "generic": generic}
        )
    return {"params": _params_json(params), "strata": entries}, EXIT_OK


def cmd_center_basis(args: argparse.Namespace) -> tuple[dict, int]:
    params = _params(args)
    keys = central_keys(params.n, params.q, args.max_weight)
    return {
        "params": _params_json(params),
        "max_weight": args.max_weight,
        "count": len(keys),
        "basis": [{"torus": list(t), "weight": list(x)} for t, x in keys],
    }, EXIT_OK


def cmd_parametrize(args: argparse.Namespace) -> tuple[dict, int]:
    params = _params(args)
    q = params.q
    composition = Composition(tuple(args.levi))
    orbit = TorusOrbit.of(composition, args.orbit, q)
    pt = StratumPoint(orbit, parse_units(args.unit, q))
    rep = parametrize_stratum(pt, q)
    return {"params": _params_json(params), "stratum": stratum_to_json(pt), **rep.to_json()}, EXIT_OK


def cmd_genericity_stats(args: argparse.Namespace) -> tuple[dict, int]:
    params = _params(args)
    q = params.q
    entries = []
    for composition in all_compositions(params.n):
        reps = rep_system(composition, q)
        generic = sum(is_generic(mu, composition, q) for mu in reps)
        deep = sum(is_n_deep(mu, composition, q) for mu in reps)
        num, den = deep_bound(composition, q)
        proportion = Fraction(generic, len(reps))
        entries.append(
            {
                "composition": list(composition.parts),
                "orbits": len(reps),
                "generic": generic,
                "n_deep": deep,
                "proportion": float(proportion),
                "deep_bound": {"numerator": num, "denominator": den, "value": num / den},
                "meets_bound": proportion >= Fraction(num, den),
            }
        )
    return {"params": _params_json(params), "levis": entries}, EXIT_OK


def cmd_gl2_crosscheck(args: argparse.Namespace) -> tuple[dict, int]:
    params = _params(args)
    report = gl2_crosscheck(params, samples=args.samples, seed=args.seed)
    return report.to_json(), EXIT_OK if report.ok else EXIT_CHECK_FAILED


def cmd_selfcheck(args: argparse.Namespace) -> tuple[dict, int]:
    params = _params(args)
    results = run_all(params, args.seed)
    failed = {name: fails for name, fails in results.items() if fails}
    summary = "all suites passed" if not failed else f"{len(failed)} suites failed"
    return {
        "params": _params_json(params),
        "seed": args.seed,
        "suites": {name: {"ok": not fails, "failures": fails} for name, fails in results.items()},
        "summary": summary,
    }, EXIT_OK if not failed else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, required=True, help="rank")
    common.add_argument("--p", type=int, required=True, help="residue characteristic")
    common.add_argument("--f", type=int, default=1, help="residue degree, q = p^f")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--output", "-o", help="write JSON here instead of stdout")

    parser = argparse.ArgumentParser(
        prog="hecke-strata",
        description="Satake strata of the mod p Hecke center for GL_n and their Galois parameters.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("strata", parents=[common], help="components and generic counts per Levi")
    p.set_defaults(handler=cmd_strata)

    p = sub.add_parser("center-basis", parents=[common], help="orbit-sum basis of the center")
    p.add_argument("--max-weight", type=int, required=True, help="bound on |x|_inf")
    p.set_defaults(handler=cmd_center_basis)

    p = sub.add_parser("parametrize", parents=[common], help="Galois parameter of a stratum point")
    p.add_argument("--levi", type=_int_list, required=True, help="block sizes, e.g. 2,1")
    p.add_argument("--orbit", type=_int_list, required=True, help="torus exponents mod q-1")
    p.add_argument(
        "--unit",
        action="append",
        required=True,
        help="block determinant as order:power (zeta_order^power); repeat or comma-separate",
    )
    p.set_defaults(handler=cmd_parametrize)

    p = sub.add_parser("genericity-stats", parents=[common], help="generic proportion per Levi")
    p.set_defaults(handler=cmd_genericity_stats)

    p = sub.add_parser("gl2-crosscheck", parents=[common], help="GL_2 closed forms against the general map")
    p.add_argument("--samples", type=int, default=10, help="unit samples per orbit")
    p.set_defaults(handler=cmd_gl2_crosscheck)

    p = sub.add_parser("selfcheck", parents=[common], help="run every consistency suite")
    p.set_defaults(handler=cmd_selfcheck)
    return parser


def _emit(payload: dict, output: str | None) -> None:
    text = json.dumps(payload, indent=2)
    if output:
        with open(output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, status = args.handler(args)
    except (HeckeStrataError, argparse.ArgumentTypeError, ValueError) as exc:
        payload: Any = {"error": {"type": type(exc).__name__, "message": str(exc)}}
        status = EXIT_USAGE
    _emit(payload, args.output)
    return status


if __name__ == "__main__":
    sys.exit(main())
