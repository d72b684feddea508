"""Command line interface: ``generate``, ``run``, ``mec`` and ``version``.

Exit codes: 0 success, 2 parse/validation failure, 3 algorithm error,
4 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from ._backend import BACKEND
from .cmec import TooFewPointsError
from .geom import CollinearError
from .mec import EmptyInputError, mec_bruteforce, mec_welzl
from .pipeline import render_svg, run_pipeline, write_report
from .scenario import ParseError, generate_scenario, load_scenario, save_scenario

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_ALGORITHM = 3
EXIT_IO = 4

# radius agreement required between the randomized solver and the oracle
ORACLE_RTOL = 1e-9


def _err(msg: str) -> None:
    print(f"error: {msg}", file=sys.stderr)


def cmd_generate(args) -> int:
    try:
        s = generate_scenario(args.count, args.capacity, args.extent, args.seed,
                              args.altitude)
    except (ValueError, TypeError) as exc:
        _err(str(exc))
        return EXIT_PARSE
    save_scenario(s, args.out)
    return EXIT_OK


def cmd_run(args) -> int:
    s = load_scenario(args.scenario)
    report = run_pipeline(s)
    write_report(report, args.out)
    if args.svg:
        render_svg(s, report, args.svg)
    return EXIT_OK


def _circle_dict(res):
    c = res.circle
    return {"cx": c.center.x, "cy": c.center.y, "r": c.radius,
            "support": list(res.support)}


def cmd_mec(args) -> int:
    s = load_scenario(args.scenario)
    pts = [n.point for n in s.nodes]
    res = mec_welzl(pts, s.seed, s.tolerance)
    out = {"circle": _circle_dict(res)}
    code = EXIT_OK
    if args.oracle:
        ref = mec_bruteforce(pts, s.tolerance)
        agree = abs(res.circle.radius - ref.circle.radius) <= ORACLE_RTOL * max(
            1.0, ref.circle.radius)
        out["oracle"] = _circle_dict(ref)
        out["agree"] = agree
        if not agree:
            code = EXIT_ALGORITHM
    print(json.dumps(out, indent=2))
    return code


def cmd_version(args) -> int:
    print(f"uavcircle {__version__} ({BACKEND} kernels)")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="uavcircle",
        description="Constrained enclosing circles and UAV link evaluation",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write a random scenario file")
    g.add_argument("--count", type=int, required=True, help="number of sensor nodes")
    g.add_argument("--capacity", type=int, required=True, help="max nodes served")
    g.add_argument("--extent", type=float, required=True, help="side of the square area (m)")
    g.add_argument("--seed", type=lambda v: int(v, 0), default=0)
    g.add_argument("--altitude", type=float, default=100.0, help="UAV altitude (m)")
    g.add_argument("--out", required=True)
    g.set_defaults(func=cmd_generate)

    r = sub.add_parser("run", help="evaluate a scenario and write a JSON report")
    r.add_argument("--scenario", required=True)
    r.add_argument("--out", required=True)
    r.add_argument("--svg", help="also render the placement as SVG")
    r.set_defaults(func=cmd_run)

    m = sub.add_parser("mec", help="print the minimum enclosing circle of all nodes")
    m.add_argument("--scenario", required=True)
    m.add_argument("--oracle", action="store_true", help="cross-check by brute force")
    m.set_defaults(func=cmd_mec)

    v = sub.add_parser("version", help="print the version and kernel backend")
    v.set_defaults(func=cmd_version)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        _err(str(exc))
        return EXIT_PARSE
    except (TooFewPointsError, EmptyInputError, CollinearError, RuntimeError) as exc:
        _err(str(exc))
        return EXIT_ALGORITHM
    except OSError as exc:
        _err(str(exc))
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
