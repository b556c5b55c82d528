"""Command-line interface.

Exit codes: 0 on success, 2 on invalid arguments, 3 on numerical failure.
Non-finite table errors are reported as ``Inf`` and do not change the exit code.
"""

from __future__ import annotations

import argparse
import math
import sys
import warnings

from .conformal_maps import AngularShift, RadialShift
from .disk_tensor import lebesgue_estimate, make_grid
from .errors import (
    DomainError,
    EmptyGridError,
    InvalidArgumentError,
    NotStarlikeError,
    InvalidBoundaryError,
    SamplingError,
)
from .experiments import (
    BUILTIN_NAMES,
    FUNCTIONS,
    SHIFT_ALPHA,
    SHIFT_ETA,
    builtin_domain,
    convergence_table,
    front_shifts,
    get_function,
    table_csv,
    table_json,
)
from .starlike import build_domain_interpolant, domain_from_file, eval_domain

EXIT_OK, EXIT_USAGE, EXIT_NUMERIC = 0, 2, 3

# cluster center of the lebesgue subcommand when no front is known
DEFAULT_BETA, DEFAULT_PHI = 0.75, math.pi / 3


class UsageError(Exception):
    pass


def _pair(text, sep=","):
    parts = text.split(sep)
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected two values separated by {sep!r}: {text!r}")
    return parts


def _point(text):
    try:
        return tuple(float(p) for p in _pair(text))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a point: {text!r}") from None


def _sizes(text):
    out = []
    for item in text.split(","):
        try:
            n1, n2 = (int(p) for p in _pair(item.strip().lower(), "x"))
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad size {item!r}, expected N1xN2") from None
        out.append((n1, n2))
    return out


def _rect(text):
    try:
        vals = tuple(float(p) for p in text.split(","))
    except ValueError:
        vals = ()
    if len(vals) != 4:
        raise argparse.ArgumentTypeError("rectangle must be XMIN,XMAX,YMIN,YMAX")
    return vals


def _add_shift_flags(p):
    g = p.add_argument_group("conformal shifts")
    g.add_argument("--shift", action="store_true",
                   help="enable shifts with default parameters")
    g.add_argument("--shift-alpha", type=float, help=f"radial density (default {SHIFT_ALPHA})")
    g.add_argument("--shift-beta", type=float, help="radial cluster center on [0, 2]")
    g.add_argument("--shift-eta", type=float, help=f"angular density (default {SHIFT_ETA})")
    g.add_argument("--shift-phi", type=float, help="angular cluster center (radians)")


def _add_domain_flags(p):
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--domain", choices=BUILTIN_NAMES)
    src.add_argument("--boundary-file", metavar="PATH",
                     help="two-column 'theta rho' samples of the boundary radius")
    p.add_argument("--function", required=True, choices=list(FUNCTIONS))


def build_parser():
    parser = argparse.ArgumentParser(
        prog="starbary",
        description="Rational barycentric interpolation on starlike domains.")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("domains", help="list built-in domains and their evaluation rectangles")

    p = sub.add_parser("interp", help="evaluate the interpolant at one point")
    _add_domain_flags(p)
    p.add_argument("--n1", type=int, required=True)
    p.add_argument("--n2", type=int, required=True)
    p.add_argument("--eval", type=_point, required=True, metavar="X,Y")
    _add_shift_flags(p)

    p = sub.add_parser("table", help="convergence table")
    _add_domain_flags(p)
    p.add_argument("--sizes", type=_sizes, required=True, metavar="N1xN2,...")
    p.add_argument("--rect", type=_rect, help="evaluation rectangle XMIN,XMAX,YMIN,YMAX "
                   "(write --rect=-1,3,-2,2 when it starts with a minus sign)")
    p.add_argument("--grid", type=int, default=170, help="lattice points per axis")
    p.add_argument("--out", metavar="FILE")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--timings", action="store_true",
                   help="fill the elapsed_s column (output no longer reproducible)")
    _add_shift_flags(p)

    p = sub.add_parser("lebesgue", help="Lebesgue constant estimate on the disk")
    p.add_argument("--n1", type=int, required=True)
    p.add_argument("--n2", type=int, required=True)
    p.add_argument("--m1", type=int)
    p.add_argument("--m2", type=int)
    p.add_argument("--full-scan", action="store_true",
                   help="scan the 2-D lattice instead of multiplying 1-D maxima")
    _add_shift_flags(p)
    return parser


def _shift_requested(args):
    return args.shift or any(getattr(args, k) is not None for k in
                             ("shift_alpha", "shift_beta", "shift_eta", "shift_phi"))


def _resolve_shifts(args, domain=None, front=None):
    if not _shift_requested(args):
        return None, None
    alpha = SHIFT_ALPHA if args.shift_alpha is None else args.shift_alpha
    eta = SHIFT_ETA if args.shift_eta is None else args.shift_eta
    beta, phi = args.shift_beta, args.shift_phi
    if beta is None or phi is None:
        if domain is not None and front is not None:
            rs, ash = front_shifts(domain, front, alpha, eta, phi_bar=phi)
            beta = rs.beta if beta is None else beta
            phi = ash.phi_bar if phi is None else phi
        elif domain is None:
            beta = DEFAULT_BETA if beta is None else beta
            phi = DEFAULT_PHI if phi is None else phi
        else:
            raise UsageError("this function has no front; give --shift-beta and --shift-phi")
    return RadialShift(alpha=alpha, beta=beta), AngularShift(phi_bar=phi, eta=eta)


def _load_domain(args):
    if args.boundary_file:
        dom = domain_from_file(args.boundary_file)
        margin = 0.05 * dom.rho_max
        r = dom.rho_max + margin
        return dom, "file", (-r, r, -r, r)
    bd = builtin_domain(args.domain)
    return bd.domain, bd.name, bd.rect


def cmd_domains(args, out):
    for name in BUILTIN_NAMES:
        x0, x1, y0, y1 = builtin_domain(name).rect
        out.write(f"{name:16s} [{x0:g}, {x1:g}] x [{y0:g}, {y1:g}]\n")
    return EXIT_OK


def cmd_interp(args, out):
    domain, _, _ = _load_domain(args)
    fn = get_function(args.function)
    rs, ash = _resolve_shifts(args, domain, fn.front)
    di = build_domain_interpolant(domain, args.n1, args.n2, fn, rs, ash)
    x, y = args.eval
    value = eval_domain(di, x, y)
    out.write(f"{value!r}\n")
    return EXIT_OK if math.isfinite(value) else EXIT_NUMERIC


def cmd_table(args, out):
    domain, name, rect = _load_domain(args)
    fn = get_function(args.function)
    rs, ash = _resolve_shifts(args, domain, fn.front)
    reports = convergence_table(domain, fn, args.sizes, rs, ash, domain_name=name,
                                function_name=fn.name, rect=args.rect or rect, m=args.grid)
    text = (table_csv if args.format == "csv" else table_json)(reports, timings=args.timings)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


def cmd_lebesgue(args, out):
    rs, ash = _resolve_shifts(args)
    grid = make_grid(args.n1, args.n2, rs, ash)
    value = lebesgue_estimate(grid, args.m1, args.m2, full_scan=args.full_scan)
    out.write(f"{value!r}\n")
    return EXIT_OK if math.isfinite(value) and value > 0 else EXIT_NUMERIC


COMMANDS = {"domains": cmd_domains, "interp": cmd_interp, "table": cmd_table,
            "lebesgue": cmd_lebesgue}


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("default")
            return COMMANDS[args.command](args, out)
    except (UsageError, InvalidArgumentError, DomainError, NotStarlikeError,
            InvalidBoundaryError, EmptyGridError, OSError, ValueError) as exc:
        print(f"starbary: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SamplingError, ArithmeticError, FloatingPointError) as exc:
        print(f"starbary: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
