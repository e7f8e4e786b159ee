"""Command-line front end.

JSON in, JSON out: every subcommand reads the interchange formats of
``twocat.io`` and prints a single JSON report on standard output.  Exit
codes: 0 on success, 2 on an axiom or hypothesis failure (the report then
carries a structured counterexample), 1 on malformed input.

Every report embeds a run manifest (subcommand, SHA-256 of each input
file, truncation bounds, determinism statement, tool version); identical
inputs and bounds produce byte-identical reports.  Set the environment
variable ``TWOCAT_CACHE_DIR`` to a writable directory to cache nerve
enumerations keyed by input hash and truncation level.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from importlib import metadata

from . import io as tio
from .constructs import laco, oplaco, pullback, strict_fiber
from .core import (AxiomError, co_dual, coop_dual, op_dual,
                   validate_two_category, validate_two_functor)
from .homology import homology, homology_local
from .nerve import nerve
from .opfib import Counterexample, check_opfibration
from .pgm import self_action, validate_action, validate_pgm
from .sinv import group_completion_check, s_inv_point, s_inv_x
from .specseq import build_B, check_bisimplicial, e2_vs_local, pages

CACHE_ENV = "TWOCAT_CACHE_DIR"

try:
    VERSION = metadata.version("artifact")
except metadata.PackageNotFoundError:      # uninstalled source tree
    VERSION = "0.1.0"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# ---------------------------------------------------------------------------
# report plumbing
# ---------------------------------------------------------------------------

def _sha256(path: str) -> str:
    with open(path, "rb") as fh:
        return hashlib.sha256(fh.read()).hexdigest()


def _manifest(subcommand: str, inputs: list, bounds: dict) -> dict:
    return {
        "subcommand": subcommand,
        "inputs": {p: _sha256(p) for p in inputs},
        "bounds": bounds,
        "determinism": "seed-free: the report depends only on the listed "
                       "inputs and bounds",
        "tool_version": VERSION,
    }


def _print(obj: dict, ctx: dict) -> None:
    sys.stdout.write(tio.dumps(obj, ctx["pretty"]))


def _ok(ctx: dict, report: dict) -> int:
    _print({"manifest": ctx["manifest"], "report": report}, ctx)
    return 0


def _plain(v):
    return v if isinstance(v, (str, int, bool)) else repr(v)


def _fail(ctx: dict, clause: str, detail) -> int:
    _print({"manifest": ctx["manifest"],
            "counterexample": {"clause": clause,
                               "detail": [_plain(v) for v in detail]}}, ctx)
    return 2


def _counts(C) -> dict:
    return {"objects": len(C.objects), "one_cells": len(C.one_src),
            "two_cells": len(C.two_src)}


def _load_json(path: str) -> dict:
    with open(path) as fh:
        return json.load(fh)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_validate(args, ctx) -> int:
    ctx["manifest"] = _manifest("validate", [args.input], {})
    d = _load_json(args.input)
    if "pgm" in d:
        A = validate_action(tio.action_from_dict(d))
        kind, C = "action", A.carrier
    elif "carrier" in d and "unit" in d:
        P = validate_pgm(tio.pgm_from_dict(d))
        kind, C = "pgm", P.carrier
    elif "on_objects" in d:
        F = tio.two_functor_from_dict(d)
        validate_two_category(F.source)
        validate_two_category(F.target)
        validate_two_functor(F)
        kind, C = "two-functor", F.source
    else:
        C = validate_two_category(tio.two_category_from_dict(d))
        kind = "two-category"
    return _ok(ctx, {"kind": kind, "valid": True, **_counts(C)})


def _load_cospan(path: str):
    d = _load_json(path)
    base = os.path.dirname(os.path.abspath(path))

    def resolve(p):
        return p if os.path.isabs(p) else os.path.join(base, p)

    left, right = resolve(d["left"]), resolve(d["right"])
    return left, right, tio.load_two_functor(left), tio.load_two_functor(right)


def _cmd_cospan(args, ctx, name, construct) -> int:
    left, right, F, G = _load_cospan(args.cospan)
    ctx["manifest"] = _manifest(name, [args.cospan, left, right], {})
    validate_two_functor(F)
    validate_two_functor(G)
    res = construct(F, G)
    report = {"construction": name,
              "inputs": {"left": _sha256(left), "right": _sha256(right)},
              "category": tio.two_category_to_dict(res.cat),
              **_counts(res.cat)}
    return _ok(ctx, report)


def cmd_laco(args, ctx) -> int:
    return _cmd_cospan(args, ctx, "laco", laco)


def cmd_oplaco(args, ctx) -> int:
    return _cmd_cospan(args, ctx, "oplaco", oplaco)


def cmd_pullback(args, ctx) -> int:
    return _cmd_cospan(args, ctx, "pullback", pullback)


def cmd_fiber(args, ctx) -> int:
    ctx["manifest"] = _manifest("fiber", [args.functor], {})
    P = tio.load_two_functor(args.functor)
    validate_two_functor(P)
    if args.object not in P.target.objects:
        raise UsageError("object %r not in the target" % args.object)
    fib, _incl = strict_fiber(P, args.object)
    validate_two_category(fib)
    return _ok(ctx, {"construction": "fiber", "object": args.object,
                     "category": tio.two_category_to_dict(fib),
                     **_counts(fib)})


def cmd_nerve(args, ctx) -> int:
    bounds = {"max_dim": args.max_dim}
    ctx["manifest"] = _manifest("nerve", [args.input], bounds)
    cache_dir = os.environ.get(CACHE_ENV)
    cache_path = None
    nerve_dict = None
    if cache_dir:
        key = "nerve-%s-%d.json" % (_sha256(args.input), args.max_dim)
        cache_path = os.path.join(cache_dir, key)
        if os.path.exists(cache_path):
            nerve_dict = _load_json(cache_path)
    if nerve_dict is None:
        C = validate_two_category(tio.load_two_category(args.input))
        nerve_dict = tio.trunc_sset_to_dict(nerve(C, args.max_dim))
        if cache_path:
            os.makedirs(cache_dir, exist_ok=True)
            with open(cache_path, "w") as fh:
                fh.write(tio.dumps(nerve_dict))
    degenerate = dict(map(tuple, nerve_dict["degenerate"]))
    report = {
        "max_dim": args.max_dim,
        "levels": [len(lev) for lev in nerve_dict["levels"]],
        "nondegenerate": [sum(1 for x in lev if not degenerate[x])
                          for lev in nerve_dict["levels"]],
    }
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(tio.dumps(nerve_dict))
        report["out"] = args.out
    else:
        report["nerve"] = nerve_dict
    return _ok(ctx, report)


def cmd_homology(args, ctx) -> int:
    inputs = [args.nerve] + ([args.coeffs] if args.coeffs else [])
    ctx["manifest"] = _manifest("homology", inputs, {"deg": args.deg})
    X = tio.trunc_sset_from_dict(_load_json(args.nerve))
    if args.coeffs:
        L = tio.coeff_system_from_dict(_load_json(args.coeffs))
        group = homology_local(X, L, args.deg)
        coeffs = "local"
    else:
        group = homology(X, args.deg)
        coeffs = "integral"
    return _ok(ctx, {"degree": args.deg, "coefficients": coeffs,
                     "group": str(group)})


def cmd_opfib(args, ctx) -> int:
    ctx["manifest"] = _manifest("opfib", [args.functor], {})
    P = tio.load_two_functor(args.functor)
    validate_two_functor(P)
    res = check_opfibration(P)
    if isinstance(res, Counterexample):
        return _fail(ctx, res.clause, res.detail)
    cert = {
        "opcartesian_lifts": [[x, f, v] for (x, f), v
                              in sorted(res.opcart_lift.items())],
        "cartesian_lifts": [[g, al, v[0], v[1]] for (g, al), v
                            in sorted(res.cart_lift.items())],
        "cartesian": [[a, bool(v)] for a, v in sorted(res.cartesian.items())],
    }
    if args.emit_cert:
        with open(args.emit_cert, "w") as fh:
            fh.write(tio.dumps(cert))
    return _ok(ctx, {"certified": True, "certificate": cert})


def cmd_ss(args, ctx) -> int:
    bounds = {"pmax": args.pmax, "qmax": args.qmax}
    if args.fiber_coeffs is not None:
        bounds["fiber_coeffs"] = args.fiber_coeffs
    ctx["manifest"] = _manifest("ss", [args.functor], bounds)
    F = tio.load_two_functor(args.functor)
    validate_two_functor(F)
    B = build_B(F, args.pmax, args.qmax)
    if not check_bisimplicial(B):
        raise AxiomError("bisimplicial identities fail within the bounds")
    pg = pages(B)
    trusted_p, trusted_q = pg.trusted
    report = {
        "trusted": {"pmax": trusted_p, "qmax": trusted_q},
        "E1": [[p, q, str(pg.E1[(p, q)])]
               for p in range(trusted_p + 1) for q in range(trusted_q + 1)],
        "E2": [[p, q, str(pg.E2[(p, q)])]
               for p in range(trusted_p + 1) for q in range(trusted_q + 1)],
    }
    if args.fiber_coeffs is not None:
        q = args.fiber_coeffs
        if q > trusted_q:
            raise UsageError("--fiber-coeffs %d exceeds the trusted row %d"
                             % (q, trusted_q))
        cert = check_opfibration(F)
        if isinstance(cert, Counterexample):
            return _fail(ctx, cert.clause, cert.detail)
        report["e2_vs_local"] = [[p, q, bool(e2_vs_local(F, cert, p, q))]
                                 for p in range(trusted_p + 1)]
    return _ok(ctx, report)


def cmd_sinv(args, ctx) -> int:
    inputs = [args.pgm] + ([args.action] if args.action else [])
    ctx["manifest"] = _manifest("sinv", inputs, {})
    P = tio.load_pgm(args.pgm)
    if args.point:
        if args.action:
            raise UsageError("--point and --action are mutually exclusive")
        S = s_inv_point(P)
        name = "sinv-point"
    else:
        act = (tio.load_action(args.action, P) if args.action
               else self_action(P))
        S = s_inv_x(P, act)
        name = "sinv"
    return _ok(ctx, {"construction": name,
                     "category": tio.two_category_to_dict(S.cat),
                     **_counts(S.cat)})


def cmd_gc_check(args, ctx) -> int:
    inputs = [args.pgm] + ([args.action] if args.action else [])
    bounds = {"max_deg": args.max_deg, "trunc": args.trunc}
    ctx["manifest"] = _manifest("gc-check", inputs, bounds)
    P = tio.load_pgm(args.pgm)
    act = tio.load_action(args.action, P) if args.action else None
    rep = group_completion_check(P, act, max_deg=args.max_deg,
                                 trunc=args.trunc)
    return _ok(ctx, {
        "monoid": {"elements": list(rep.monoid.elements),
                   "unit": rep.monoid.unit},
        "trunc": rep.trunc,
        "degrees": {str(q): d for q, d in sorted(rep.degrees.items())},
        "all_iso": rep.all_iso,
    })


def cmd_dualize(args, ctx) -> int:
    ctx["manifest"] = _manifest("dualize", [args.input],
                                {"which": args.which})
    C = validate_two_category(tio.load_two_category(args.input))
    dual = {"op": op_dual, "co": co_dual, "coop": coop_dual}[args.which](C)
    validate_two_category(dual)
    return _ok(ctx, {"which": args.which,
                     "category": tio.two_category_to_dict(dual),
                     **_counts(dual)})


# ---------------------------------------------------------------------------
# parser and entry points
# ---------------------------------------------------------------------------

def _build_parser() -> _Parser:
    parser = _Parser(prog="twocat", description=__doc__)
    common = _Parser(add_help=False)
    common.add_argument("--pretty", action="store_true",
                        help="indent the JSON report")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("validate", parents=[common],
                       help="validate a 2-category, 2-functor, monoid, "
                            "or action file")
    p.add_argument("input")
    p.set_defaults(func=cmd_validate)

    for name, func in (("laco", cmd_laco), ("oplaco", cmd_oplaco),
                       ("pullback", cmd_pullback)):
        p = sub.add_parser(name, parents=[common],
                           help="build the %s of a cospan file "
                                '{"left": F.json, "right": G.json}' % name)
        p.add_argument("cospan")
        p.set_defaults(func=func)

    p = sub.add_parser("fiber", parents=[common],
                       help="strict fiber of a 2-functor over an object")
    p.add_argument("--functor", required=True)
    p.add_argument("--object", required=True)
    p.set_defaults(func=cmd_fiber)

    p = sub.add_parser("nerve", parents=[common],
                       help="truncated nerve of a 2-category")
    p.add_argument("--input", required=True)
    p.add_argument("--max-dim", type=int, default=4)
    p.add_argument("--out", help="write the full nerve JSON here")
    p.set_defaults(func=cmd_nerve)

    p = sub.add_parser("homology", parents=[common],
                       help="homology of a nerve file in one degree")
    p.add_argument("--nerve", required=True)
    p.add_argument("--deg", type=int, required=True)
    p.add_argument("--coeffs", help="local coefficient system file")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("opfib", parents=[common],
                       help="certify a 2-functor as an opfibration")
    p.add_argument("--functor", required=True)
    p.add_argument("--emit-cert", help="write the certificate JSON here")
    p.set_defaults(func=cmd_opfib)

    p = sub.add_parser("ss", parents=[common],
                       help="spectral sequence pages of an opfibration")
    p.add_argument("--functor", required=True)
    p.add_argument("--pmax", type=int, default=3)
    p.add_argument("--qmax", type=int, default=3)
    p.add_argument("--fiber-coeffs", type=int,
                   help="also compare E2 against local coefficients in "
                        "this fiber degree")
    p.set_defaults(func=cmd_ss)

    p = sub.add_parser("sinv", parents=[common],
                       help="group-completion construction on an action")
    p.add_argument("--pgm", required=True)
    p.add_argument("--action", help="acted-on 2-category (default: the "
                                    "monoid acting on itself)")
    p.add_argument("--point", action="store_true",
                   help="complete the terminal action instead")
    p.set_defaults(func=cmd_sinv)

    p = sub.add_parser("gc-check", parents=[common],
                       help="verify the homology group-completion "
                            "isomorphism per degree")
    p.add_argument("--pgm", required=True)
    p.add_argument("--action")
    p.add_argument("--max-deg", type=int, default=0)
    p.add_argument("--trunc", type=int, default=None)
    p.set_defaults(func=cmd_gc_check)

    p = sub.add_parser("dualize", parents=[common],
                       help="op/co/coop dual of a 2-category")
    p.add_argument("input")
    p.add_argument("--which", choices=("op", "co", "coop"), default="op")
    p.set_defaults(func=cmd_dualize)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    ctx = {"manifest": None, "pretty": False}
    try:
        args = parser.parse_args(argv)
        ctx["pretty"] = args.pretty
        return args.func(args, ctx)
    except UsageError as e:
        _print({"error": "usage: %s" % e}, ctx)
        return 1
    except AxiomError as e:
        return _fail(ctx, "axiom-failure", (str(e),))
    except (OSError, json.JSONDecodeError, KeyError, TypeError,
            ValueError) as e:
        _print({"error": "%s: %s" % (type(e).__name__, e)}, ctx)
        return 1


def console() -> None:
    sys.exit(main())
