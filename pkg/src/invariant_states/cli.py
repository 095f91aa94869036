"""Command-line front end: build, twirl, check, reduce, verify.

Descriptors and verdicts travel as canonical JSON, dense matrices as
QOPB blobs.  Exit codes: 0 on success, 1 when a checked criterion is
violated under --strict or a verification run fails, 2 on usage or
input-format errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import formats
from .bits import parse_bits
from .operators import Rng, frobenius_distance
from .selfcheck import run_checks
from .simplex import (
    StateDescriptor,
    check_biseparable,
    check_polytope,
    check_ppt,
    check_ppt_all,
    exact_twirl,
    mc_twirl,
    reduce_mixed_pair,
    reduce_pair,
    synthesize,
)


def _write_text(path: str | None, text: str):
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _read_descriptor(path: str) -> StateDescriptor:
    return formats.parse_descriptor(Path(path).read_text())


def _cmd_build(args) -> int:
    sigma = parse_bits(args.sigma)
    if len(sigma) != args.K:
        raise ValueError(f"--sigma has {len(sigma)} bits but --K is {args.K}")
    if args.fid is not None:
        fid = np.array([float(x) for x in args.fid.split(",")])
    else:
        vertex = parse_bits(args.vertex)
        if len(vertex) != args.K:
            raise ValueError(f"--vertex has {len(vertex)} bits but --K is {args.K}")
        fid = np.zeros(2**args.K)
        fid[int("".join(map(str, vertex)), 2)] = 1.0
    desc = StateDescriptor(args.d, sigma, fid)
    _write_text(args.out, formats.dumps_descriptor(desc))
    if args.dense:
        if args.out is None:
            raise ValueError("--dense requires --out to derive the matrix path")
        Path(args.out).with_suffix(".qopb").write_bytes(formats.qopb_encode(synthesize(desc)))
    return 0


def _cmd_twirl(args) -> int:
    rho = formats.qopb_decode(Path(args.inp).read_bytes())
    sigma = parse_bits(args.sigma)
    desc = exact_twirl(rho, sigma)
    if args.mc is None:
        _write_text(args.out, formats.dumps_descriptor(desc))
        return 0
    if args.out is None:
        raise ValueError("--mc requires --out for the averaged matrix")
    estimate = mc_twirl(rho, sigma, args.mc, Rng(args.seed))
    Path(args.out).write_bytes(formats.qopb_encode(estimate))
    distance = frobenius_distance(estimate, synthesize(desc))
    report = {"samples": args.mc, "seed": args.seed, "frobenius_distance": distance}
    sys.stdout.write(formats.canonical_json(report) + "\n")
    return 0


def _cmd_check(args) -> int:
    desc = _read_descriptor(args.inp)
    name = args.criterion
    if name == "polytope":
        verdict = check_polytope(desc)
    elif name == "ppt-all":
        verdict = check_ppt_all(desc)
    elif name == "bisep":
        verdict = check_biseparable(desc)
    elif name.startswith("ppt:"):
        verdict = check_ppt(desc, parse_bits(name[4:]))
    else:
        raise ValueError(
            f"unknown criterion {name!r}; use ppt:<bits>, ppt-all, polytope or bisep"
        )
    sys.stdout.write(formats.dumps_verdict(verdict))
    if args.strict and not verdict.satisfied:
        return 1
    return 0


def _cmd_reduce(args) -> int:
    desc = _read_descriptor(args.inp)
    if args.pair is not None:
        reduced = reduce_pair(desc, args.pair)
    else:
        parts = args.mixed.split(",")
        if len(parts) != 2:
            raise ValueError(f"--mixed expects 'i,j', got {args.mixed!r}")
        reduced = reduce_mixed_pair(desc, int(parts[0]), int(parts[1]))
    _write_text(args.out, formats.dumps_descriptor(reduced))
    return 0


def _cmd_verify(args) -> int:
    results = run_checks(level=args.level, seed=args.seed)
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        line = f"{status} {r.name}"
        if r.detail:
            line += f": {r.detail}"
        sys.stdout.write(line + "\n")
    passed = sum(r.passed for r in results)
    sys.stdout.write(f"{passed}/{len(results)} checks passed\n")
    return 0 if passed == len(results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="invstates",
        description="Locally invariant multi-pair qudit states: construction, "
        "twirling, separability criteria, reductions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="write a state descriptor (and optionally its dense matrix)")
    p.add_argument("--d", type=int, required=True, help="local dimension")
    p.add_argument("--K", type=int, required=True, help="number of pairs")
    p.add_argument("--sigma", required=True, help="per-pair family bits, e.g. 01")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--fid", help="comma-separated fidelities of length 2^K")
    g.add_argument("--vertex", help="bit label of a simplex vertex, e.g. 11")
    p.add_argument("--out", help="descriptor path (default: stdout)")
    p.add_argument("--dense", action="store_true", help="also write <out>.qopb with the matrix")
    p.set_defaults(handler=_cmd_build)

    p = sub.add_parser("twirl", help="project a dense state onto an invariant family")
    p.add_argument("--in", dest="inp", required=True, help="input matrix (QOPB)")
    p.add_argument("--sigma", required=True, help="family bits")
    p.add_argument("--mc", type=int, help="Monte-Carlo sample count (default: exact)")
    p.add_argument("--seed", type=int, default=0, help="Monte-Carlo seed")
    p.add_argument("--out", help="output path (descriptor JSON, or QOPB with --mc)")
    p.set_defaults(handler=_cmd_twirl)

    p = sub.add_parser("check", help="evaluate a separability criterion on a descriptor")
    p.add_argument("--in", dest="inp", required=True, help="descriptor path")
    p.add_argument(
        "--criterion", required=True, help="ppt:<bits> | ppt-all | polytope | bisep"
    )
    p.add_argument("--strict", action="store_true", help="exit 1 when violated")
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("reduce", help="trace out a pair (or a mixed pair) of a descriptor")
    p.add_argument("--in", dest="inp", required=True, help="descriptor path")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--pair", type=int, help="matched pair index to trace out")
    g.add_argument("--mixed", help="mixed pair 'i,j': first member of i, second of j")
    p.add_argument("--out", help="output descriptor path (default: stdout)")
    p.set_defaults(handler=_cmd_reduce)

    p = sub.add_parser("verify", help="run the self-verification suite")
    p.add_argument("--level", choices=("quick", "full"), default="quick")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(handler=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_main():
    sys.exit(main())


if __name__ == "__main__":
    console_main()
