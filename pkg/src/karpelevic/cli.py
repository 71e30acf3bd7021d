"""Command-line interface.

Subcommands: arcs, matrix, trace, region, verify, member, power, resultant.
Exit codes: 0 success, 1 verification failure, 2 bad arguments.
KARP_STEPS overrides the default number of samples per arc.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import re
import sys
import time
from pathlib import Path

from . import region as region_mod
from .arcs import arc_from_endpoints, enumerate_arcs
from .errors import KarpelevicError
from .farey import Fraction
from .matrices import evaluate, realizing_matrix
from .polyroots import find_pi_root, multiple_root_witness, trinomial

_COMPLEX_RE = re.compile(
    r"^\s*([+-]?\d+(?:\.\d+)?(?:[eE][+-]?\d+)?)\s*"
    r"(?:([+-])\s*(\d+(?:\.\d+)?(?:[eE][+-]?\d+)?)\s*i)?\s*$"
)


def parse_complex(text: str) -> complex:
    """Parse 'a', 'a+bi', or 'a-bi' (whitespace tolerated)."""
    m = _COMPLEX_RE.match(text)
    if not m:
        raise KarpelevicError(f"cannot parse complex number {text!r} (expected a+bi)")
    re_part = float(m.group(1))
    im_part = 0.0
    if m.group(2):
        im_part = float(m.group(3))
        if m.group(2) == "-":
            im_part = -im_part
    return complex(re_part, im_part)


def _default_steps() -> int:
    env = os.environ.get("KARP_STEPS")
    if env is None:
        return region_mod.DEFAULT_STEPS
    steps = int(env)
    if steps < 8:
        raise KarpelevicError(f"KARP_STEPS must be >= 8, got {steps}")
    return steps


def _parse_arc(n: int, text: str):
    parts = text.split(":")
    if len(parts) != 2:
        raise KarpelevicError(f"cannot parse arc {text!r} (expected p/q:r/s)")
    return arc_from_endpoints(n, Fraction.parse(parts[0]), Fraction.parse(parts[1]))


def _arc_row(desc) -> dict:
    return {
        "arc": desc.label,
        "type": str(desc.arc_type),
        "order": desc.order,
        "floor_nq": desc.floor_nq,
        "conjugate": desc.conjugate,
    }


def _emit_rows(rows: list[dict], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(rows, indent=2))
    else:
        writer = csv.DictWriter(sys.stdout, fieldnames=list(rows[0]))
        writer.writeheader()
        writer.writerows(rows)


def cmd_arcs(args) -> int:
    rows = [_arc_row(d) for d in enumerate_arcs(args.n)]
    _emit_rows(rows, args.format)
    return 0


def cmd_matrix(args) -> int:
    desc = _parse_arc(args.n, args.arc)
    mat = realizing_matrix(desc)
    if args.alpha is None:
        payload = mat.to_json_dict()
        if args.format == "json":
            print(json.dumps(payload, indent=2))
        else:
            _emit_rows(payload["entries"], "csv")
        return 0
    dense = evaluate(mat, args.alpha)
    if args.format == "json":
        print(
            json.dumps(
                {"order": mat.order, "alpha": args.alpha, "rows": dense.tolist()},
                indent=2,
            )
        )
    else:
        writer = csv.writer(sys.stdout)
        writer.writerows(dense.tolist())
    return 0


def cmd_trace(args) -> int:
    desc = _parse_arc(args.n, args.arc)
    tr = region_mod.trace_arc(desc, args.steps)
    out = Path(args.out) if args.out else Path(region_mod.arc_filename(desc))
    region_mod.write_trace_dat(tr, out)
    print(f"{out}: {len(tr.samples)} samples, {len(tr.refinement_events)} refinements")
    return 0


def cmd_region(args) -> int:
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    manifest: dict = {"n": args.n, "steps": args.steps, "arcs": []}
    if args.timestamp:
        manifest["generated_at"] = time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime())
    for desc in enumerate_arcs(args.n):
        tr = region_mod.trace_arc(desc, args.steps)
        fname = region_mod.arc_filename(desc)
        region_mod.write_trace_dat(tr, outdir / fname)
        manifest["arcs"].append(
            {**_arc_row(desc), "file": fname, "samples": len(tr.samples)}
        )
    manifest["arc_count"] = len(manifest["arcs"])
    with open(outdir / "manifest.json", "w", encoding="ascii") as fh:
        json.dump(manifest, fh, indent=2)
        fh.write("\n")
    print(f"{outdir}: {manifest['arc_count']} arcs written")
    return 0


def cmd_verify(args) -> int:
    reports = region_mod.identity_suite(args.n)
    print(json.dumps(reports, indent=2))
    return 0 if all(r["pass"] for r in reports) else 1


def cmd_member(args) -> int:
    z = parse_complex(args.z)
    model = region_mod.boundary(args.n, args.steps)
    print(region_mod.membership(z, args.n, model, args.tol))
    return 0


def cmd_power(args) -> int:
    report = region_mod.power_arc_check(args.n, args.m, args.d)
    print(json.dumps(report, indent=2))
    return 0 if report["pass"] else 1


def cmd_resultant(args) -> int:
    n = args.n
    if n % 2 == 0:
        print(
            json.dumps(
                {"n": n, "message": "even n: the trinomial roots are always distinct"}
            )
        )
        return 0
    alpha = find_pi_root(n)
    witness = multiple_root_witness(n, alpha)
    if witness is None:
        print(json.dumps({"n": n, "alpha_star": alpha, "witness": None}))
        return 1
    lam, mult = witness
    f = trinomial(n, alpha)
    print(
        json.dumps(
            {
                "n": n,
                "alpha_star": alpha,
                "double_root": lam,
                "multiplicity": mult,
                "abs_f": abs(f(lam)),
                "abs_df": abs(f.derivative()(lam)),
            },
            indent=2,
        )
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="karp",
        description="Boundary arcs and eigenvalue regions of stochastic matrices",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_n(p, minimum=2):
        p.add_argument("--n", type=int, required=True, help="region order")
        p.set_defaults(_min_n=minimum)

    p = sub.add_parser("arcs", help="list all boundary arcs of order n")
    add_n(p)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_arcs)

    p = sub.add_parser("matrix", help="dump the realizing matrix of one arc")
    add_n(p)
    p.add_argument("--arc", required=True, help="arc endpoints as p/q:r/s")
    p.add_argument("--alpha", type=float, default=None, help="evaluate at this alpha")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("trace", help="trace one arc to a two-column data file")
    add_n(p)
    p.add_argument("--arc", required=True, help="arc endpoints as p/q:r/s")
    p.add_argument("--steps", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("region", help="trace every arc of order n into a directory")
    add_n(p)
    p.add_argument("--steps", type=int, default=None)
    p.add_argument("--out", required=True)
    p.add_argument(
        "--timestamp", action="store_true", help="stamp the manifest (non-reproducible)"
    )
    p.set_defaults(func=cmd_region)

    p = sub.add_parser("verify", help="run the realizing-matrix identity suite")
    add_n(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("member", help="membership query for a complex point")
    add_n(p)
    p.add_argument("--z", required=True, help="complex point, e.g. 0.5+0.25i")
    p.add_argument("--tol", type=float, default=region_mod.DEFAULT_TOL)
    p.add_argument("--steps", type=int, default=None)
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("power", help="check that matrix powers realize another arc")
    add_n(p)
    p.add_argument("--m", type=int, required=True, help="source trinomial degree")
    p.add_argument("--d", type=int, required=True, help="power to apply")
    p.set_defaults(func=cmd_power)

    p = sub.add_parser("resultant", help="double-root analysis of t^n - beta*t - alpha")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_resultant, _min_n=4)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.n < getattr(args, "_min_n", 2):
            raise KarpelevicError(f"order must be >= {args._min_n}, got {args.n}")
        if hasattr(args, "steps") and args.steps is None:
            args.steps = _default_steps()
        if hasattr(args, "steps") and args.steps < 8:
            raise KarpelevicError(f"need at least 8 steps, got {args.steps}")
        if hasattr(args, "tol") and args.tol <= 0:
            raise KarpelevicError(f"tolerance must be positive, got {args.tol}")
        if hasattr(args, "alpha") and args.alpha is not None:
            if not 0.0 <= args.alpha <= 1.0:
                raise KarpelevicError(f"alpha must lie in [0, 1], got {args.alpha}")
        return args.func(args)
    except KarpelevicError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
