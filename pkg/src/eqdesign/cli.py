"""Command-line surface: generate, verify, economy, pairs, screen, oracle.

Exit codes: 0 success (or verified equitable), 1 checked-negative
(non-equitable), 2 usage error, 3 I/O or parse error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from fractions import Fraction

from . import effects, families, poly, screening

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_IO = 3


def write_atomic(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", text=True)
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _load_design(path: str):
    try:
        with open(path) as fh:
            text = fh.read()
        return poly.loads_design(text)
    except (OSError, json.JSONDecodeError, ValueError, KeyError, TypeError) as exc:
        print(f"error: cannot read design from {path}: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_IO)


def cmd_generate(args) -> int:
    try:
        design = families.generate(args.family, args.d, args.m)
        predicted = families.predicted_size(args.family, args.d, args.m)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    m = 1 if args.family == "path" else args.m
    gamma = design.economy(m)
    if args.format == "json":
        text = poly.dumps_design(design, family=args.family, m=m)
    else:
        text = poly.to_dot(design, name=f"{args.family}_{args.d}_{args.m}")
    if args.out:
        write_atomic(args.out, text)
    else:
        sys.stdout.write(text)
    print(f"size={len(design)} predicted_size={predicted} economy={gamma}")
    return EXIT_OK


def cmd_verify(args) -> int:
    design, _meta = _load_design(args.input)
    if not design.terms:
        print("profile=() equitable, m=0")
        return EXIT_OK
    profile = design.edge_profile()
    print(f"profile={profile}")
    first = profile[0]
    if all(c == first for c in profile):
        print(f"equitable, m={first}")
        return EXIT_OK
    print("not equitable")
    return EXIT_NEGATIVE


def cmd_economy(args) -> int:
    lines = ["family,d,m,size,predicted_size,economy"]
    d = args.d
    m_max = min(args.m_max if args.m_max else 1 << (d - 1), 1 << (d - 1))
    for m in range(1, m_max + 1):
        for family in ("G", "H", "M"):
            if family == "H" and m < 2:
                continue
            if family == "M" and d < 2 * families.q_min(m):
                continue
            design = families.generate(family, d, m)
            predicted = families.predicted_size(family, d, m)
            gamma = Fraction(m * d, len(design))
            lines.append(f"{family},{d},{m},{len(design)},{predicted},{gamma}")
    text = "\n".join(lines) + "\n"
    if args.out:
        write_atomic(args.out, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_pairs(args) -> int:
    design, _meta = _load_design(args.input)
    if not design.terms:
        print("error: empty design has no pairs", file=sys.stderr)
        return EXIT_USAGE
    od = effects.order_vertices(design)
    text = effects.pairs_csv(od)
    if args.out:
        write_atomic(args.out, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_screen(args) -> int:
    try:
        with open(args.config) as fh:
            obj = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: cannot read config {args.config}: {exc}", file=sys.stderr)
        return EXIT_IO
    try:
        cfg = screening.config_from_dict(obj)
        report = screening.run_screen(cfg)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    write_atomic(args.out, report.to_csv())
    if args.metadata:
        write_atomic(args.metadata, report.metadata_json())
    if args.scatter:
        write_atomic(args.scatter, report.scatter_csv())
    summary = {c: report.classes.count(c) for c in ("C0", "C1", "C2")}
    print(f"n_evals={report.n_evals}")
    print("classes: " + " ".join(f"{k}={v}" for k, v in summary.items()))
    return EXIT_OK


def cmd_oracle(args) -> int:
    try:
        size, witness = families.min_size_oracle(args.d, args.m)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(f"min_size={size}")
    print("witness: " + " ".join(poly.mono_str(t, args.d) for t in witness.ordered_terms))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eqdesign",
        description="Edge-equitable hypercube designs for elementary-effects screening.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="construct a design and write it to a file")
    p.add_argument("--family", required=True, choices=families.FAMILIES)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="check edge equitability of a design file")
    p.add_argument("--in", dest="input", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("economy", help="emit the family-by-m economy table as CSV")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--m-max", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_economy)

    p = sub.add_parser("pairs", help="list the per-direction effect pairs as CSV")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_pairs)

    p = sub.add_parser("screen", help="run a screening experiment from a JSON config")
    p.add_argument("--config", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--metadata", default=None)
    p.add_argument("--scatter", default=None)
    p.set_defaults(func=cmd_screen)

    p = sub.add_parser("oracle", help="exhaustive minimal-size search (small d only)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_oracle)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
