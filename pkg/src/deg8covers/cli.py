"""Command-line front end.

    deg8covers family --id 4 --n 3
    deg8covers table --n 2 --format csv
    deg8covers verify --n-range 2..10
    deg8covers search --base c1 --n 3 --max-mult 2 --allow-exceptional
    deg8covers tower --id 5 --n 4

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .families import N_MAX, FamilyError, build_family, theorem_table
from .group import characters
from .search import DEFAULT_MAX_ENTRY, enumerate_point_types, scan_all, scan_configs
from .tower import describe_tower
from .verify import run_all

CSV_HEADER = ["family", "K2", "pg", "q", "bpf", "image_degree"]


def _n_value(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if n < 2:
        raise argparse.ArgumentTypeError(f"n must be >= 2, got {n}")
    if n > N_MAX:
        raise argparse.ArgumentTypeError(f"n is capped at {N_MAX}")
    return n


def _family_id(text: str) -> int:
    try:
        i = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if not 1 <= i <= 9:
        raise argparse.ArgumentTypeError(f"family id must be in 1..9, got {i}")
    return i


def _n_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}")
    a, b = _n_value(lo), _n_value(hi)
    if a > b:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return a, b


def csv_row(rep) -> list:
    return [rep.family_id, rep.K2, rep.pg, rep.q, "yes" if rep.bpf else "no", rep.image_degree]


def render_csv(reports) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for rep in reports:
        w.writerow(csv_row(rep))
    return buf.getvalue()


def render_family_text(rep) -> str:
    lines = [f"family {rep.family_id}  n = {rep.n}"]
    if rep.internal_n != rep.n:
        lines.append(f"construction parameter: {rep.internal_n}")
    lines += [
        f"K2: {rep.K2}",
        f"pg: {rep.pg}",
        f"chi: {rep.chi}",
        f"q: {rep.q}",
        f"canonical map degree: {rep.map_degree}",
        f"image degree: {rep.image_degree}",
        f"base point free: {'yes' if rep.bpf else 'no'}",
        f"fixed part: {rep.fixed_part}",
        f"nodes: {rep.node_count}",
        f"2K_X = f*({rep.invariants.two_K_pullclass})",
        "",
        "branch divisors:",
    ]
    for i, d in enumerate(rep.branch.D, start=1):
        lines.append(f"  D{i} = {d}")
    if rep.branch.imposed_points:
        for k in rep.branch.imposed_points:
            lines.append(f"  imposed point: ({','.join(map(str, k))})")
    lines.append("building data:")
    for chi in characters(3):
        lines.append(f"  L_{chi.label.replace(',', '')} = {rep.cover[chi]}")
    lines.append("tower:")
    lines += ["  " + s for s in describe_tower(rep.tower)]
    fx = rep.fixed
    lines.append(f"  K_X2 = {fx.intermediate_canonical}, moving part on Y: {fx.moving_class}")
    lines.append(f"  h0(K_X) = {fx.h0_K}, h0(moving pullback) = {fx.h0_moving}")
    for c in fx.fixed_curves:
        lines.append(f"  fixed curve over {c.base_class}: self-intersection {c.self_int}, genus {c.genus}")
    if rep.failed_checks:
        lines.append(f"INCONSISTENT: {', '.join(rep.failed_checks)}")
    lines.append("assumptions: " + "; ".join(rep.assumptions))
    return "\n".join(lines) + "\n"


def render_table_text(reports) -> str:
    head = f"{'family':>6} {'K2':>8} {'pg':>8} {'q':>3} {'bpf':>4} {'image':>8}  fixed part"
    lines = [head]
    for r in reports:
        mark = "" if r.consistent else "  INCONSISTENT"
        lines.append(
            f"{r.family_id:>6} {r.K2:>8} {r.pg:>8} {r.q:>3} {'yes' if r.bpf else 'no':>4} "
            f"{r.image_degree:>8}  {r.fixed_part}{mark}"
        )
    return "\n".join(lines) + "\n"


def cmd_family(args) -> int:
    rep = build_family(args.id, args.n)
    if args.format == "json":
        out = json.dumps(rep.to_dict(), indent=2) + "\n"
    elif args.format == "csv":
        out = render_csv([rep])
    else:
        out = render_family_text(rep)
    sys.stdout.write(out)
    return 0


def cmd_table(args) -> int:
    reports = theorem_table(args.n)
    if args.format == "json":
        out = json.dumps([r.to_dict() for r in reports], indent=2) + "\n"
    elif args.format == "csv":
        out = render_csv(reports)
    else:
        out = render_table_text(reports)
    sys.stdout.write(out)
    return 0


def cmd_tower(args) -> int:
    rep = build_family(args.id, args.n)
    fx = rep.fixed
    data = {
        "family": rep.family_id,
        "n": rep.n,
        "steps": [
            {
                "character": st.character.label,
                "L": str(st.L_class),
                "curve_branch": [f"D{i}" for i in st.curve_indices],
                "node_pairs": [[a, b] for a, b in st.node_pairs],
            }
            for st in rep.tower.steps
        ],
        "nodes": rep.node_count,
        "intermediate_canonical": str(fx.intermediate_canonical),
        "moving_class": str(fx.moving_class),
        "fixed_part": fx.describe(),
        "fixed_curves": [
            {"over": str(c.base_class), "self_int": c.self_int, "genus": c.genus} for c in fx.fixed_curves
        ],
        "h0_K": fx.h0_K,
        "h0_moving": fx.h0_moving,
        "nontrivial_fixed_part": fx.nontrivial,
    }
    if args.format == "json":
        sys.stdout.write(json.dumps(data, indent=2) + "\n")
    else:
        lines = describe_tower(rep.tower)
        lines.append(f"K_X2 = {data['intermediate_canonical']}; moving part on Y: {data['moving_class']}")
        lines.append(f"fixed part: {data['fixed_part']}")
        for c in data["fixed_curves"]:
            lines.append(f"  over {c['over']}: self-intersection {c['self_int']}, genus {c['genus']}")
        lines.append(f"h0(K_X) = {fx.h0_K}, h0(moving pullback) = {fx.h0_moving}")
        sys.stdout.write("\n".join(lines) + "\n")
    return 0


def cmd_verify(args) -> int:
    lo, hi = args.n_range
    results = run_all(lo, hi)
    width = max(len(r.name) for r in results)
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        print(f"{status}  {r.name:<{width}}  passed {r.passed}  failed {r.failed}  ({r.seconds:.2f}s)")
        for f in r.failures:
            print(f"      {f}")
    ok = all(r.ok for r in results)
    print(f"{'all checks passed' if ok else 'verification FAILED'} for n in {lo}..{hi}")
    return 0 if ok else 1


def cmd_search(args) -> int:
    points = enumerate_point_types(-1 if args.allow_exceptional else 0, args.max_mult, args.allow_exceptional)
    if args.base == "both":
        cands = scan_all(args.n, points)
    else:
        cands = scan_configs(args.base, args.n, points)
    if not args.all:
        cands = [c for c in cands if c.K2 is not None]
    if args.format == "json":
        sys.stdout.write(json.dumps([c.to_dict() for c in cands], indent=2) + "\n")
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["base", "point", "status", "K2", "pg", "q", "failure"])
        for c in cands:
            pt = "" if c.point is None else "(" + ",".join(map(str, c.point)) + ")"
            w.writerow([c.base, pt, c.status, c.K2, c.pg, c.q, c.failure or ""])
        sys.stdout.write(buf.getvalue())
    else:
        print(f"{len(points)} parity-valid point types with entries up to {args.max_mult}")
        for c in cands:
            pt = "base" if c.point is None else "(" + ",".join(map(str, c.point)) + ")"
            inv = "" if c.K2 is None else f"K2={c.K2} pg={c.pg} q={c.q}"
            extra = f"  [{c.failure}]" if c.failure else ""
            print(f"{c.base}  {pt:<22} {c.status:<12} {inv}{extra}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="deg8covers", description="Degree-8 canonical maps from Z_2^3-covers of F_1.")
    sub = p.add_subparsers(dest="command", required=True)
    fmt = dict(choices=["text", "json", "csv"], default="text")

    f = sub.add_parser("family", help="report one family")
    f.add_argument("--id", type=_family_id, required=True)
    f.add_argument("--n", type=_n_value, required=True)
    f.add_argument("--format", **fmt)
    f.set_defaults(func=cmd_family)

    t = sub.add_parser("table", help="the nine-row table for one n")
    t.add_argument("--n", type=_n_value, required=True)
    t.add_argument("--format", **fmt)
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", help="run every self-check over a range of n")
    v.add_argument("--n-range", type=_n_range, default=(2, 10))
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", help="scan parity-valid imposed points")
    s.add_argument("--base", choices=["c1", "c2", "both"], default="both")
    s.add_argument("--n", type=_n_value, default=3)
    s.add_argument("--max-mult", type=int, default=DEFAULT_MAX_ENTRY)
    s.add_argument("--allow-exceptional", action="store_true")
    s.add_argument("--all", action="store_true", help="include rejected points")
    s.add_argument("--format", **fmt)
    s.set_defaults(func=cmd_search)

    w = sub.add_parser("tower", help="double-cover tower and fixed part of |K_X|")
    w.add_argument("--id", type=_family_id, required=True)
    w.add_argument("--n", type=_n_value, required=True)
    w.add_argument("--format", choices=["text", "json"], default="text")
    w.set_defaults(func=cmd_tower)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "max_mult", 0) < 0:
        parser.error("--max-mult must be >= 0")
    try:
        return args.func(args)
    except FamilyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
