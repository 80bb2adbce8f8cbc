"""Command-line entry point: ``magic-angles <subcommand> ...``."""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from .angles import (
    CircularInterval,
    dyadic_complexity,
    expansion,
    format_angle,
    parse_angle,
    pseudocenter,
)
from .components import (
    HyperbolicComponent,
    cardioid_angles,
    classify,
    enumerate_ray_pairs,
    tune,
    vein_contains,
    vein_of,
)
from .errors import AngleParseError, DomainError, HypothesisError
from .harness import DEFAULT_RENORM_Q, default_vein, phi_trail, run_verify
from .lamination import Leaf, arcs_disjoint, ends, ends_dyadic, hubbard_tree
from .magic import (
    alternate_phi,
    ble_cabrera_TH,
    douady_T,
    in_window,
    is_real_angle,
    orbit_report,
    phi_H,
    psi,
)

MAX_GRID = 2**16


class UsageError(Exception):
    pass


def decimal(x: Fraction) -> str:
    return f"{float(x):.12g}"


def fmt(x) -> str:
    return format_angle(x)


def parse_component(text: str) -> HyperbolicComponent:
    """``A:B`` (root words) or ``root=<angle>``."""
    if text.startswith("root="):
        return HyperbolicComponent.from_root(parse_angle(text[len("root="):]))
    if text.count(":") != 1:
        raise UsageError(f"component must be 'A:B' or 'root=<angle>', got {text!r}")
    a, b = text.split(":")
    return HyperbolicComponent(a, b)


def emit(args, record: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(record, sort_keys=False))
    else:
        for line in lines:
            print(line)


def cmd_angle(args) -> int:
    theta = parse_angle(args.angle)
    rep = orbit_report(theta)
    real = is_real_angle(theta)
    record = {
        "angle": fmt(theta),
        "decimal": decimal(theta),
        "expansion": str(expansion(theta)),
        "orbit_length": len(rep.orbit),
        "min_distance": fmt(rep.min_distance),
        "closest": fmt(rep.closest),
        "real": real,
    }
    emit(args, record, [
        f"angle        {fmt(theta)}  ({decimal(theta)})",
        f"expansion    {expansion(theta)}",
        f"orbit length {len(rep.orbit)}",
        f"min |x-1/2|  {fmt(rep.min_distance)} at {fmt(rep.closest)}",
        f"real         {str(real).lower()}",
    ])
    return 0


def _show(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return str(v).lower()
    return str(v)


def _trail_lines(trail: dict) -> list[str]:
    return [f"{k:<24} {_show(v)}" for k, v in trail.items()]


def cmd_phi(args) -> int:
    h = parse_component(args.component)
    theta = parse_angle(args.theta)
    vein = vein_of(parse_angle(args.vein)) if args.vein else None
    trail = phi_trail(h, theta, vein, check_angle=not args.no_check_angle, renorm_q=args.renorm_q)
    trail["output_decimal"] = decimal(Fraction(trail["output"]))
    emit(args, trail, _trail_lines(trail))
    return 0


def cmd_th(args) -> int:
    h = parse_component(args.component)
    theta = parse_angle(args.theta)
    out = ble_cabrera_TH(h, theta)
    record = {"component": str(h), "input": fmt(theta), "output": fmt(out),
              "output_decimal": decimal(out), "real": is_real_angle(out)}
    emit(args, record, _trail_lines(record))
    return 0


def cmd_alt_phi(args) -> int:
    h = parse_component(args.component)
    theta = parse_angle(args.theta)
    out = alternate_phi(h, theta, check_angle=not args.no_check_angle)
    rep = orbit_report(theta)
    record = {"component": str(h), "input": fmt(theta), "input_min_distance": fmt(rep.min_distance),
              "output": fmt(out), "output_decimal": decimal(out), "in_window": in_window(out, h.period),
              "real": is_real_angle(out)}
    emit(args, record, _trail_lines(record))
    return 0


def overlay_points(h: HyperbolicComponent, max_q: int) -> list[tuple[Fraction, Fraction]]:
    """Graph points of the formula for ``h`` over its tuned cardioid angles."""
    if h.is_cardioid:
        return [(t, douady_T(t)) for t in cardioid_angles(max_q)]
    vein = default_vein(h)
    points = []
    for t in sorted({tune(h, eta) for eta in cardioid_angles(max_q)}):
        try:
            points.append((t, phi_H(h, vein, t)))
        except (HypothesisError, DomainError):
            continue
    return points


def cmd_psi_plot(args) -> int:
    n = args.grid
    if not 1 <= n <= MAX_GRID:
        raise UsageError(f"grid denominator must be in [1, {MAX_GRID}]")
    rows = [("psi", x, psi(x)) for x in (Fraction(k, n) for k in range(n))]
    for text in args.overlay or []:
        h = parse_component(text)
        rows += [(f"phi[{h}]", x, y) for x, y in overlay_points(h, args.max_q)]
    try:
        out = open(args.output, "w", newline="") if args.output != "-" else sys.stdout
    except OSError as exc:
        raise UsageError(f"cannot write {args.output}: {exc}") from None
    writer = csv.writer(out)
    writer.writerow(["series", "x", "x_decimal", "y", "y_decimal"])
    for series, x, y in rows:
        writer.writerow([series, fmt(x), decimal(x), fmt(y), decimal(y)])
    if out is not sys.stdout:
        out.close()
    return 0


def cmd_pseudocenter(args) -> int:
    lo, hi = parse_angle(args.start), parse_angle(args.end)
    center = pseudocenter(CircularInterval(lo, hi))
    record = {"interval": [fmt(lo), fmt(hi)], "pseudocenter": fmt(center),
              "complexity": dyadic_complexity(center)}
    emit(args, record, [f"pseudocenter {fmt(center)}  complexity {record['complexity']}"])
    return 0


def cmd_ends(args) -> int:
    leaf = Leaf(*(parse_angle(t) for t in args.angles))
    tree = hubbard_tree(leaf)
    record = {"leaf": [fmt(x) for x in leaf.endpoints], "ends": tree.ends,
              "closure_index": tree.closure_index, "extended_ends": tree.extended_ends}
    emit(args, record, _trail_lines(record))
    return 0


def cmd_vein(args) -> int:
    vein = vein_of(parse_angle(args.center))
    record = {"center": fmt(vein.center), "delta_V": vein.complexity, "ends": ends_dyadic(vein.center)}
    if args.pair:
        leaf = Leaf(*(parse_angle(t) for t in args.pair))
        record.update({
            "pair": [fmt(leaf.a), fmt(leaf.b)],
            "pair_pseudocenter": fmt(pseudocenter(leaf.interval())),
            "pair_ends": ends(leaf),
            "contains": vein_contains(vein, leaf),
        })
    emit(args, record, _trail_lines(record))
    return 0


def cmd_pairs(args) -> int:
    rows = []
    for pair in enumerate_ray_pairs(args.max_period):
        if args.period and pair.period != args.period:
            continue
        h = HyperbolicComponent.from_pair(pair)
        half, limb = classify(h)
        center = pseudocenter(pair.leaf.interval())
        rows.append({
            "period": pair.period, "a": fmt(pair.a), "b": fmt(pair.b), "words": str(h),
            "half": half, "half_limb": limb, "pseudocenter": fmt(center), "ends": ends(pair.leaf),
            "arcs_disjoint": arcs_disjoint(pair.leaf) if center != 0 else None,
        })
    if args.json:
        for row in rows:
            print(json.dumps(row))
    else:
        for r in rows:
            print(f"{r['period']:>3}  {r['a']:>12}  {r['b']:>12}  {r['words']:<20} {r['half']:<13}"
                  f" limb={str(r['half_limb']).lower():<5} pc={r['pseudocenter']:<8} ends={r['ends']}")
    return 0


def cmd_verify(args) -> int:
    report = run_verify(args.max_period, args.max_q, args.renorm_q)
    if not report.reconciles():
        print("internal error: sweep counts do not reconcile", file=sys.stderr)
        return 3
    if args.json:
        print(json.dumps(report.to_dict()))
    else:
        print(f"parameters            {report.parameters}")
        print(f"components tested     {report.components_tested}")
        print(f"angles tested         {report.angles_tested}")
        print(f"passes                {report.passes}")
        print(f"hypothesis violations {report.hypothesis_violations}")
        print(f"failures              {report.failures}")
        for check, tally in report.by_check.items():
            print(f"  {check:<10} pass={tally['pass']} hypothesis={tally['hypothesis']} fail={tally['fail']}")
        for f in report.failure_list:
            print(f"FAIL {f}")
    return 1 if report.failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="magic-angles", description="Exact external-angle computations.")
    parser.add_argument("--json", action="store_true", help="one JSON object per line")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("angle", help="parse an angle and summarize its orbit")
    p.add_argument("angle")
    p.set_defaults(func=cmd_angle)

    p = sub.add_parser("phi", help="main formula with its intermediate values")
    p.add_argument("component", help="'A:B' root words or 'root=<angle>'")
    p.add_argument("theta")
    p.add_argument("--vein", help="vein center (default: pseudocenter of the root pair)")
    p.add_argument("--no-check-angle", action="store_true", help="only enforce the sector bound")
    p.add_argument("--renorm-q", type=int, default=DEFAULT_RENORM_Q)
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("th", help="tuned Douady map")
    p.add_argument("component")
    p.add_argument("theta")
    p.set_defaults(func=cmd_th)

    p = sub.add_parser("alt-phi", help="vein-free formula")
    p.add_argument("component")
    p.add_argument("theta")
    p.add_argument("--no-check-angle", action="store_true")
    p.set_defaults(func=cmd_alt_phi)

    p = sub.add_parser("psi-plot", help="CSV of the orbit-distance function and formula graphs")
    p.add_argument("--grid", type=int, required=True, help="grid denominator")
    p.add_argument("--output", default="-", help="CSV path ('-' for stdout)")
    p.add_argument("--overlay", action="append", metavar="COMPONENT")
    p.add_argument("--max-q", type=int, default=5, help="rotation denominator bound for overlays")
    p.set_defaults(func=cmd_psi_plot)

    p = sub.add_parser("pseudocenter", help="simplest dyadic in an open arc")
    p.add_argument("start")
    p.add_argument("end")
    p.set_defaults(func=cmd_pseudocenter)

    p = sub.add_parser("ends", help="end count of the Hubbard tree of a leaf or point")
    p.add_argument("angles", nargs="+", metavar="ANGLE")
    p.set_defaults(func=cmd_ends)

    p = sub.add_parser("vein", help="vein data, optionally with a membership test")
    p.add_argument("center")
    p.add_argument("--pair", nargs=2, metavar="ANGLE")
    p.set_defaults(func=cmd_vein)

    p = sub.add_parser("pairs", help="enumerate periodic ray pairs")
    p.add_argument("max_period", type=int)
    p.add_argument("--period", type=int)
    p.set_defaults(func=cmd_pairs)

    p = sub.add_parser("verify", help="run the verification sweeps")
    p.add_argument("--max-period", type=int, default=6)
    p.add_argument("--max-q", type=int, default=5)
    p.add_argument("--renorm-q", type=int, default=DEFAULT_RENORM_Q)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "angles", None) is not None and len(args.angles) > 2:
        parser.error("ends takes one angle (a point) or two (a leaf)")
    try:
        return args.func(args)
    except HypothesisError as exc:
        print(f"hypothesis not met: {exc}", file=sys.stderr)
        return exc.exit_code
    except DomainError as exc:
        print(f"outside the domain: {exc}", file=sys.stderr)
        return exc.exit_code
    except AngleParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"internal invariant breach: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
