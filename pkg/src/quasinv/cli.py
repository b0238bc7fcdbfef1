"""Command-line front end: analyze, classify, solve, verify, export.

Exit codes: 0 when the query succeeds or the property holds, 1 when it fails
or the construction is absent, 2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import classify as classify_mod
from . import oracle as oracle_mod
from . import orbits as orbits_mod
from . import psolve as psolve_mod
from . import quasi as quasi_mod
from . import supersets as supersets_mod
from .errors import InfiniteOrbitError, QuasinvError
from .selfmap import NAMED_MAPS, SelfMap, named_map, parse_map

DEFAULT_WINDOW = 200


def _load_map(source: str) -> SelfMap:
    if source in NAMED_MAPS:
        return named_map(source)
    return parse_map(Path(source).read_bytes())


def _parse_points(text: str) -> tuple[int, ...]:
    try:
        pts = tuple(sorted({int(tok) for tok in text.split(",") if tok.strip() != ""}))
    except ValueError:
        raise QuasinvError(f"expected a comma-separated list of naturals, got {text!r}")
    if not pts or any(p < 0 for p in pts):
        raise QuasinvError(f"expected a nonempty list of naturals, got {text!r}")
    return pts


def _window(args) -> int:
    if getattr(args, "window", None) is not None:
        return args.window
    env = os.environ.get("QUASINV_WINDOW")
    return int(env) if env else DEFAULT_WINDOW


def _fmt_set(points) -> str:
    return "{" + ",".join(str(p) for p in points) + "}"


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def _cmd_orbit(args) -> int:
    sm = _load_map(args.map)
    res = orbits_mod.orbit(sm, args.point)
    if res.is_finite:
        print(f"finite tail={list(res.tail)} cycle={list(res.cycle)}")
    else:
        cert = res.certificate
        print(
            f"infinite entry={cert.entry_height} "
            f"residue_cycle={list(cert.residue_cycle)} drift={cert.drift}"
        )
        w = _window(args)
        omitted = sorted(set(range(w + 1)) - orbits_mod.orbit_profile(sm, args.point).points_upto(w))
        print(f"omitted within [0,{w}]: {omitted}")
    return 0


def _cmd_qi(args) -> int:
    sm = _load_map(args.map)
    if args.interval is not None:
        lo, hi = args.interval
        lam = tuple(range(lo, hi + 1))
    else:
        lam = _parse_points(args.set)
    fn = quasi_mod.internal_quasi_invariant if args.internal else quasi_mod.external_quasi_invariant
    rep = fn(sm, lam, args.k)
    if rep.holds:
        label = "P" if args.internal else "excess"
        print(f"holds {label}={_fmt_set(rep.witness)}")
        return 0
    print("fails")
    return 1


def _cmd_classify(args) -> int:
    sm = _load_map(args.map)
    top = sm.size if hasattr(sm, "table") else 4
    if args.subsets:
        res = classify_mod.classify_subsets_1qi(sm)
        if res is None:
            print("absent")
            return 1
        cls, sel = res
        print(f"case {cls.case} a={cls.a} b={cls.b} c={cls.c}")
        for sample in ((cls.a,), (cls.a, cls.b), tuple(range(min(top, 4)))):
            pts = tuple(sorted(set(sample)))
            print(f"w({_fmt_set(pts)}) = {sel.choose(pts)}")
        return 0
    if args.strict:
        res = classify_mod.classify_strict_intervals_1qi(sm)
        if res is None:
            print("absent")
            return 1
        if res.kind == "succ":
            print("succ")
        else:
            print(f"pivot n_star={res.n_star} u={res.u}")
        return 0
    res = classify_mod.classify_intervals_1qi(sm)
    if res is None:
        print("absent")
        return 1
    cls, sel = res
    ns = "-" if cls.n_star is None else str(cls.n_star)
    print(f"case {cls.case} n_star={ns}")
    for lo, hi in ((0, 3), (2, 7), (5, 5)):
        print(f"w([{lo},{hi}]) = {sel.choose(lo, hi)}")
    return 0


def _cmd_superset(args) -> int:
    sm = _load_map(args.map)
    istar = _parse_points(args.istar)
    extra = _parse_points(args.h) if args.h else ()
    try:
        g = supersets_mod.build_G_orbit_union(sm, istar, extra)
    except InfiniteOrbitError as exc:
        print(f"infinite orbit at {exc.point}")
        return 1
    print(f"G={_fmt_set(g)}")
    return 0


def _cmd_solve(args) -> int:
    sm = _load_map(args.map)
    sol = psolve_mod.solve_P1(sm) if args.p1 else psolve_mod.solve_P2(sm)
    if sol is None:
        print("absent")
        return 1
    print(f"present ({sol.description})")
    top = sm.size - 1 if hasattr(sm, "table") else 5
    samples = [(0,), (0, min(1, top)), (min(2, top), min(5, top))]
    for sample in dict.fromkeys(tuple(sorted(set(s))) for s in samples):
        g = sol.G(sample)
        print(f"G({_fmt_set(sample)}) = {_fmt_set(g)}  u = {sol.u(sample)}")
    return 0


def _cmd_verify(args) -> int:
    cfg = oracle_mod.SuiteConfig(
        theorems=tuple(args.theorem) if args.theorem else None,
        n_max=args.n,
        window=_window(args),
        samples=args.samples,
        seed=args.seed,
    )
    report = oracle_mod.run_theorem_suite(cfg)
    if args.json:
        print(report.to_json())
    else:
        for check in sorted(report.checks, key=lambda c: c.check):
            status = "ok  " if check.passed else "FAIL"
            print(f"{status} {check.check} instances={check.instances} failures={len(check.failures)}")
            for failure in check.failures[:3]:
                print(f"     counterexample: {json.dumps(failure, sort_keys=True)}")
        print(f"{'passed' if report.passed else 'FAILED'}: {report.failure_count} failures")
    return 0 if report.passed else 1


def _cmd_export_dot(args) -> int:
    sm = _load_map(args.map)
    w = _window(args)
    lines = ["digraph selfmap {"]
    if hasattr(sm, "table"):
        for x in range(sm.size):
            lines.append(f"  {x} -> {sm(x)};")
    else:
        lines.append(f"  // nodes truncated to [0,{w}]; tail rule labels give the residue shift")
        for x in range(w + 1):
            y = sm(x)
            if y > w:
                continue
            if x >= sm.prefix_len:
                shift = sm.shifts[x % sm.modulus]
                lines.append(f'  {x} -> {y} [label="{shift:+d}"];')
            else:
                lines.append(f"  {x} -> {y};")
    lines.append("}")
    print("\n".join(lines))
    return 0


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quasinv",
        description="orbit analysis and quasi-invariance decisions for self-maps",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("orbit", help="tail/cycle decomposition or infinitude certificate")
    p.add_argument("map", help="map file or a named map (succ, id)")
    p.add_argument("point", type=int)
    p.add_argument("--window", type=int)
    p.set_defaults(fn=_cmd_orbit)

    p = sub.add_parser("qi", help="quasi-invariance of a set or interval")
    p.add_argument("map")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--set", help="comma-separated points")
    grp.add_argument("--interval", nargs=2, type=int, metavar=("LO", "HI"))
    p.add_argument("--k", type=int, default=1)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--internal", action="store_true")
    mode.add_argument("--external", action="store_true")
    p.set_defaults(fn=_cmd_qi)

    p = sub.add_parser("classify", help="one-removal classification of subsets or intervals")
    p.add_argument("map")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--subsets", action="store_true")
    grp.add_argument("--intervals", action="store_true")
    grp.add_argument("--strict", action="store_true")
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("superset", help="finite invariant superset as an orbit union")
    p.add_argument("map")
    p.add_argument("--istar", required=True, help="comma-separated points")
    p.add_argument("--h", help="extra comma-separated points")
    p.set_defaults(fn=_cmd_superset)

    p = sub.add_parser("solve", help="superset-preservation solvers")
    p.add_argument("map")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--p1", action="store_true")
    grp.add_argument("--p2", action="store_true")
    p.set_defaults(fn=_cmd_solve)

    p = sub.add_parser("verify", help="run the brute-force verification suite")
    p.add_argument("--n", type=int, default=5, help="finite-map enumeration bound")
    p.add_argument("--window", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--theorem", action="append", help="restrict to one check (repeatable)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("export-dot", help="functional graph in DOT format")
    p.add_argument("map")
    p.add_argument("--window", type=int)
    p.set_defaults(fn=_cmd_export_dot)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (QuasinvError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
