"""Command line interface.

Exit status: 0 on success, 1 on a domain error (or a failed ``verify``),
2 on a usage error. ``--json`` switches any command to a single JSON object
on stdout; fractions are always written as ``"num/den"`` strings.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Optional, Sequence

from .contfrac import std_expand
from .crosscap import crosscap_bw, crosscap_new
from .d2tree import children, default_ts, generation, mother, slope_path, territory
from .errors import DomainError
from .exactfrac import ExtRational, normalize_lens, reduce
from .oracle import verify_formulas, verify_tree
from .render import build_scene, render_svg


def _frac(args) -> ExtRational:
    return reduce(args.P, args.Q)


def cmd_crosscap(args) -> tuple[dict, str]:
    lens = normalize_lens(args.P, args.Q)
    methods = ["bw", "new", "path"] if args.method == "all" else [args.method]
    values: dict[str, int] = {}
    bw = new = None
    if "bw" in methods:
        bw = crosscap_bw(lens)
        values["bw"] = bw.total
    if "new" in methods:
        new = crosscap_new(lens)
        values["new"] = new.total
    if "path" in methods:
        values["path"] = slope_path(args.P, args.Q).crosscap
    cr = next(iter(values.values()))
    data: dict[str, Any] = {
        "p": lens.p,
        "q": lens.q,
        "q_normalized": lens.q_normalized,
        "crosscap": cr,
        "methods": values,
        "agree": len(set(values.values())) == 1,
    }
    text = f"Cr({lens.p},{lens.q}) = {cr}"
    if len(values) > 1:
        text += " (" + ", ".join(f"{k}={v}" for k, v in values.items()) + ")"
    if args.trace:
        bw = bw or crosscap_bw(lens)
        new = new or crosscap_new(lens)
        data["trace"] = {
            "expansion_of": f"{lens.p}/{lens.q_normalized}",
            "bw": {"a": list(bw.a), "b": list(bw.b)},
            "new": {
                "alpha": list(new.alpha),
                "alpha_prime": [str(x) for x in new.alpha_prime],
                "beta": list(new.beta),
            },
        }
        prime = ", ".join("inf" if x.is_inf else str(x.num) for x in new.alpha_prime)
        text += (
            f"\n  p/q_normalized = {lens.p}/{lens.q_normalized} = {std_expand(ExtRational(lens.p, lens.q_normalized))}"
            f"\n  bw:  a = {list(bw.a)}  b = {list(bw.b)}  sum(b)/2 = {bw.total}"
            f"\n  new: alpha = {list(new.alpha)}  alpha' = [{prime}]  beta = {list(new.beta)}  sum = {new.total}"
        )
    return data, text


def cmd_path(args) -> tuple[dict, str]:
    res = slope_path(args.P, args.Q)
    data = {
        "p": args.P,
        "q": args.Q,
        "slopes": [str(s) for s in res.slopes],
        "expansions": [list(e.terms) for e in res.expansions],
        "crosscap": res.crosscap,
        "euler_char": res.euler_char,
    }
    lines = [f"r_{i} = {s}  {e}" for i, (s, e) in enumerate(zip(res.slopes, res.expansions))]
    lines.append(f"crosscap = {res.crosscap}, euler characteristic = {res.euler_char}")
    return data, "\n".join(lines)


def cmd_cf(args) -> tuple[dict, str]:
    x = _frac(args)
    cf = std_expand(x)
    return {"x": str(x), "terms": list(cf.terms)}, f"{x} = {cf}"


def cmd_mother(args) -> tuple[dict, str]:
    x = _frac(args)
    m = mother(x)
    return {"x": str(x), "mother": str(m)}, f"M({x}) = {m}"


def cmd_children(args) -> tuple[dict, str]:
    x = _frac(args)
    ts = args.t if args.t else default_ts(x, args.count)
    kids = children(x, ts)
    data = {"x": str(x), "t": ts, "children": [str(c) for c in kids]}
    return data, "\n".join(f"t={t:>3}  {c}" for t, c in zip(ts, kids))


def cmd_generation(args) -> tuple[dict, str]:
    x = _frac(args)
    g = generation(x)
    return {"x": str(x), "generation": g}, f"generation({x}) = {g}"


def cmd_territory(args) -> tuple[dict, str]:
    x = _frac(args)
    t = territory(x)
    return {"x": str(x), "lo": str(t.lo), "hi": str(t.hi)}, f"T({x}) = ({t.lo}, {t.hi})"


def cmd_verify(args) -> tuple[dict, str]:
    tree = verify_tree(args.max_size)
    formulas = verify_formulas(args.max_p)
    data = {
        "max_size": args.max_size,
        "max_p": args.max_p,
        "passed": tree.passed and formulas.passed,
        "tree": tree.to_dict(),
        "formulas": formulas.to_dict(),
    }
    lines = [
        f"tree ball N={args.max_size}: {'PASS' if tree.passed else 'FAIL'}",
        f"  vertices={tree.vertex_count} edges={tree.edge_count} connected={tree.connected} "
        f"acyclic={tree.acyclic} parent_matches_mother={tree.parent_matches_mother} "
        f"depth_matches_formulas={tree.depth_matches_formulas}",
        f"formulas p<={args.max_p}: {'PASS' if formulas.passed else 'FAIL'} ({formulas.cases} lens spaces)",
    ]
    for name, rep in (("tree", tree), ("formulas", formulas)):
        if rep.first_counterexample:
            lines.append(f"  {name} counterexample: {rep.first_counterexample}")
    return data, "\n".join(lines)


def cmd_render(args) -> tuple[dict, str]:
    highlight = tuple(args.highlight) if args.highlight else None
    svg = render_svg(
        args.generations,
        show_farey=args.farey,
        highlight=highlight,
        width_px=args.width,
        cap=args.cap,
        label_generations=args.label_generations,
    )
    sc = build_scene(args.generations, args.cap, highlight)
    if args.output in (None, "-"):
        sys.stdout.write(svg)
        target = "-"
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(svg)
        target = args.output
    data = {
        "output": target,
        "generations": args.generations,
        "vertices": len(sc.vertices),
        "edges": len(sc.edges),
        "highlight": [f"{a}--{b}" for a, b in sc.highlight],
    }
    return data, f"wrote {target}: {len(sc.vertices)} vertices, {len(sc.edges)} edges"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lenscap", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", help="emit one JSON object")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit one JSON object")
    sub = parser.add_subparsers(dest="command", required=True)

    def pq(name, func, help):
        sp = sub.add_parser(name, parents=[common], help=help)
        sp.add_argument("P", type=int)
        sp.add_argument("Q", type=int)
        sp.set_defaults(func=func)
        return sp

    sp = pq("crosscap", cmd_crosscap, "minimum crosscap number of L(P,Q)")
    sp.add_argument("--method", choices=["bw", "new", "path", "all"], default="bw")
    sp.add_argument("--trace", action="store_true", help="show the b, alpha' and beta sequences")
    pq("path", cmd_path, "slope sequence of the band sums from 0/1 to P/Q")
    pq("cf", cmd_cf, "standard continued fraction of P/Q")
    pq("mother", cmd_mother, "mother of the even vertex P/Q")
    sp = pq("children", cmd_children, "children of the even vertex P/Q")
    sp.add_argument("--count", type=int, default=6, help="number of children (default 6)")
    sp.add_argument("--t", type=int, action="append", help="explicit odd parameter t (repeatable)")
    pq("generation", cmd_generation, "number of mother steps from P/Q to 0/1")
    pq("territory", cmd_territory, "territory interval of P/Q")

    sp = sub.add_parser("verify", parents=[common], help="brute-force checks of the tree and formulas")
    sp.add_argument("--max-size", type=int, default=500)
    sp.add_argument("--max-p", type=int, default=200)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("render", parents=[common], help="SVG of the tree in the Poincare disk")
    sp.add_argument("--generations", type=int, default=2)
    sp.add_argument("--highlight", type=int, nargs=2, metavar=("P", "Q"))
    sp.add_argument("--farey", action="store_true", help="draw the Farey graph underneath")
    sp.add_argument("--cap", type=int, default=3, help="children drawn per vertex")
    sp.add_argument("--width", type=int, default=800)
    sp.add_argument("--label-generations", type=int, default=2)
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_render)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        data, text = args.func(args)
    except DomainError as exc:
        name = type(exc).__name__
        if args.json:
            print(json.dumps({"error": name, "message": str(exc)}))
        print(f"lenscap: error ({name}): {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps(data))
    elif not (args.command == "render" and args.output in (None, "-")):
        print(text)
    if args.command == "verify" and not data["passed"]:
        return 1
    return 0


def main() -> None:
    sys.exit(run())
