"""Command-line front end.

Exit codes: 0 success, 1 usage or data error, 2 counterexample found,
3 bundled-data gap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import graphcore as gc
from . import verify as vf
from .groupdata import (
    DataError,
    DataGapError,
    UnknownGroupError,
    default_table,
    degrees,
    is_partial,
    parse_spec,
    partial_vertex_data,
)
from .numtheory import is_prime

EXIT_OK, EXIT_USAGE, EXIT_COUNTEREXAMPLE, EXIT_DATA_GAP = 0, 1, 2, 3

CHECK_IDS = ("thm-a", "thm-b", "thm-c", "psl2-even", "psl2-odd", "excluded-families", "bipartite", "palfy:<spec>")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _fmt_set(values) -> str:
    return "{" + ",".join(map(str, values)) + "}"


def _fmt_edges(g) -> str:
    return ", ".join(f"{u}-{v}" for u, v in g.edges()) or "(none)"


def _emit(text: str, output: Optional[str]) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if output and output != "-":
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _resolve(spec: str):
    table = default_table()
    return parse_spec(spec, table), table


# --- group -------------------------------------------------------------------


def _group_summary(spec: str, degree_graph: bool) -> dict:
    desc, table = _resolve(spec)
    out: dict = {"group": str(desc)}
    if is_partial(desc):
        data = partial_vertex_data(desc)
        g = gc.partial_graph(data)
        tri = gc.has_triangle_lower_bound(g) and gc.find_triangle(g)
        out.update(partial=True, rho=list(data.vertices), complete_on=list(data.complete_on),
                   graph=gc.to_json_dict(g), triangle=list(tri) if tri else None)
        return out
    d = degrees(desc, table)
    g = gc.build_prime_graph(d)
    tri = gc.find_triangle(g)
    fig = gc.figure_a_match(g)
    out.update(partial=False, degrees=list(d.degrees), rho=list(g.vertices), graph=gc.to_json_dict(g),
               components=gc.connected_components(g), triangle=list(tri) if tri else None,
               figure_a=fig.value if fig else None, shapes=gc.shape_predicates(g).to_dict())
    if degree_graph:
        dg = gc.build_degree_graph(d)
        dtri = gc.find_triangle(dg)
        out["degree_graph"] = gc.to_json_dict(dg)
        out["degree_graph"]["triangle"] = list(dtri) if dtri else None
    return out


def _render_group_text(s: dict) -> str:
    lines = [f"group: {s['group']}"]
    edges = ", ".join(f"{u}-{v}" for u, v in s["graph"]["edges"]) or "(none)"
    if s["partial"]:
        lines += [f"rho: {_fmt_set(s['rho'])}",
                  f"partial graph: certified clique on {_fmt_set(s['complete_on'])}",
                  f"certified edges: {edges}",
                  "triangle: " + (str(tuple(s["triangle"])) if s["triangle"] else "not certified")]
        return "\n".join(lines) + "\n"
    lines += [f"degrees: {_fmt_set(s['degrees'])}",
              f"rho: {_fmt_set(s['rho'])}",
              f"edges: {edges}",
              f"components: {len(s['components'])} " + " | ".join(_fmt_set(c) for c in s["components"]),
              "triangle: " + (str(tuple(s["triangle"])) if s["triangle"] else "none (triangle-free)")]
    kb = s["shapes"]["complete_bipartite"]
    if kb:
        lines.append(f"complete bipartite: K_{{{kb[0]},{kb[1]}}}")
    if s["figure_a"]:
        lines.append(f"figure A: {s['figure_a']}")
    if "degree_graph" in s:
        dg = s["degree_graph"]
        dedges = ", ".join(f"{u}-{v}" for u, v in dg["edges"]) or "(none)"
        lines += [f"degree graph edges: {dedges}",
                  "degree graph triangle: " + (str(tuple(dg["triangle"])) if dg["triangle"] else "none")]
    return "\n".join(lines) + "\n"


def cmd_group(args) -> int:
    summary = _group_summary(args.spec, args.degree_graph)
    if args.format == "json":
        _emit(json.dumps(summary), args.output)
    else:
        _emit(_render_group_text(summary), args.output)
    return EXIT_OK


def cmd_graph(args) -> int:
    desc, table = _resolve(args.spec)
    if is_partial(desc):
        if args.degree_graph:
            raise UsageError(f"{desc} has no degree set, so no degree graph")
        g = gc.partial_graph(partial_vertex_data(desc))
    else:
        d = degrees(desc, table)
        g = gc.build_degree_graph(d) if args.degree_graph else gc.build_prime_graph(d)
    text = gc.to_dot(g) if args.format == "dot" else json.dumps(gc.to_json_dict(g))
    _emit(text, args.output)
    return EXIT_OK


# --- verify ------------------------------------------------------------------


def _render_report_text(report: vf.VerificationReport, timing: bool) -> str:
    lines = [f"check: {report.check_id}", f"range: {report.parameter_range}",
             f"instances: {len(report.instances)}", f"counterexamples: {len(report.counterexamples)}"]
    for key, value in report.summary.items():
        lines.append(f"  {key}: {value}")
    for cex in report.counterexamples:
        lines.append(f"  COUNTEREXAMPLE {cex.get('descriptor')}: {cex.get('reason')}")
    lines.append("result: " + ("PASS" if report.success else "FAIL"))
    if timing:
        lines.append(f"elapsed: {report.elapsed:.3f}s")
    return "\n".join(lines) + "\n"


def _run_check(args) -> vf.VerificationReport:
    check = args.check
    if check.startswith("palfy:"):
        desc, table = _resolve(check[len("palfy:"):])
        d = degrees(desc, table)
        solvable = str(desc) in table and table.get(str(desc)).solvable
        report = vf.scan_palfy(str(desc), d, solvable)
        rec = report.instances[0]
        report.summary = {"satisfied": rec["palfy_satisfied"],
                          "violating_triple": tuple(rec["violating_triple"]) if rec["violating_triple"] else None}
        return report
    if check == "psl2-even":
        return vf.scan_psl2_even(args.max_f, jobs=args.jobs)
    if check == "psl2-odd":
        return vf.scan_psl2_odd(args.max_q, jobs=args.jobs)
    config = vf.ScanConfig(max_f=args.max_f, max_q=args.max_q, max_suzuki_exp=args.max_suzuki_exp,
                           max_psl3_q=args.max_psl3_q, jobs=args.jobs)
    table = default_table()
    runners = {"thm-a": vf.verify_theorem_a, "thm-b": vf.verify_theorem_b, "thm-c": vf.verify_theorem_c,
               "bipartite": vf.verify_bipartite_bound, "excluded-families": vf.verify_excluded_simple_families}
    if check not in runners:
        raise UsageError(f"unknown check id {check!r}; expected one of {', '.join(CHECK_IDS)}")
    return runners[check](config, table)


def cmd_verify(args) -> int:
    try:
        vf.ScanConfig(max_f=args.max_f, max_q=args.max_q, max_suzuki_exp=args.max_suzuki_exp,
                      max_psl3_q=args.max_psl3_q, jobs=args.jobs)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = _run_check(args)
    timing = not args.no_timing
    if args.format == "json":
        _emit(json.dumps(report.to_dict(timing=timing)), args.output)
    else:
        _emit(_render_report_text(report, timing), args.output)
    return EXIT_OK if report.success else EXIT_COUNTEREXAMPLE


# --- classify ----------------------------------------------------------------


def _parse_label(tok: str) -> int:
    tok = tok.strip()
    try:
        value = int(tok)
    except ValueError:
        raise UsageError(f"vertex label {tok!r} is not an integer") from None
    if not is_prime(value):
        raise UsageError(f"vertex label {tok!r} is not a prime")
    return value


def parse_edge_list(text: str, vertices: str = "") -> gc.PrimeGraph:
    edges = []
    for item in filter(None, (s.strip() for s in text.split(","))):
        parts = item.split("-")
        if len(parts) != 2:
            raise UsageError(f"malformed edge {item!r}; expected u-v")
        edges.append((_parse_label(parts[0]), _parse_label(parts[1])))
    verts = [_parse_label(v) for v in vertices.split(",") if v.strip()]
    verts += [v for e in edges for v in e]
    try:
        return gc.PrimeGraph(verts, edges)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_classify(args) -> int:
    if args.file:
        with open(args.file, encoding="utf-8") as fh:
            obj = json.load(fh)
        for v in list(obj.get("vertices", [])) + [v for e in obj.get("edges", []) for v in e]:
            _parse_label(str(v))
        g = gc.prime_graph_from_json(obj)
    else:
        g = parse_edge_list(args.edges or "", args.vertices or "")
    if len(g) > gc.MAX_ISO_VERTICES:
        raise UsageError(f"classify handles at most {gc.MAX_ISO_VERTICES} vertices, got {len(g)}")
    verdict = vf.classify(g)
    out = verdict.to_dict()
    if args.format == "json":
        out["graph"] = gc.to_json_dict(g)
        _emit(json.dumps(out), args.output)
    else:
        lines = [f"graph: vertices {_fmt_set(g.vertices)}; edges {_fmt_edges(g)}", f"verdict: {out['verdict']}"]
        if "witness" in out:
            lines.append(f"witness: {out['witness']}")
        if "citation" in out:
            lines.append(f"citation: {out['citation']}")
        _emit("\n".join(lines), args.output)
    return EXIT_OK


# --- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="primegraph", description="Prime graphs of character degree sets.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, formats, default):
        p.add_argument("--format", choices=formats, default=default)
        p.add_argument("--output", "-o", default=None, help="output path (default: stdout)")

    p = sub.add_parser("group", help="degree set, rho and prime graph summary")
    p.add_argument("spec", help='"PSL2:q", a named id, "product:A,B", "Sz:q2", "PSL3:q", "PSU3:q"')
    p.add_argument("--degree-graph", action="store_true", help="also report the degree graph")
    common(p, ("text", "json"), "text")
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("graph", help="serialize a prime graph")
    p.add_argument("spec")
    p.add_argument("--degree-graph", action="store_true", help="emit the degree graph instead")
    common(p, ("dot", "json"), "dot")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("verify", help="run a verification scan")
    p.add_argument("check", help=", ".join(CHECK_IDS))
    p.add_argument("--max-f", type=int, default=24)
    p.add_argument("--max-q", type=int, default=10**4)
    p.add_argument("--max-suzuki-exp", type=int, default=13)
    p.add_argument("--max-psl3-q", type=int, default=100)
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.add_argument("--no-timing", action="store_true", help="omit elapsed time from the report")
    common(p, ("text", "json"), "text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("classify", help="classify a prime graph")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--edges", help='edge list "u-v,u-v,..."')
    src.add_argument("--file", help="JSON graph file")
    p.add_argument("--vertices", help="extra (isolated) vertices, comma-separated")
    common(p, ("text", "json"), "text")
    p.set_defaults(func=cmd_classify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DataGapError as exc:
        print(f"primegraph: data gap: {exc}", file=sys.stderr)
        return EXIT_DATA_GAP
    except FileNotFoundError as exc:
        if os.environ.get("PRIMEGRAPH_DATA") and exc.filename == os.environ["PRIMEGRAPH_DATA"]:
            print(f"primegraph: data gap: {exc}", file=sys.stderr)
            return EXIT_DATA_GAP
        print(f"primegraph: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, UnknownGroupError, DataError, ValueError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, UnknownGroupError) else exc
        print(f"primegraph: {msg}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
