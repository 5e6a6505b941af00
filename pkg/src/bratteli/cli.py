"""Command-line entry point.

Exit codes: 0 success, 2 input error (including usage errors), 3 resource error.
Rationals are printed as ``p/q`` strings; ``--float`` adds decimal values.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import partitions as P
from .adic import adic_orbit, default_order, invariance_check, orbit_partition_check
from .characters import ThomaParameter, character_table, thoma_character
from .diagnostics import boundary_separation, finite_orbit_measure, parse_pattern, poulsen_witness
from .errors import InputError, ResourceError
from .generators import (
    OrbitLabel,
    multidim_young_graph,
    pascal_graph,
    shape_sequence,
    solvable_group_graph,
    young_graph,
)
from .graph import LABEL_CODECS, dimension, export, skew_dimension
from .measures import (
    bernoulli_measure,
    ergodic_method_compare,
    plancherel_measure,
    sample_paths,
    thoma_measure,
    zero_point_mass,
)

EMITS = ("json", "csv", "dot", "text")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(f"{message}; {self.format_usage().strip()}")


def q(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _num(x, with_float: bool) -> dict:
    out = {"value": q(x)}
    if with_float:
        out["decimal"] = float(x)
    return out


def _label(graph, label) -> str:
    encode = LABEL_CODECS.get(graph.kind, (str, str))[0]
    return encode(label)


def _theta(args) -> ThomaParameter:
    return ThomaParameter.parse(getattr(args, "alpha", "") or "", getattr(args, "beta", "") or "")


def _ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError as exc:
        raise InputError(f"expected comma-separated integers, got {text!r}") from exc


def _build_graph(kind: str, levels: int, d: int = 2):
    if levels < 0:
        raise InputError("levels must be >= 0")
    if kind == "young":
        return young_graph(levels)
    if kind == "pascal":
        return pascal_graph(levels)
    if kind == "solvable":
        return solvable_group_graph(levels)
    if kind == "multidim":
        return multidim_young_graph(d, levels)
    raise InputError(f"unknown graph kind {kind!r}")


def _parse_label(kind: str, text: str):
    if kind in ("young", "pascal"):
        return P.parse(text) if kind == "young" else tuple(_ints(text))
    if kind == "solvable":
        bits = parse_pattern(text)
        n = len(bits).bit_length() - 1
        return OrbitLabel(n, bits)
    if kind == "multidim":
        return LABEL_CODECS["multidim"][1](text)
    raise InputError(f"unknown graph kind {kind!r}")


def _csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _dump(doc) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


# -- subcommands -------------------------------------------------------------


def cmd_graph_build(args) -> str:
    graph = _build_graph(args.kind, args.levels, args.d)
    if args.emit in ("json", "dot"):
        text = export(graph, args.emit)
        return text if text.endswith("\n") else text + "\n"
    return _graph_info_text(graph)


def _graph_info(graph) -> dict:
    return {
        "kind": graph.kind,
        "max_level": graph.max_level,
        "levels": [
            {
                "level": n,
                "vertices": graph.size(n),
                "edges": len(graph.edge_table(n)) if n < graph.max_level else 0,
                "paths": str(sum(graph.dims(n))),
            }
            for n in range(graph.max_level + 1)
        ],
    }


def _graph_info_text(graph) -> str:
    lines = [f"kind {graph.kind}, levels 0..{graph.max_level}"]
    for row in _graph_info(graph)["levels"]:
        lines.append(f"level {row['level']}: {row['vertices']} vertices, {row['edges']} edges up, {row['paths']} paths")
    return "\n".join(lines) + "\n"


def cmd_graph_info(args) -> str:
    graph = _build_graph(args.kind, args.levels, args.d)
    if args.emit == "json":
        return _dump(_graph_info(graph))
    if args.emit == "csv":
        info = _graph_info(graph)
        return _csv([["level", "vertices", "edges", "paths"]] + [[r["level"], r["vertices"], r["edges"], r["paths"]] for r in info["levels"]])
    return _graph_info_text(graph)


def cmd_graph_export(args) -> str:
    graph = _build_graph(args.kind, args.levels, args.d)
    text = export(graph, args.format)
    return text if text.endswith("\n") else text + "\n"


def cmd_dim(args) -> str:
    label = _parse_label(args.kind, args.vertex)
    level = _label_level(args.kind, label)
    graph = _build_graph(args.kind, level, args.d)
    v = graph.find(label)
    doc = {"kind": args.kind, "vertex": _label(graph, v.label), "level": v.level}
    if args.source is not None:
        u = graph.find(_parse_label(args.kind, args.source))
        doc["source"] = _label(graph, u.label)
        doc["dimension"] = str(skew_dimension(graph, u, v))
    else:
        doc["dimension"] = str(dimension(graph, v))
    if args.emit == "json":
        return _dump(doc)
    return doc["dimension"] + "\n"


def _label_level(kind: str, label) -> int:
    if kind in ("young", "pascal"):
        return sum(label)
    if kind == "solvable":
        return label.level
    return len(label)


def cmd_character_eval(args) -> str:
    theta = _theta(args)
    rho = tuple(sorted(_ints(args.cycles), reverse=True))
    value = thoma_character(theta, rho)
    if args.emit == "json":
        return _dump({"alpha": [q(a) for a in theta.alpha], "beta": [q(b) for b in theta.beta], "cycles": list(rho), **_num(value, True)})
    if args.float:
        return f"{q(value)} {float(value)!r}\n"
    return q(value) + "\n"


def cmd_character_table(args) -> str:
    lams, rhos, table = character_table(args.n)
    if args.emit == "json":
        return _dump({"n": args.n, "irreducibles": [list(l) for l in lams], "classes": [list(r) for r in rhos], "values": table})
    rows = [["lambda"] + [P.encode(r) for r in rhos]]
    rows += [[P.encode(lam)] + row for lam, row in zip(lams, table)]
    return _csv(rows)


def cmd_measure_thoma(args) -> str:
    theta = _theta(args)
    mu = thoma_measure(theta, args.levels)
    rows = []
    for n in range(args.levels + 1):
        masses = mu.level_distribution(n)
        for i, lam in enumerate(mu.graph.labels(n)):
            rows.append((n, lam, mu.weights[n][i], masses[i]))
    if args.emit == "json":
        entries = []
        for n, lam, w, m in rows:
            e = {"level": n, "vertex": P.encode(lam), "path_weight": q(w), "vertex_mass": q(m)}
            if args.float:
                e["vertex_mass_decimal"] = float(m)
            entries.append(e)
        return _dump({"alpha": [q(a) for a in theta.alpha], "beta": [q(b) for b in theta.beta], "weights": entries})
    header = ["level", "vertex", "path_weight", "vertex_mass"] + (["vertex_mass_decimal"] if args.float else [])
    out = [header]
    for n, lam, w, m in rows:
        out.append([n, P.encode(lam), q(w), q(m)] + ([repr(float(m))] if args.float else []))
    return _csv(out)


def cmd_measure_compare(args) -> str:
    theta = _theta(args)
    Ns = _ints(args.N)
    result = ergodic_method_compare(theta, Ns, args.cylinder_level)
    points = [{"N": N, "shape": P.encode(shape_sequence(theta, N)), "distance": q(d)} for N, d in result]
    if args.float:
        for p, (_, d) in zip(points, result):
            p["distance_decimal"] = float(d)
    if args.emit == "json":
        return _dump({"alpha": [q(a) for a in theta.alpha], "beta": [q(b) for b in theta.beta], "cylinder_level": args.cylinder_level, "points": points})
    header = ["N", "shape", "distance"] + (["distance_decimal"] if args.float else [])
    return _csv([header] + [[p[h] if h != "distance_decimal" else repr(p[h]) for h in header] for p in points])


def cmd_measure_sample(args) -> str:
    theta = _theta(args)
    mu = plancherel_measure(args.length) if not theta.alpha and not theta.beta else thoma_measure(theta, args.length)
    paths = sample_paths(mu, args.length, args.count, args.seed)
    shapes = [[P.encode(mu.graph.labels(n + 1)[j]) for n, (j, _) in enumerate(p.steps)] for p in paths]
    if args.emit == "json":
        return _dump({"seed": args.seed, "length": args.length, "paths": shapes})
    return "".join(" ".join(s) + "\n" for s in shapes)


def cmd_adic_orbit(args) -> str:
    graph = _build_graph(args.graph, args.level, args.d)
    label = _parse_label(args.graph, args.vertex)
    v = graph.vertex(args.level, label)
    order = default_order(graph)
    orbit = []
    for path in adic_orbit(order, v):
        orbit.append([_label(graph, graph.labels(n + 1)[j]) + ("" if c == 0 else f"#{c}") for n, (j, c) in enumerate(path.steps)])
    if args.emit == "json":
        return _dump({"graph": args.graph, "vertex": _label(graph, label), "level": args.level, "orbit": orbit})
    return "".join(" ".join(p) + "\n" for p in orbit)


def cmd_adic_check(args) -> str:
    graph = _build_graph(args.graph, args.level, args.d)
    order = default_order(graph)
    report = orbit_partition_check(graph, order, args.level)
    doc = {
        "graph": args.graph,
        "level": args.level,
        "class_sizes": report.class_sizes,
        "verified": report.verified,
        "violations": report.violations,
    }
    if args.measure != "none":
        if args.measure == "plancherel" and args.graph == "young":
            mu = plancherel_measure(args.level)
        elif args.measure == "bernoulli" and args.graph in ("pascal", "solvable"):
            mu = bernoulli_measure(graph)
        else:
            raise InputError(f"measure {args.measure!r} is not defined on the {args.graph} graph")
        doc["measure"] = args.measure
        doc["discrepancy"] = q(invariance_check(mu, order, args.level))
    if args.emit == "json":
        return _dump(doc)
    lines = [f"level {args.level}: classes {report.class_sizes}, verified {report.verified}"]
    lines += report.violations
    if "discrepancy" in doc:
        lines.append(f"{args.measure} discrepancy {doc['discrepancy']}")
    return "\n".join(lines) + "\n"


def _poulsen_target(name: str, k: int):
    graph = solvable_group_graph(max(k, 1))
    if name == "bernoulli":
        return bernoulli_measure(graph)
    if name.startswith("bernoulli:"):
        return bernoulli_measure(graph, Fraction(name.split(":", 1)[1]))
    if name == "zeros":
        return zero_point_mass(graph)
    if name.startswith("pattern:"):
        return finite_orbit_measure(parse_pattern(name.split(":", 1)[1]))
    raise InputError(f"unknown target {name!r}; use bernoulli, bernoulli:p, zeros or pattern:BITS")


def cmd_diagnose_poulsen(args) -> str:
    eps = Fraction(args.eps)
    target = _poulsen_target(args.target, args.cylinder_level)
    w = poulsen_witness(target, args.cylinder_level, eps, args.max_depth, args.mode)
    doc = {
        "target": args.target,
        "cylinder_level": args.cylinder_level,
        "eps": q(eps),
        "mode": w.mode,
        "depth": w.depth,
        "distance": q(w.distance),
        "achieved": w.achieved,
        "invariant": w.measure.is_invariant(),
        "orbits": [{"representative": "".join(map(str, rep)), "mass": q(m)} for rep, m in w.measure.orbits()],
    }
    if args.float:
        doc["distance_decimal"] = float(w.distance)
    if args.emit == "json":
        return _dump(doc)
    lines = [f"{w.mode} witness at depth {w.depth}: distance {q(w.distance)} ({'within' if w.achieved else 'NOT within'} eps {q(eps)})"]
    lines += [f"  orbit {o['representative']} mass {o['mass']}" for o in doc["orbits"]]
    return "\n".join(lines) + "\n"


def cmd_diagnose_separation(args) -> str:
    alphas = args.alphas.split(";")
    betas = args.betas.split(";") if args.betas else [""] * len(alphas)
    if len(betas) != len(alphas):
        raise InputError("--betas must list as many entries as --alphas")
    thetas = [ThomaParameter.parse(a, b) for a, b in zip(alphas, betas)]
    matrix = boundary_separation(thetas, args.level)
    names = [str(t) for t in thetas]
    if args.emit == "json":
        return _dump({"level": args.level, "parameters": names, "distances": [[q(x) for x in row] for row in matrix]})
    rows = [["theta"] + names] + [[name] + [q(x) for x in row] for name, row in zip(names, matrix)]
    return _csv(rows)


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bratteli", description="Exact computations on Bratteli diagrams, central measures and adic orbits.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def emit(p, default="text", choices=EMITS):
        p.add_argument("--emit", default=default, choices=choices)
        p.add_argument("--float", action="store_true", help="add decimal columns")

    def graph_args(p, flag="--kind"):
        p.add_argument(flag, required=True, choices=["young", "pascal", "solvable", "multidim"])
        p.add_argument("--d", type=int, default=2, help="dimension for multidim graphs")

    def theta_args(p):
        p.add_argument("--alpha", default="")
        p.add_argument("--beta", default="")

    g = sub.add_parser("graph").add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = g.add_parser("build")
    graph_args(p)
    p.add_argument("--levels", type=int, required=True)
    emit(p, "json", ("json", "dot", "text"))
    p.set_defaults(func=cmd_graph_build)
    p = g.add_parser("info")
    graph_args(p)
    p.add_argument("--levels", type=int, required=True)
    emit(p, "text", ("json", "csv", "text"))
    p.set_defaults(func=cmd_graph_info)
    p = g.add_parser("export")
    graph_args(p)
    p.add_argument("--levels", type=int, required=True)
    p.add_argument("--format", default="json", choices=["json", "dot"])
    p.add_argument("--emit", default="text", choices=EMITS)
    p.set_defaults(func=cmd_graph_export, float=False)

    p = sub.add_parser("dim")
    graph_args(p)
    p.add_argument("--vertex", required=True, help="e.g. 2,1 (young), 2,2 (pascal), 0110 (solvable)")
    p.add_argument("--source", help="count paths from this vertex instead of the root")
    emit(p, "text", ("json", "text"))
    p.set_defaults(func=cmd_dim)

    c = sub.add_parser("character").add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = c.add_parser("eval")
    theta_args(p)
    p.add_argument("--cycles", required=True, help="cycle type, e.g. 2,2,1")
    emit(p, "text", ("json", "text"))
    p.set_defaults(func=cmd_character_eval)
    p = c.add_parser("table")
    p.add_argument("--n", type=int, required=True)
    emit(p, "csv", ("json", "csv"))
    p.set_defaults(func=cmd_character_table)

    m = sub.add_parser("measure").add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = m.add_parser("thoma")
    theta_args(p)
    p.add_argument("--levels", type=int, default=6)
    emit(p, "csv", ("json", "csv"))
    p.set_defaults(func=cmd_measure_thoma)
    p = m.add_parser("compare")
    theta_args(p)
    p.add_argument("--N", required=True, help="comma-separated sizes, e.g. 8,12,16")
    p.add_argument("--cylinder-level", type=int, default=2)
    emit(p, "json", ("json", "csv"))
    p.set_defaults(func=cmd_measure_compare)
    p = m.add_parser("sample")
    theta_args(p)
    p.add_argument("--length", type=int, default=6)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    emit(p, "text", ("json", "text"))
    p.set_defaults(func=cmd_measure_sample)

    a = sub.add_parser("adic").add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = a.add_parser("orbit")
    graph_args(p, "--graph")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--vertex", required=True)
    emit(p, "text", ("json", "text"))
    p.set_defaults(func=cmd_adic_orbit)
    p = a.add_parser("check")
    graph_args(p, "--graph")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--measure", default="none", choices=["none", "plancherel", "bernoulli"])
    emit(p, "text", ("json", "text"))
    p.set_defaults(func=cmd_adic_check)

    d = sub.add_parser("diagnose").add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = d.add_parser("poulsen")
    p.add_argument("--target", default="bernoulli")
    p.add_argument("--cylinder-level", type=int, default=1)
    p.add_argument("--eps", default="0")
    p.add_argument("--max-depth", type=int, default=4)
    p.add_argument("--mode", default="mixture", choices=["ergodic", "mixture"])
    emit(p, "text", ("json", "text"))
    p.set_defaults(func=cmd_diagnose_poulsen)
    p = d.add_parser("separation")
    p.add_argument("--alphas", required=True, help='semicolon-separated alpha lists, e.g. "1;1/2,1/2;0"')
    p.add_argument("--betas", default="", help="semicolon-separated beta lists, same count as --alphas")
    p.add_argument("--level", type=int, default=4)
    emit(p, "csv", ("json", "csv"))
    p.set_defaults(func=cmd_diagnose_separation)
    return parser


def _wants_json(argv) -> bool:
    argv = list(argv)
    for i, a in enumerate(argv):
        if a == "--emit" and i + 1 < len(argv) and argv[i + 1] == "json":
            return True
        if a == "--emit=json":
            return True
    return False


def run(argv=None, stdout=None, stderr=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        text = args.func(args)
    except InputError as exc:
        _report(stderr, "input", exc, _wants_json(argv))
        return 2
    except ResourceError as exc:
        _report(stderr, "resource", exc, _wants_json(argv))
        return 3
    except (ValueError, ZeroDivisionError) as exc:
        _report(stderr, "input", exc, _wants_json(argv))
        return 2
    stdout.write(text)
    return 0


def _report(stream, kind: str, exc: Exception, as_json: bool) -> None:
    if as_json:
        stream.write(_dump({"error": {"type": kind, "message": str(exc)}}))
    else:
        stream.write(f"bratteli: {kind} error: {exc}\n")


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
