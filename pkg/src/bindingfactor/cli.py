"""Command-line front end.

Every graph-level subcommand reads graph6 lines (a file, ``-`` / stdin, or
``--gen SPEC``) and prints one JSON certificate per graph.  Exit status:
0 computed, 1 negative result with a certificate, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from typing import Any, Callable, Iterable

from .binding import (
    BindingValue,
    Outcome,
    beta_k,
    beta_k_bipartite,
    bind_bipartite,
    bind_classical,
)
from .factors import (
    BarrierCertificate,
    OrderedPartition,
    check_barrier_properties,
    delta,
    find_k_factor,
    find_maxmin_barrier,
)
from .graph import (
    CapacityError,
    Graph,
    Graph6Error,
    VertexSet,
    bipartition,
    generate,
    lambda_k,
    parse_family,
    parse_graph6,
    read_graph6_lines,
    write_graph6,
)
from .harness import ClaimId, GraphSource, ProbeId, probe_conjecture, verify_claim
from .matching import (
    Matching,
    MatchingFamily,
    MatchingPipelineError,
    disjoint_near_perfect_matchings,
    disjoint_x_covering_matchings,
    hypo_tutte_violator,
    hypomatchable,
    lebensold_value,
    max_matching,
    tutte_q,
    tutte_witness,
)
from .properties import (
    maximum_independent_set,
    minimum_separator,
    toughness_certificate,
)

SCHEMA = "bindingfactor/1"
EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# --------------------------------------------------------------------------
# serialisation


def fmt_rational(q) -> str:
    if isinstance(q, float) and math.isinf(q):
        return "inf"
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def certificate(kind: str, payload: dict, g: Graph | None, parameters: dict) -> dict:
    return {
        "schema": SCHEMA,
        "kind": kind,
        "payload": payload,
        "input_graph6": None if g is None else write_graph6(g),
        "parameters": parameters,
    }


def _edges(m) -> list[list[int]]:
    return [list(e) for e in m]


def binding_payload(b: BindingValue, g: Graph, k: int | None) -> dict:
    p: dict[str, Any] = {"outcome": b.outcome.name, "witness": None, "value": None}
    if b.outcome is Outcome.DEFINED_ZERO:
        p.update(value="0/1", convention="size")
    elif b.outcome is Outcome.VALUE:
        p["value"] = fmt_rational(b.value)
        if b.witness is not None:
            p["witness"] = b.witness.to_list()
            if k is not None:
                p["neighborhood"] = lambda_k(g, b.witness, k).to_list()
    return p


# --------------------------------------------------------------------------
# computations: each returns (kind, payload, exit code)


def _side(g: Graph, text: str | None) -> VertexSet:
    if text is not None:
        try:
            return VertexSet(int(t) for t in text.split(",") if t.strip())
        except ValueError:
            raise UsageError(f"--x expects comma-separated vertices, got {text!r}")
    bp = bipartition(g)
    if bp is None:
        raise UsageError("graph is not bipartite; pass --x explicitly")
    return bp[0]


def run_beta(g, p):
    return "BINDING", binding_payload(beta_k(g, p["k"]), g, p["k"]), EXIT_OK


def run_beta_bip(g, p):
    x = _side(g, p.get("x"))
    p["x"] = ",".join(map(str, x))
    return "BINDING", binding_payload(beta_k_bipartite(g, x, p["k"]), g, p["k"]), EXIT_OK


def run_bind(g, p):
    return "BINDING", binding_payload(bind_classical(g), g, None), EXIT_OK


def run_bind_bip(g, p):
    x = _side(g, p.get("x"))
    p["x"] = ",".join(map(str, x))
    return "BINDING", binding_payload(bind_bipartite(g, x, g.vertices() - x), g, None), EXIT_OK


def run_matching(g, p):
    m = max_matching(g)
    if m.is_perfect(g.n):
        return "MATCHINGS", {"purpose": "perfect", "matchings": [_edges(m.edges)]}, EXIT_OK
    w = tutte_witness(g)
    return "TUTTE_WITNESS", {
        "condition": "perfect",
        "u": w.u.to_list(),
        "odd_components": w.odd_count,
        "maximum_matching": _edges(m.edges),
    }, EXIT_NEGATIVE


def run_hypomatchable(g, p):
    h = hypomatchable(g)
    if h:
        return "MATCHINGS", {"purpose": "hypomatchable",
                             "matchings": [_edges(m.edges) for m in h.matchings]}, EXIT_OK
    payload = {"condition": "hypomatchable", "vertex": h.vertex, "u": None, "odd_components": None}
    if g.n % 2 and g.n:
        w = hypo_tutte_violator(g)
        payload.update(u=w.u.to_list(), odd_components=w.odd_count)
    return "TUTTE_WITNESS", payload, EXIT_NEGATIVE


def run_disjoint(g, p):
    try:
        fam = disjoint_near_perfect_matchings(g, p["t"])
    except MatchingPipelineError as exc:
        w = tutte_witness(exc.residual) if exc.residual.n % 2 == 0 else hypo_tutte_violator(exc.residual)
        return "TUTTE_WITNESS", {
            "condition": "pipeline",
            "step": exc.step,
            "found": [_edges(m.edges) for m in exc.found.matchings],
            "residual_graph6": write_graph6(exc.residual),
            "u": None if w is None else w.u.to_list(),
            "odd_components": None if w is None else w.odd_count,
        }, EXIT_NEGATIVE
    return "MATCHINGS", {"purpose": "near-perfect",
                         "matchings": [_edges(m.edges) for m in fam.matchings]}, EXIT_OK


def run_lebensold(g, p):
    x = _side(g, p.get("x"))
    p["x"] = ",".join(map(str, x))
    k = p["k"]
    res = disjoint_x_covering_matchings(g, x, k)
    if isinstance(res, MatchingFamily):
        return "MATCHINGS", {"purpose": "x-covering",
                             "matchings": [_edges(m.edges) for m in res.matchings]}, EXIT_OK
    return "TUTTE_WITNESS", {
        "condition": "lebensold",
        "s": res.to_list(),
        "lebensold_value": lebensold_value(g, x, res, k),
        "required": k * len(res),
    }, EXIT_NEGATIVE


def barrier_payload(g: Graph, b: BarrierCertificate | None) -> dict:
    if b is None:
        return {"found": False}
    report = check_barrier_properties(g, b)
    return {
        "found": True,
        "s": b.partition.s.to_list(),
        "t": b.partition.t.to_list(),
        "u": b.partition.u.to_list(),
        "deficiency": b.deficiency,
        "odd_components": [c.to_list() for c in b.odd_components],
        "maxmin": b.maxmin,
        "properties": {"i": report.i, "ii": report.ii, "iii": report.iii, "iv": report.iv},
    }


def run_factor(g, p):
    f = find_k_factor(g, p["k"])
    if f is not None:
        return "FACTOR", {"edges": _edges(f.edges)}, EXIT_OK
    return "BARRIER", barrier_payload(g, find_maxmin_barrier(g, p["k"])), EXIT_NEGATIVE


def run_barrier(g, p):
    b = find_maxmin_barrier(g, p["k"])
    return "BARRIER", barrier_payload(g, b), EXIT_OK if b is None else EXIT_NEGATIVE


def run_tough(g, p):
    value, s = toughness_certificate(g)
    return "PARAMETER", {"name": "toughness", "value": fmt_rational(value),
                         "witness": None if s is None else s.to_list()}, EXIT_OK


def run_alpha(g, p):
    s = maximum_independent_set(g)
    return "PARAMETER", {"name": "independence_number", "value": len(s), "witness": s.to_list()}, EXIT_OK


def run_kappa(g, p):
    s = minimum_separator(g)
    return "PARAMETER", {"name": "vertex_connectivity", "value": len(s), "witness": s.to_list()}, EXIT_OK


GRAPH_COMMANDS: dict[str, tuple[Callable, str]] = {
    "beta": (run_beta, "k-th binding number beta^k(G)"),
    "beta-bip": (run_beta_bip, "bipartite binding number beta^k(G, X)"),
    "bind": (run_bind, "classical binding number"),
    "bind-bip": (run_bind_bip, "bipartite binding number bind'(G)"),
    "matching": (run_matching, "maximum matching or a Tutte witness"),
    "hypomatchable": (run_hypomatchable, "hypomatchability test"),
    "disjoint-matchings": (run_disjoint, "t disjoint (near-)perfect matchings"),
    "lebensold": (run_lebensold, "k disjoint X-covering matchings or a Lebensold violator"),
    "factor": (run_factor, "k-factor or maxmin barrier"),
    "barrier": (run_barrier, "maxmin barrier search"),
    "tough": (run_tough, "toughness"),
    "alpha": (run_alpha, "independence number"),
    "kappa": (run_kappa, "vertex connectivity"),
}


def compute(command: str, g: Graph, parameters: dict) -> tuple[dict, int]:
    params = dict(parameters)
    kind, payload, code = GRAPH_COMMANDS[command][0](g, params)
    params["command"] = command
    return certificate(kind, payload, g, params), code


def plain_value(cert: dict) -> str:
    kind, p = cert["kind"], cert["payload"]
    if kind in ("BINDING", "PARAMETER"):
        return str(p["value"]) if p["value"] is not None else "none"
    if kind == "MATCHINGS":
        return "yes"
    if kind == "FACTOR":
        return "yes"
    if kind == "TUTTE_WITNESS":
        return "no"
    if kind == "BARRIER":
        return str(p["deficiency"]) if p["found"] else "none"
    if kind == "REPORT":
        return str(p["counterexample_count"])
    return dumps(p)


# --------------------------------------------------------------------------
# certificate re-checking


def _matching_ok(g: Graph, edges) -> Matching:
    m = Matching(tuple(tuple(e) for e in edges))
    for u, v in m.edges:
        if not g.has_edge(u, v):
            raise AssertionError(f"({u}, {v}) is not an edge")
    return m


def _check_binding(g, cert):
    p, params = cert["payload"], cert["parameters"]
    redo, _ = compute(params["command"], g, {k: v for k, v in params.items() if k != "command"})
    if redo["payload"] != p:
        raise AssertionError("recomputed binding value differs")
    k = params.get("k")
    if p["witness"] is not None and k is not None:
        w = VertexSet(p["witness"])
        if Fraction(len(lambda_k(g, w, k)), len(w)) != Fraction(p["value"]):
            raise AssertionError("witness ratio does not match the value")


def _check_matchings(g, cert):
    p, params = cert["payload"], cert["parameters"]
    ms = [_matching_ok(g, e) for e in p["matchings"]]
    purpose = p["purpose"]
    if purpose in ("near-perfect", "x-covering"):
        MatchingFamily(tuple(ms))  # raises unless pairwise disjoint
    if purpose == "perfect" and not all(m.is_perfect(g.n) for m in ms):
        raise AssertionError("matching is not perfect")
    if purpose == "near-perfect":
        if len(ms) != params["t"] or any(2 * len(m) != g.n - g.n % 2 for m in ms):
            raise AssertionError("matchings are not (near-)perfect or wrong count")
    if purpose == "hypomatchable":
        if len(ms) != g.n or any(m.covered != g.vertices() - {v} for v, m in enumerate(ms)):
            raise AssertionError("matching i must cover every vertex but i")
    if purpose == "x-covering":
        x = VertexSet(int(t) for t in params["x"].split(",") if t)
        if len(ms) != params["k"] or any(not x <= m.covered for m in ms):
            raise AssertionError("matchings do not all cover X")


def _check_tutte(g, cert):
    p, params = cert["payload"], cert["parameters"]
    cond = p["condition"]
    if cond == "perfect":
        if tutte_q(g, p["u"]) <= len(p["u"]):
            raise AssertionError("U does not violate the Tutte condition")
    elif cond == "hypomatchable":
        if p["u"] is None:
            if g.n % 2:
                raise AssertionError("odd graph without a violating set")
        elif not p["u"] or tutte_q(g, p["u"]) <= len(p["u"]) - 1:
            raise AssertionError("U does not violate q(U) <= |U| - 1")
    elif cond == "lebensold":
        x = VertexSet(int(t) for t in params["x"].split(",") if t)
        s = VertexSet(p["s"])
        if not s <= x or lebensold_value(g, x, s, params["k"]) >= params["k"] * len(s):
            raise AssertionError("S does not violate the Lebensold condition")
    elif cond == "pipeline":
        redo, _ = compute("disjoint-matchings", g, {"t": params["t"]})
        if redo["payload"] != p:
            raise AssertionError("pipeline rerun differs")
    else:
        raise AssertionError(f"unknown condition {cond!r}")


def _check_factor(g, cert):
    k = cert["parameters"]["k"]
    count = [0] * g.n
    for u, v in cert["payload"]["edges"]:
        if not g.has_edge(u, v):
            raise AssertionError(f"({u}, {v}) is not an edge")
        count[u] += 1
        count[v] += 1
    if any(c != k for c in count):
        raise AssertionError("subgraph is not k-regular")


def _check_barrier(g, cert):
    p, k = cert["payload"], cert["parameters"]["k"]
    if not p["found"]:
        if find_maxmin_barrier(g, k) is not None:
            raise AssertionError("a barrier exists")
        return
    part = OrderedPartition.of(g.n, p["s"], p["t"])
    if part.u.to_list() != p["u"]:
        raise AssertionError("U is not the complement of S and T")
    d = delta(g, part, k)
    if d != p["deficiency"] or d >= 0:
        raise AssertionError("deficiency mismatch or not negative")
    if p["maxmin"] and barrier_payload(g, find_maxmin_barrier(g, k)) != p:
        raise AssertionError("not the maxmin barrier")


def _check_parameter(g, cert):
    command = cert["parameters"]["command"]
    redo, _ = compute(command, g, {})
    if redo["payload"] != cert["payload"]:
        raise AssertionError("recomputed parameter differs")


def _check_report(_g, cert):
    params = cert["parameters"]
    redo = _report(params)
    drop = ("elapsed",)
    a = {k: v for k, v in cert["payload"].items() if k not in drop}
    b = {k: v for k, v in redo.to_dict().items() if k not in drop}
    if a != b:
        raise AssertionError("rerun report differs")


CHECKERS = {
    "BINDING": _check_binding,
    "MATCHINGS": _check_matchings,
    "TUTTE_WITNESS": _check_tutte,
    "FACTOR": _check_factor,
    "BARRIER": _check_barrier,
    "PARAMETER": _check_parameter,
    "REPORT": _check_report,
}


def verify_certificate(cert: dict) -> list[str]:
    """Problems found when re-deriving ``cert``; empty means it checks."""
    if cert.get("schema") != SCHEMA:
        return [f"unsupported schema {cert.get('schema')!r}"]
    checker = CHECKERS.get(cert.get("kind"))
    if checker is None:
        return [f"unknown kind {cert.get('kind')!r}"]
    g6 = cert.get("input_graph6")
    try:
        g = None if g6 is None else parse_graph6(g6)
        checker(g, cert)
    except (AssertionError, ValueError, KeyError, TypeError) as exc:
        return [str(exc) or type(exc).__name__]
    return []


# --------------------------------------------------------------------------
# harness commands


def _source(params: dict) -> GraphSource:
    if params.get("internal") is not None:
        return GraphSource.internal(params["internal"])
    if params.get("stream") is not None:
        return GraphSource.stream(params["stream"])
    if params.get("family"):
        return GraphSource.family(params["family"])
    raise UsageError("choose a source: --internal N, --stream PATH or --family SPEC")


def _report(params: dict):
    source = _source(params)
    limit = params.get("max_counterexamples")
    if params["command"] == "verify":
        return verify_claim(params["claim"], source, params["k"], jobs=params.get("jobs", 1),
                            max_counterexamples=limit)
    probe_params = {"k": params["k"]}
    if params.get("t") is not None:
        probe_params["t"] = params["t"]
    return probe_conjecture(params["claim"], source, probe_params, jobs=params.get("jobs", 1),
                            max_counterexamples=limit)


# --------------------------------------------------------------------------
# argument handling


def _read_graphs(args) -> Iterable[Graph]:
    if args.gen is not None:
        return [generate(parse_family(args.gen))]
    if args.input in (None, "-"):
        return list(read_graph6_lines(sys.stdin))
    with open(args.input) as fh:
        return list(read_graph6_lines(fh))


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be a nonnegative integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bindingfactor",
        description="Binding numbers, factors and matchings with checkable certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, (_, help_text) in GRAPH_COMMANDS.items():
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("input", nargs="?", help="graph6 file, '-' for stdin (default)")
        sp.add_argument("--gen", metavar="SPEC", help="generate the graph, e.g. split_tight:8,2")
        sp.add_argument("--plain", action="store_true", help="print only the headline value")
        if name in ("beta", "beta-bip", "lebensold", "factor", "barrier"):
            sp.add_argument("--k", type=_positive, required=True)
        if name in ("beta-bip", "bind-bip", "lebensold"):
            sp.add_argument("--x", help="comma-separated side X (default: a bipartition side)")
        if name == "disjoint-matchings":
            sp.add_argument("--t", type=_nonneg, required=True, help="number of matchings")

    gen = sub.add_parser("gen", help="print the graph6 line of a generated graph")
    gen.add_argument("spec", help="family spec, e.g. petersen or complete_bipartite(3,3)")

    for name, choices in (("verify", ClaimId), ("probe", ProbeId)):
        sp = sub.add_parser(name, help=f"{name} a claim over a graph source")
        sp.add_argument("claim", choices=[c.value for c in choices])
        src = sp.add_mutually_exclusive_group(required=True)
        src.add_argument("--internal", type=_nonneg, metavar="N", help="all labelled graphs on N <= 7 vertices")
        src.add_argument("--stream", metavar="PATH", help="graph6 file")
        src.add_argument("--family", nargs="+", metavar="SPEC", help="generated graphs")
        sp.add_argument("--k", type=_positive, nargs="+", default=[2])
        if name == "probe":
            sp.add_argument("--t", type=_positive, help="factor degree for FACTOR_SPECTRUM")
        sp.add_argument("--jobs", type=_positive, default=1)
        sp.add_argument("--max-counterexamples", type=_nonneg, default=100)
        sp.add_argument("--plain", action="store_true")
        sp.add_argument("--no-elapsed", action="store_true", help="omit timing for byte-stable output")

    vc = sub.add_parser("verify-cert", help="re-check certificates (JSON lines)")
    vc.add_argument("input", nargs="?", help="certificate file, '-' for stdin (default)")
    return parser


def _emit(cert: dict, plain: bool, out) -> None:
    print(plain_value(cert) if plain else dumps(cert), file=out)


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _dispatch(args, out)
    except (UsageError, Graph6Error, CapacityError, ValueError, OSError) as exc:
        print(f"bindingfactor: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def _dispatch(args, out) -> int:
    if args.command == "gen":
        print(write_graph6(generate(parse_family(args.spec))), file=out)
        return EXIT_OK

    if args.command in ("verify", "probe"):
        params = {
            "command": args.command,
            "claim": args.claim,
            "internal": args.internal,
            "stream": args.stream,
            "family": args.family,
            "k": args.k,
            "max_counterexamples": args.max_counterexamples,
        }
        if args.command == "probe":
            params["t"] = args.t
        report = _report({**params, "jobs": args.jobs})
        payload = report.to_dict(include_elapsed=not args.no_elapsed)
        cert = certificate("REPORT", payload, None, {k: v for k, v in params.items() if v is not None})
        _emit(cert, args.plain, out)
        return EXIT_OK if report.verified else EXIT_NEGATIVE

    if args.command == "verify-cert":
        stream = sys.stdin if args.input in (None, "-") else open(args.input)
        failures = 0
        with stream:
            for lineno, line in enumerate(stream, 1):
                if not line.strip():
                    continue
                try:
                    cert = json.loads(line)
                except json.JSONDecodeError as exc:
                    raise UsageError(f"line {lineno}: not JSON ({exc.msg})")
                problems = verify_certificate(cert)
                failures += bool(problems)
                print(dumps({"line": lineno, "kind": cert.get("kind"), "ok": not problems,
                             "problems": problems}), file=out)
        return EXIT_OK if not failures else EXIT_NEGATIVE

    parameters = {}
    for name in ("k", "t", "x"):
        value = getattr(args, name, None)
        if value is not None:
            parameters[name] = value
    worst = EXIT_OK
    for g in _read_graphs(args):
        cert, code = compute(args.command, g, parameters)
        _emit(cert, args.plain, out)
        worst = max(worst, code)
    return worst


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
