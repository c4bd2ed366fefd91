"""Command-line front end.

Graph files hold a header line ``n m`` followed by ``m`` edge lines, each
``u > v`` for an arc ``u -> v`` or ``u - v`` for an undirected edge.
Lines starting with ``#`` are comments. Exit codes: 0 success, 1 a verified
claim failed, 2 parse or usage error, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys

from .charpoly import InvariantViolation, coeffs_combinatorial, coeffs_exact, coeffs_unicyclic
from .energy import DEFAULT_TOL, energy_coulson, energy_report, energy_spectral, spectrum
from .extremal import search_extremal, verify_claims
from .graph import Graph, is_unicyclic, make_family
from .orient import MINUS, PLUS, OrientedGraph, orient_by_index, orient_unicyclic

EXIT_OK, EXIT_CLAIM, EXIT_USAGE, EXIT_INVARIANT = 0, 1, 2, 3

_EDGE_LINE = re.compile(r"^\s*(\d+)\s*([>-])\s*(\d+)\s*$")


class GraphFileError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def parse_graph_file(text):
    """Parse graph-file text into an :class:`OrientedGraph`, or a :class:`Graph`
    when any edge is undirected."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    lines = [(i, raw.strip()) for i, raw in enumerate(text.splitlines(), 1)]
    lines = [(i, s) for i, s in lines if s and not s.startswith("#")]
    if not lines:
        raise GraphFileError(1, "missing header 'n m'")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise GraphFileError(lineno, f"malformed header {header!r}, expected 'n m'")
    n, m = int(parts[0]), int(parts[1])
    body = lines[1:]
    if len(body) != m:
        last = body[-1][0] if body else lineno
        raise GraphFileError(last, f"header declares {m} edges, found {len(body)}")
    seen = {}
    arcs = []
    directed = True
    for lineno, s in body:
        match = _EDGE_LINE.match(s)
        if not match:
            raise GraphFileError(lineno, f"malformed edge {s!r}, expected 'u > v' or 'u - v'")
        u, kind, v = int(match.group(1)), match.group(2), int(match.group(3))
        for x in (u, v):
            if x >= n:
                raise GraphFileError(lineno, f"vertex {x} out of range 0..{n - 1}")
        if u == v:
            raise GraphFileError(lineno, f"self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            prev_kind, prev = seen[key]
            if prev_kind != kind or (kind == ">" and prev != (u, v)):
                raise GraphFileError(lineno, f"conflicting direction for edge {key}")
            raise GraphFileError(lineno, f"duplicate edge {key}")
        seen[key] = (kind, (u, v))
        arcs.append((u, v))
        directed = directed and kind == ">"
    if directed:
        return OrientedGraph.from_arcs(n, arcs)
    return Graph(n, tuple(arcs))


def format_graph_file(g) -> str:
    if isinstance(g, OrientedGraph):
        lines = [f"{t} > {h}" for t, h in g.arcs]
        n = g.n
    else:
        lines = [f"{u} - {v}" for u, v in g.edges]
        n = g.n
    return "\n".join([f"{n} {len(lines)}"] + lines) + "\n"


def _real(x: float) -> float:
    return float(f"{x:.9g}")


def _fmt(x: float) -> str:
    return f"{x:.9g}"


def _emit(obj, rows, header, fmt, out):
    if fmt == "json":
        out.write(json.dumps(obj) + "\n")
        return
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    out.write(buf.getvalue())


def _load_oriented(args) -> OrientedGraph:
    try:
        with open(args.input, "rb") as fh:
            g = parse_graph_file(fh.read())
    except OSError as exc:
        raise GraphFileError(0, f"cannot read {args.input}: {exc.strerror}") from exc
    if isinstance(g, OrientedGraph):
        return g
    if getattr(args, "sign", None) and is_unicyclic(g):
        return orient_unicyclic(g, args.sign)
    raise ValueError("graph has undirected edges; pass --sign for a unicyclic graph or give every edge a direction")


def cmd_energy(args, out):
    og = _load_oriented(args)
    if args.method == "both":
        rep = energy_report(og, args.tol)
        obj = {"spectral": _real(rep.spectral), "coulson": _real(rep.coulson), "agreement": rep.agreement}
        _emit(obj, [[_fmt(rep.spectral), _fmt(rep.coulson), str(rep.agreement).lower()]],
              ["spectral", "coulson", "agreement"], args.format, out)
        return EXIT_OK if rep.agreement else EXIT_INVARIANT
    value = energy_spectral(og) if args.method == "spectral" else energy_coulson(og, args.tol)
    _emit({args.method: _real(value)}, [[_fmt(value)]], [args.method], args.format, out)
    return EXIT_OK


def cmd_spectrum(args, out):
    og = _load_oriented(args)
    mags = spectrum(og)
    _emit({"magnitudes": [_real(x) for x in mags]}, [[i, _fmt(x)] for i, x in enumerate(mags)],
          ["index", "magnitude"], args.format, out)
    return EXIT_OK


_ENGINES = {"combinatorial": coeffs_combinatorial, "unicyclic": coeffs_unicyclic, "exact": coeffs_exact}


def cmd_charpoly(args, out):
    og = _load_oriented(args)
    if args.engine == "all":
        names = [e for e in ("exact", "combinatorial", "unicyclic") if e != "unicyclic" or is_unicyclic(og.base)]
    else:
        names = [args.engine]
    results = {name: list(_ENGINES[name](og).coeffs) for name in names}
    agreement = all(v == results[names[0]] for v in results.values())
    obj = {"order": og.n, "engines": results}
    if len(names) > 1:
        obj["agreement"] = agreement
    rows = [[name, " ".join(map(str, v))] for name, v in results.items()]
    _emit(obj, rows, ["engine", "coeffs"], args.format, out)
    return EXIT_OK if agreement else EXIT_INVARIANT


def cmd_family(args, out):
    G = make_family(args.family, args.n, args.girth)
    og = orient_unicyclic(G, args.sign) if is_unicyclic(G) else orient_by_index(G)
    coeffs = coeffs_exact(og).coeffs
    energy = energy_spectral(og)
    obj = {
        "family": args.family,
        "n": args.n,
        "girth": args.girth,
        "sign": args.sign if is_unicyclic(G) else None,
        "arcs": [list(a) for a in og.arcs],
        "coeffs": list(coeffs),
        "energy": _real(energy),
    }
    row = [args.family, args.n, args.girth if args.girth is not None else "", obj["sign"] or "",
           " ".join(map(str, coeffs)), _fmt(energy), " ".join(f"{t}>{h}" for t, h in og.arcs)]
    _emit(obj, [row], ["family", "n", "girth", "sign", "coeffs", "energy", "arcs"], args.format, out)
    return EXIT_OK


def cmd_search(args, out):
    records = search_extremal(args.n, args.objective, args.top, args.dedupe)
    obj = {
        "n": args.n,
        "objective": args.objective,
        "records": [
            {
                "rank": r.rank,
                "label": r.label,
                "sign": r.sign,
                "girth": r.girth,
                "energy": _real(r.energy),
                "coeffs": list(r.coeffs.coeffs),
                "edges": [list(e) for e in r.graph.edges],
            }
            for r in records
        ],
    }
    rows = [[r.rank, r.label, r.sign, r.girth, _fmt(r.energy), " ".join(map(str, r.coeffs.coeffs)),
             " ".join(f"{u}-{v}" for u, v in r.graph.edges)] for r in records]
    _emit(obj, rows, ["rank", "label", "sign", "girth", "energy", "coeffs", "edges"], args.format, out)
    return EXIT_OK


def cmd_verify(args, out):
    report = verify_claims(args.n)
    obj = {
        "n": report.n,
        "all_passed": report.all_passed,
        "claims": [{"name": c.name, "expected": c.expected, "observed": c.observed, "pass": c.passed}
                   for c in report.claims],
    }
    rows = [[c.name, c.expected, c.observed, str(c.passed).lower()] for c in report.claims]
    _emit(obj, rows, ["name", "expected", "observed", "pass"], args.format, out)
    return EXIT_OK if report.all_passed else EXIT_CLAIM


def _bool(text: str) -> bool:
    low = text.lower()
    if low in ("1", "true", "yes", "on"):
        return True
    if low in ("0", "false", "no", "off"):
        return False
    raise argparse.ArgumentTypeError(f"expected a boolean, got {text!r}")


def _positive(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="skewenergy", description="Skew spectra and skew energy of oriented graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "csv"), default="json")

    def graph_input(p):
        p.add_argument("--input", required=True, metavar="PATH")
        p.add_argument("--sign", choices=(PLUS, MINUS), help="orient an undirected unicyclic input canonically")

    p = sub.add_parser("energy", help="skew energy of an oriented graph")
    graph_input(p)
    p.add_argument("--method", choices=("spectral", "coulson", "both"), default="both")
    p.add_argument("--tol", type=_positive, default=DEFAULT_TOL)
    common(p)
    p.set_defaults(func=cmd_energy)

    p = sub.add_parser("spectrum", help="eigenvalue magnitudes of the skew-adjacency matrix")
    graph_input(p)
    common(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("charpoly", help="even coefficients of the skew characteristic polynomial")
    graph_input(p)
    p.add_argument("--engine", choices=("combinatorial", "unicyclic", "exact", "all"), default="exact")
    common(p)
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("family", help="named graph family with its canonical orientation")
    p.add_argument("--family", choices=("snl", "pnl", "cycle", "path"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--girth", type=int)
    p.add_argument("--sign", choices=(PLUS, MINUS), default=PLUS)
    common(p)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("search", help="extremal skew energy over unicyclic orientations")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--objective", choices=("min", "max"), default="min")
    p.add_argument("--top", type=int, default=1)
    p.add_argument("--dedupe", type=_bool, default=True, metavar="BOOL")
    common(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="check the extremal claims at one order n")
    p.add_argument("--n", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return args.func(args, out)
    except InvariantViolation as exc:
        err.write(f"invariant violation: {exc}\n")
        return EXIT_INVARIANT
    except ValueError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
