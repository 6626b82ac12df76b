"""Command-line surface: enumeration, multiplication, decomposition tables,
and the verification suites.

Subcommands:

    prook enumerate --n 3 [--edges 1] [--format table|json]
    prook multiply d1.json d2.json [--matrix-units] [--format json|table]
    prook decompose --k 4 [--quantum] [--format table|json]
    prook verify SUITE [--n N | --k K] [--q0 num/den] [--seed S] [--jobs J]

Verification exits 0 when every check passed, 1 on any failure (with a
counterexample JSON on standard output), and 2 on usage errors.  All output
ordering is deterministic; only the elapsed_ms timing fields vary between
runs.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from math import comb

from . import gl11, hecke, rookalgebra, uq
from .diagrams import InvalidDiagramError, RookDiagram, enumerate_planar
from .limits import BoundExceededError, ENUMERATE_MAX_N
from .reports import VerificationReport
from .rings import rational_from_str
from .rookalgebra import AlgebraElement, matrix_unit

SUITES = ("rook-modules", "matrix-units", "gl", "quantum",
          "centralizer", "q-centralizer", "hecke", "all")

DEFAULT_PARAMS = {
    "rook-modules": 5,
    "matrix-units": 3,
    "gl": 5,
    "quantum": 8,
    "centralizer": 5,
    "q-centralizer": 5,
    "hecke": 5,
}


class UsageError(Exception):
    pass


def _dump(payload) -> None:
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")


def _format_subset(members) -> str:
    return "{" + ",".join(str(v) for v in members) + "}"


def cmd_enumerate(args) -> int:
    n = args.n
    if n < 0:
        raise UsageError("--n must be nonnegative")
    if n > ENUMERATE_MAX_N:
        count = comb(n, args.edges) ** 2 if args.edges is not None else comb(2 * n, n)
        raise UsageError(
            "refusing to enumerate n=%d (would produce %d diagrams; cap is n <= %d)"
            % (n, count, ENUMERATE_MAX_N))
    if args.edges is not None and not 0 <= args.edges <= n:
        raise UsageError("--edges must lie in 0..%d" % n)
    diagrams = enumerate_planar(n, args.edges)
    if args.format == "json":
        _dump({
            "n": n,
            "edges": args.edges,
            "count": len(diagrams),
            "diagrams": [d.to_json() for d in diagrams],
        })
    else:
        for i, d in enumerate(diagrams):
            print("%4d  edges=%-30s bottom=%-15s top=%s" % (
                i,
                str([list(e) for e in d.edges]),
                _format_subset(d.domain),
                _format_subset(d.image),
            ))
        print("total: %d diagrams" % len(diagrams))
    return 0


def _read_documents(paths):
    """Each path (or '-' for stdin) holds one JSON document or an array."""
    documents = []
    for position, path in enumerate(paths, start=1):
        label = "input #%d (%s)" % (position, path)
        try:
            text = sys.stdin.read() if path == "-" else open(path).read()
        except OSError as exc:
            raise UsageError("%s: %s" % (label, exc)) from None
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise UsageError("%s: invalid JSON: %s" % (label, exc)) from None
        items = data if isinstance(data, list) else [data]
        for item in items:
            documents.append((label, item))
    return documents


def _parse_element(label: str, data, matrix_units: bool) -> AlgebraElement:
    if not isinstance(data, dict):
        raise UsageError("%s: expected a JSON object" % label)
    try:
        if "terms" in data:
            if matrix_units:
                raise UsageError(
                    "%s: --matrix-units applies to plain diagram inputs only" % label)
            return AlgebraElement.from_json(data)
        if "edges" in data:
            diagram = RookDiagram.from_json(data)
            if matrix_units:
                if not diagram.is_planar:
                    raise UsageError(
                        "%s: matrix units are defined for planar diagrams only" % label)
                return matrix_unit(diagram)
            return AlgebraElement.from_diagram(diagram)
    except (InvalidDiagramError, ValueError, KeyError, TypeError) as exc:
        if isinstance(exc, UsageError):
            raise
        raise UsageError("%s: %s" % (label, exc)) from None
    raise UsageError("%s: neither a diagram nor an algebra element" % label)


def cmd_multiply(args) -> int:
    documents = _read_documents(args.inputs)
    if len(documents) < 2:
        raise UsageError("need at least two documents to multiply, got %d" % len(documents))
    elements = [_parse_element(label, data, args.matrix_units)
                for label, data in documents]
    product = elements[0]
    for position, element in enumerate(elements[1:], start=2):
        if element.n != product.n:
            raise UsageError(
                "input #%d is on n=%d vertices but the running product is on n=%d"
                % (position, element.n, product.n))
        product = product * element
    if args.format == "table":
        if product.is_zero():
            print("0")
        else:
            for diagram, coeff in product.sorted_terms():
                print("%-8s %s" % (coeff, [list(e) for e in diagram.edges]))
    else:
        _dump(product.to_json())
    return 0


def cmd_decompose(args) -> int:
    if args.k < 1:
        raise UsageError("--k must be at least 1")
    table = gl11.decomposition_table(args.k)
    if args.format == "json":
        _dump({
            "k": args.k,
            "quantum": args.quantum,
            "summands": [
                {"m": label.m, "n": label.n, "multiplicity": mult,
                 "label": ("L_q[q^%d,q^%d]" % (label.m, label.n)) if args.quantum
                          else str(label)}
                for label, mult in table
            ],
        })
    else:
        for label, mult in reversed(table):
            shown = "L_q[q^%d,q^%d]" % (label.m, label.n) if args.quantum else str(label)
            print("%-16s x %d" % (shown, mult))
        print("summands: %d, total dimension %d" % (len(table), 1 << args.k))
    return 0


def _suite_reports(suite: str, value: int, q0, seed: int) -> list:
    if suite == "rook-modules":
        reports = [rookalgebra.verify_irreducibility(value, size)
                   for size in range(value + 1)]
        reports.append(rookalgebra.verify_semisimplicity(value))
        return reports
    if suite == "matrix-units":
        return [rookalgebra.verify_matrix_unit_rule(value, seed=seed)]
    if suite == "gl":
        return [
            gl11.verify_weight_pairs(value),
            gl11.verify_tensor_basis(value),
            gl11.verify_commuting_action(value, seed=seed),
            gl11.verify_faithful_action(value),
        ]
    if suite == "quantum":
        return [
            uq.verify_quantum_relations(value),
            uq.verify_q_weight_pairs(value, q0),
        ]
    if suite == "centralizer":
        return [gl11.verify_centralizer(value)]
    if suite == "q-centralizer":
        return [uq.verify_q_centralizer(value, q0)]
    if suite == "hecke":
        return [hecke.verify_isomorphism(value)]
    raise UsageError("unknown suite %r" % suite)


def _all_suite_plan(q0, seed: int):
    """The default desk-scale run: every suite at its standard bound."""
    return [
        ("rook-modules", lambda: _suite_reports("rook-modules", 5, q0, seed)),
        ("matrix-units", lambda: _suite_reports("matrix-units", 3, q0, seed)),
        ("matrix-units", lambda: _suite_reports("matrix-units", 5, q0, seed)),
        ("gl", lambda: _suite_reports("gl", 5, q0, seed)),
        ("gl-stress", lambda: [gl11.verify_weight_pairs(10),
                               gl11.verify_tensor_basis(10)]),
        ("quantum", lambda: _suite_reports("quantum", 8, q0, seed)),
        ("centralizer", lambda: _suite_reports("centralizer", 5, q0, seed)),
        ("q-centralizer", lambda: _suite_reports("q-centralizer", 5, q0, seed)),
        ("hecke", lambda: _suite_reports("hecke", 5, q0, seed)),
    ]


def _print_reports(reports: list, fmt: str) -> int:
    status = "pass" if all(r.passed for r in reports) else "fail"
    if fmt == "json":
        _dump({
            "status": status,
            "suites": [r.to_json() for r in reports],
        })
    else:
        for report in reports:
            params = " ".join("%s=%s" % (key, value)
                              for key, value in report.parameters.items())
            print("%-4s %-28s %-24s checks=%-6d %dms" % (
                report.status.upper(), report.suite, params,
                report.checks_run, report.elapsed_ms))
            if report.counterexample is not None:
                print(json.dumps({"counterexample": report.counterexample}))
            for note in report.notes:
                print("     note: %s" % note)
        print("result: %s (%d suites)" % (status, len(reports)))
    return 0 if status == "pass" else 1


def cmd_verify(args) -> int:
    q0 = rational_from_str(args.q0)
    if args.suite == "all":
        if args.n is not None or args.k is not None:
            raise UsageError("'verify all' runs fixed default bounds; drop --n/--k")
        plan = _all_suite_plan(q0, args.seed)
        if args.jobs > 1:
            with ThreadPoolExecutor(max_workers=args.jobs) as pool:
                futures = [pool.submit(task) for _, task in plan]
                groups = [future.result() for future in futures]
        else:
            groups = [task() for _, task in plan]
        reports = [report for group in groups for report in group]
        return _print_reports(reports, args.format)
    if args.suite in ("rook-modules", "matrix-units"):
        if args.k is not None:
            raise UsageError("suite %r takes --n, not --k" % args.suite)
        value = args.n if args.n is not None else DEFAULT_PARAMS[args.suite]
    else:
        if args.n is not None:
            raise UsageError("suite %r takes --k, not --n" % args.suite)
        value = args.k if args.k is not None else DEFAULT_PARAMS[args.suite]
    if value < (0 if args.suite in ("rook-modules", "matrix-units") else 1):
        raise UsageError("parameter out of range for suite %r" % args.suite)
    reports = _suite_reports(args.suite, value, q0, args.seed)
    return _print_reports(reports, args.format)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="prook",
        description="Exact computations in the planar rook algebra and the "
                    "tensor representations it centralizes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list planar diagrams")
    p.add_argument("--n", type=int, required=True, help="vertices per row")
    p.add_argument("--edges", type=int, default=None, help="fix the edge count")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("multiply", help="multiply diagrams or algebra elements")
    p.add_argument("inputs", nargs="+", metavar="FILE",
                   help="JSON documents ('-' reads standard input)")
    p.add_argument("--matrix-units", action="store_true",
                   help="replace each diagram input d by its matrix unit X_d")
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.set_defaults(func=cmd_multiply)

    p = sub.add_parser("decompose", help="irreducible summand multiplicities")
    p.add_argument("--k", type=int, required=True, help="tensor power")
    p.add_argument("--quantum", action="store_true", help="print quantum labels")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--n", type=int, default=None, help="rook suite parameter")
    p.add_argument("--k", type=int, default=None, help="tensor suite parameter")
    p.add_argument("--q0", default="2/1",
                   help="rational substitution point as num/den (not 0, 1, -1)")
    p.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
    p.add_argument("--jobs", type=int, default=1,
                   help="run independent suites of 'verify all' concurrently")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except BoundExceededError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except (InvalidDiagramError, hecke.InvalidLabelError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
