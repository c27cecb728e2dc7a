"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 domain error, 3 resource guard,
4 verification failure. Input graphs are canonicalised first, so any
relabelling of a graph produces identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence, TextIO

from .errors import DomainError, ResourceGuardError, VerificationError
from .graphio import decode_edge_list, decode_graph6, encode_graph6
from .graphs import GraphClass, canonical_graph, enumerate_graphs, generate_special, part_of
from .partitions import Partition, enumerate_partitions, reduced_form
from .reconstruct import k_lambda_family, lambda_matrix, reconstruct_coefficient, exact_rank
from .routes import (
    Routing,
    expand_in_forest_basis,
    expand_via_linear_solve,
    march,
    march_identity_residual,
    named_basis,
    route_between_forests,
    route_to_girth3,
    route_to_path_form,
    route_to_star_form,
    route_to_star_form_dnc,
    truncate_expansion,
)
from .symmetric import chromatic_polynomial, csf, stable_partition_census
from .upolynomial import restricted_u, u_polynomial_forest, u_polynomial_general
from .verify import SUITES, run_suite

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_RESOURCE, EXIT_VERIFY = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}\n{self.format_usage()}")


def _add_graph_args(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--g6", help="graph in graph6 format")
    src.add_argument("--edges", metavar="PATH", help="edge-list file ('-' for stdin): n on the first line, then 'u v' lines")


def _add_json(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="emit JSON instead of a table")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="csflab", description="Chromatic symmetric functions, forest bases and U-polynomials.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("csf", help="chromatic symmetric function in the monomial basis")
    _add_graph_args(p)
    _add_json(p)

    p = sub.add_parser("expand", help="expand the CSF in a chromatic basis")
    _add_graph_args(p)
    p.add_argument("--basis", default="star", help="star, path or file:<path> (default star)")
    p.add_argument("--strategy", default="path", choices=[r.value for r in Routing], help="routing strategy")
    p.add_argument("--k", type=int, help="keep only levels len(lambda) <= len(Part(G)) + k")
    _add_json(p)

    p = sub.add_parser("upoly", help="U-polynomial (forest form, or two-variable form for other graphs)")
    _add_graph_args(p)
    p.add_argument("--k", type=int, help="restrict to edge subsets of size <= k (forests only)")
    p.add_argument("--general", action="store_true", help="always print the two-variable form")
    _add_json(p)

    p = sub.add_parser("chromatic", help="chromatic polynomial")
    _add_graph_args(p)
    p.add_argument("--k", type=int, help="also evaluate at k colours")
    _add_json(p)

    p = sub.add_parser("route", help="route to a normal form and its march")
    _add_graph_args(p)
    p.add_argument("--to", default="path", choices=["path", "star", "dnc", "girth3", "graph"], help="route target")
    p.add_argument("--target-g6", help="target forest for --to graph")
    p.add_argument("--strategy", default="path", choices=[r.value for r in Routing], help="normal form for --to graph")
    _add_json(p)

    p = sub.add_parser("reconstruct", help="independent-partition counts from k-vertex induced subgraphs")
    _add_graph_args(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--lambda", dest="lam", help='partition "a,b,c" (default: every k-reducible partition)')
    _add_json(p)

    p = sub.add_parser("lambda-matrix", help="lambda-matrix of a graph family and its exact rank")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--family", default="k-lambda", choices=["k-lambda", "all", "forests", "trees"])
    _add_json(p)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True, choices=SUITES)
    p.add_argument("--n", type=int, help="size bound (theorem4: exact vertex count)")
    p.add_argument("--count", type=int, default=1000, help="random routes for the march suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--verbose", action="store_true", help="list every failure")
    return parser


def _read_graph(args):
    if args.g6 is not None:
        g = decode_graph6(args.g6)
    else:
        text = sys.stdin.read() if args.edges == "-" else Path(args.edges).read_text()
        g = decode_edge_list(text)
    return canonical_graph(g)


def _emit(out: TextIO, obj) -> None:
    out.write(json.dumps(obj) + "\n")


def _table(out: TextIO, header: Sequence[str], rows) -> None:
    out.write("\t".join(header) + "\n")
    for row in rows:
        out.write("\t".join(str(x) for x in row) + "\n")


def cmd_csf(args, out):
    f = csf(_read_graph(args))
    if args.json:
        _emit(out, f.to_json())
    else:
        _table(out, ("lambda", "coeff"), f)


def cmd_expand(args, out):
    g = _read_graph(args)
    basis = named_basis(args.basis, g.n)
    if basis.forest_basis:
        x = expand_in_forest_basis(g, basis, args.strategy)
    else:
        x = expand_via_linear_solve(g, basis)
    x.verify()
    if args.k is not None:
        x = truncate_expansion(x, part_of(g), args.k)
    if args.json:
        _emit(out, x.to_json())
    else:
        _table(out, ("lambda", "coeff"), x.coeffs.items())


def cmd_upoly(args, out):
    g = _read_graph(args)
    if args.general or not g.is_forest():
        if args.k is not None:
            raise DomainError("--k needs a forest and the forest form")
        u = u_polynomial_general(g)
        if args.json:
            _emit(out, u.to_json())
        else:
            _table(out, ("lambda", "y_power", "coeff"), ((lam, p, c) for (lam, p), c in u.terms.items()))
        return
    u = u_polynomial_forest(g) if args.k is None else restricted_u(g, args.k)
    if args.json:
        _emit(out, u.to_json())
    else:
        _table(out, ("lambda", "coeff"), u)


def cmd_chromatic(args, out):
    g = _read_graph(args)
    coeffs = chromatic_polynomial(g)
    value = None
    if args.k is not None:
        if args.k < 0:
            raise DomainError("--k must be non-negative")
        value = sum(c * args.k**i for i, c in enumerate(coeffs))
    if args.json:
        obj = {"n": g.n, "coeffs": [str(c) for c in coeffs]}
        if value is not None:
            obj["k"] = str(args.k)
            obj["value"] = str(value)
        _emit(out, obj)
    else:
        _table(out, ("power", "coeff"), enumerate(coeffs))
        if value is not None:
            out.write(f"P({args.k}) = {value}\n")


def cmd_route(args, out):
    g = _read_graph(args)
    if args.to == "graph":
        if not args.target_g6:
            raise DomainError("--to graph needs --target-g6")
        route = route_between_forests(g, canonical_graph(decode_graph6(args.target_g6)), args.strategy)
    else:
        route = {
            "path": route_to_path_form,
            "star": route_to_star_form,
            "dnc": route_to_star_form_dnc,
            "girth3": route_to_girth3,
        }[args.to](g)
    route.validate()
    if not march_identity_residual(route).is_zero():
        raise VerificationError("march identity failed on the constructed route")
    m = march(route)
    steps = [
        {
            "witness": [str(v) for v in s.witness],
            "target": encode_graph6(s.target),
            "positive": encode_graph6(p),
            "negative": encode_graph6(q),
        }
        for s, p, q in zip(route.steps, m.positive, m.negative)
    ]
    if args.json:
        _emit(out, {"start": encode_graph6(route.start), "end": encode_graph6(route.end), "steps": steps})
    else:
        out.write(f"start {encode_graph6(route.start)}  end {encode_graph6(route.end)}  steps {len(route)}\n")
        _table(out, ("i", "witness", "target", "positive", "negative"), (
            (i, ",".join(s["witness"]), s["target"], s["positive"], s["negative"]) for i, s in enumerate(steps, 1)
        ))


def cmd_reconstruct(args, out):
    g = _read_graph(args)
    census = stable_partition_census(g)
    if args.lam is not None:
        lams = [Partition.parse(args.lam)]
    else:
        lams = [lam for lam in enumerate_partitions(g.n) if reduced_form(lam).weight <= args.k]
    rows = []
    for lam in lams:
        got = reconstruct_coefficient(g, lam, args.k)
        want = census.get(lam, 0)
        if got != want:
            raise VerificationError(f"reconstruction gives {got} for {lam}, census has {want}")
        rows.append((lam, got, want))
    if args.json:
        _emit(out, {"k": str(args.k), "coeffs": {str(lam): str(got) for lam, got, _ in rows}})
    else:
        _table(out, ("lambda", "reconstructed", "census"), rows)


def cmd_lambda_matrix(args, out):
    if args.n < 1:
        raise DomainError("--n must be positive")
    if args.family == "k-lambda":
        family = k_lambda_family(args.n)
    else:
        family = enumerate_graphs(args.n, GraphClass(args.family))
    if not family:
        raise DomainError(f"no {args.family} on {args.n} vertices")
    mat = lambda_matrix(family)
    if args.json:
        _emit(out, mat.to_json())
    else:
        _table(out, ["graph6"] + [str(lam) for lam in mat.cols], (
            [encode_graph6(g)] + list(row) for g, row in zip(mat.rows, mat.entries)
        ))
        out.write(f"rank {exact_rank(mat)} of {len(mat.cols)}\n")


def cmd_verify(args, out):
    res = run_suite(args.suite, args.n, args.count, args.seed)
    shown = res.failures if args.verbose else res.failures[:10]
    for line in shown:
        out.write(f"FAIL {line}\n")
    for line in res.notes:
        out.write(f"note {line}\n")
    out.write(res.summary() + "\n")
    return EXIT_OK if res.ok else EXIT_VERIFY


COMMANDS = {
    "csf": cmd_csf,
    "expand": cmd_expand,
    "upoly": cmd_upoly,
    "chromatic": cmd_chromatic,
    "route": cmd_route,
    "reconstruct": cmd_reconstruct,
    "lambda-matrix": cmd_lambda_matrix,
    "verify": cmd_verify,
}


def run(argv: Sequence[str], out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(list(argv))
    except UsageError as exc:
        err.write(str(exc))
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    try:
        code = COMMANDS[args.command](args, out)
    except VerificationError as exc:
        err.write(f"verification failed: {exc}\n")
        return EXIT_VERIFY
    except ResourceGuardError as exc:
        err.write(f"resource guard: {exc}\n")
        return EXIT_RESOURCE
    except DomainError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_DOMAIN
    except OSError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_DOMAIN
    return EXIT_OK if code is None else code


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
