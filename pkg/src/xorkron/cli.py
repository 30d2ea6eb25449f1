"""Command-line front end: verdicts via exit codes, data via stdout.

Exit codes: 0 affirmative or success, 1 negative verdict, 2 usage or input
error. Labeled commands read vertex v as grid cell (v div q, v mod q).
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from collections import Counter

from .algebra import tensor_elementary, tensor_product, two_sum
from .builder import build_ppt_graph, verify_components
from .graphs import (
    Graph,
    format_edge_list,
    graph6_decode,
    graph6_encode,
    parse_edge_list,
    standard_graph,
)
from .membership import (
    Certificate,
    GridShape,
    census,
    edge_bound_check,
    is_spanning_cross_like,
    pair_quadruples,
    verify_certificate,
)
from .recognition import recognize
from .t2 import t2_bruteforce_oracle, t2_exact, t2_min_over_labelings
from .transpose import BlockMatrix, format_matrix_text, partial_transpose, ppt_test

RECOGNIZE_SCALE_LIMIT = 16
CENSUS_BIT_LIMIT = 20

_STANDARD_KINDS = {"K": "complete", "P": "path", "C": "cycle", "E": "edgeless"}

GRAPH_TOKEN_HELP = (
    "graph argument: '-' reads stdin, an existing path reads that file "
    "(edge list when the first line is a bare vertex count, graph6 otherwise), "
    "K<n>/P<n>/C<n>/E<n> name complete/path/cycle/edgeless graphs, "
    "anything else is an inline graph6 string"
)


def read_graph(token: str) -> Graph:
    if token == "-":
        return _parse_graph_text(sys.stdin.read())
    if os.path.exists(token):
        with open(token, encoding="ascii") as fh:
            return _parse_graph_text(fh.read())
    m = re.fullmatch(r"([KPCE])(\d+)", token)
    if m:
        return standard_graph(_STANDARD_KINDS[m.group(1)], int(m.group(2)))
    return graph6_decode(token)


def _parse_graph_text(text: str) -> Graph:
    first = next((ln.strip() for ln in text.splitlines() if ln.strip()), "")
    if first.isdigit():
        return parse_edge_list(text)
    return graph6_decode(text)


def _emit_graph(g: Graph, as_edges: bool) -> None:
    if as_edges:
        sys.stdout.write(format_edge_list(g))
    else:
        print(graph6_encode(g))


def _verify_or_code(cert: Certificate, wanted: bool, fallback: int) -> int:
    """Exit code for a certificate command, honoring a --verify request."""
    if wanted:
        problems = verify_certificate(cert)
        if problems:
            for pb in problems:
                print(f"verify: {pb}", file=sys.stderr)
            return 2
    return fallback


def cmd_product(args: argparse.Namespace) -> int:
    _emit_graph(tensor_product(read_graph(args.left), read_graph(args.right)), args.edges)
    return 0


def cmd_xor(args: argparse.Namespace) -> int:
    _emit_graph(two_sum(read_graph(args.left), read_graph(args.right)), args.edges)
    return 0


def cmd_elementary(args: argparse.Namespace) -> int:
    g = tensor_elementary(args.p, args.q, args.i, args.i2, args.j, args.j2)
    _emit_graph(g, args.edges)
    return 0


def cmd_member(args: argparse.Namespace) -> int:
    cert = is_spanning_cross_like(read_graph(args.graph), GridShape(args.p, args.q))
    print(cert.to_json())
    return _verify_or_code(cert, args.verify, 0 if cert.verdict else 1)


def cmd_recognize(args: argparse.Namespace) -> int:
    shape = GridShape(args.p, args.q)
    if shape.order > RECOGNIZE_SCALE_LIMIT and not args.force:
        print(
            f"error: recognition above p*q = {RECOGNIZE_SCALE_LIMIT} may run long; pass --force to proceed",
            file=sys.stderr,
        )
        return 2
    cert = recognize(read_graph(args.graph), shape, use_prefilter=not args.no_prefilter)
    print(cert.to_json())
    return _verify_or_code(cert, args.verify, 0 if cert.verdict else 1)


def cmd_decompose(args: argparse.Namespace) -> int:
    cert = is_spanning_cross_like(read_graph(args.graph), GridShape(args.p, args.q))
    print(cert.to_json())
    return _verify_or_code(cert, args.verify, 0 if cert.verdict else 1)


def cmd_t2(args: argparse.Namespace) -> int:
    k = read_graph(args.graph)
    shape = GridShape(args.p, args.q)
    cert = is_spanning_cross_like(k, shape)
    if not cert.verdict:
        print(cert.to_json())
        return 1
    out: dict = {"t2": t2_exact(k, shape)}
    if args.oracle:
        out["oracle"] = t2_bruteforce_oracle(k, shape, args.max_l)
    if args.all_labelings:
        out["min_over_labelings"] = t2_min_over_labelings(k, shape)
    print(json.dumps(out, indent=2))
    return 0


def cmd_ppt_check(args: argparse.Namespace) -> int:
    k = read_graph(args.graph)
    fixed = ppt_test(k, args.p)
    verdict = f"fixed-point: {'yes' if fixed else 'no'}"
    if args.dump:
        m = partial_transpose(BlockMatrix.from_graph(k, args.p))
        sys.stdout.write(format_matrix_text(m.rows, m.n))
        print(verdict, file=sys.stderr)
    else:
        print(verdict)
    return 0 if fixed else 1


def cmd_build_ppt(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    h, labeling = build_ppt_graph(g)
    cert = is_spanning_cross_like(h, labeling.shape)
    _emit_graph(h, args.edges)
    print(cert.to_json())
    n, m = g.n, g.edge_count
    try:
        matched = verify_components(h, g)
    except ValueError:
        note = "skipped: a component is too large to canonicalize"
        matched = True
    else:
        note = "verified" if matched else "MISMATCH"
    print(f"components: input graph + {m} K2 + {n * n - n - 2 * m} K1 [{note}]", file=sys.stderr)
    if not cert.verdict or not matched:
        return 2
    return _verify_or_code(cert, args.verify, 0)


def cmd_census(args: argparse.Namespace) -> int:
    shape = GridShape(args.p, args.q)
    nbits = len(pair_quadruples(shape))
    if nbits > CENSUS_BIT_LIMIT and not args.force:
        print(
            f"error: census at ({args.p}, {args.q}) enumerates 2^{nbits} graphs; pass --force to proceed",
            file=sys.stderr,
        )
        return 2
    if not args.stats:
        for g in census(shape):
            print(graph6_encode(g))
        return 0
    edge_hist: Counter[int] = Counter()
    t2_hist: Counter[int] = Counter()
    attained = []
    count = 0
    for g in census(shape):
        count += 1
        edge_hist[g.edge_count] += 1
        t2_hist[t2_exact(g, shape)] += 1
        _, hit = edge_bound_check(g, shape)
        if hit:
            attained.append(graph6_encode(g))
    out = {
        "shape": [args.p, args.q],
        "count": count,
        "edge_bound": shape.edge_bound,
        "edge_counts": {str(k): edge_hist[k] for k in sorted(edge_hist)},
        "t2_counts": {str(k): t2_hist[k] for k in sorted(t2_hist)},
        "bound_attained": attained,
    }
    print(json.dumps(out, indent=2))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    if args.certificate == "-":
        text = sys.stdin.read()
    else:
        with open(args.certificate, encoding="ascii") as fh:
            text = fh.read()
    try:
        cert = Certificate.from_json(text)
    except (KeyError, TypeError, ValueError) as exc:
        print(f"error: unreadable certificate: {exc}", file=sys.stderr)
        return 2
    problems = verify_certificate(cert)
    if problems:
        for pb in problems:
            print(f"verify: {pb}", file=sys.stderr)
        return 1
    print("certificate ok")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="xorkron",
        description=(
            "Graphs as XOR-combinations of tensor products: build them, test "
            "labeled and unlabeled membership, decompose, count minimal "
            "summands, and probe the partial-transpose fixed point. Labeled "
            "commands read vertex v as grid cell (v div q, v mod q)."
        ),
        epilog=GRAPH_TOKEN_HELP + ". Exit codes: 0 affirmative, 1 negative verdict, 2 error.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name: str, func, help_text: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_text)
        sp.set_defaults(func=func)
        return sp

    def add_shape(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--p", type=int, required=True, help="grid row count (left factor size)")
        sp.add_argument("--q", type=int, required=True, help="grid column count (right factor size)")

    sp = add("product", cmd_product, "tensor product of two graphs")
    sp.add_argument("left")
    sp.add_argument("right")
    sp.add_argument("--edges", action="store_true", help="emit an edge list instead of graph6")

    sp = add("xor", cmd_xor, "XOR of two edge sets on the same vertex count")
    sp.add_argument("left")
    sp.add_argument("right")
    sp.add_argument("--edges", action="store_true", help="emit an edge list instead of graph6")

    sp = add("elementary", cmd_elementary, "two-edge cross graph on a p x q grid")
    for name in ("p", "q", "i", "i2", "j", "j2"):
        sp.add_argument(name, type=int)
    sp.add_argument("--edges", action="store_true", help="emit an edge list instead of graph6")

    sp = add("member", cmd_member, "labeled membership certificate")
    add_shape(sp)
    sp.add_argument("graph")
    sp.add_argument("--verify", action="store_true", help="recheck the certificate before exiting")

    sp = add("recognize", cmd_recognize, "search all labelings for membership")
    add_shape(sp)
    sp.add_argument("graph")
    sp.add_argument("--force", action="store_true", help="lift the p*q scale guard")
    sp.add_argument("--no-prefilter", action="store_true", help="skip cheap rejections, search exhaustively")
    sp.add_argument("--verify", action="store_true", help="recheck the certificate before exiting")

    sp = add("decompose", cmd_decompose, "cross summands of a labeled member")
    add_shape(sp)
    sp.add_argument("graph")
    sp.add_argument("--verify", action="store_true", help="recheck the certificate before exiting")

    sp = add("t2", cmd_t2, "least summand count of a labeled member")
    add_shape(sp)
    sp.add_argument("graph")
    sp.add_argument("--oracle", action="store_true", help="also run the exhaustive search oracle")
    sp.add_argument("--max-l", type=int, default=4, help="oracle search depth (default 4)")
    sp.add_argument(
        "--all-labelings", action="store_true", help="also minimize over every valid labeling"
    )

    sp = add("ppt-check", cmd_ppt_check, "is the adjacency matrix a partial-transpose fixed point")
    sp.add_argument("--p", type=int, required=True, help="block grid size (must divide n)")
    sp.add_argument("graph")
    sp.add_argument("--dump", action="store_true", help="print the transposed matrix, verdict to stderr")

    sp = add("build-ppt", cmd_build_ppt, "embed any graph as a member on n^2 vertices")
    sp.add_argument("graph")
    sp.add_argument("--edges", action="store_true", help="emit an edge list instead of graph6")
    sp.add_argument("--verify", action="store_true", help="recheck the certificate before exiting")

    sp = add("census", cmd_census, "every labeled member of one shape")
    add_shape(sp)
    sp.add_argument("--stats", action="store_true", help="print count/edge/t2 histograms as JSON")
    sp.add_argument("--force", action="store_true", help="lift the enumeration size guard")

    sp = add("verify", cmd_verify, "recheck a stored certificate JSON")
    sp.add_argument("certificate", help="certificate file path, or '-' for stdin")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())
