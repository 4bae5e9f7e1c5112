"""Command-line interface: parse a rotation-system file, run one query.

Exit codes: 0 success, 1 invariant/assertion failure, 2 parse or
validation error, 3 unsupported operation, 4 enumeration cap exceeded.
All numeric flags are exact: rationals are written ``p/q`` or ``p``.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import Any

from . import brt, gf2, homology, oracle, spaces
from .embedded import EmbeddedGraph, format_rotation_system, parse_rotation_system
from .errors import (
    EdgeCapError,
    InternalInvariantError,
    InvalidGraphError,
    UnsupportedError,
)
from .fixtures import fixture_names, load_fixture
from .medial import trace_medial
from .representatives import planar_representatives, verify_representatives
from .selfcheck import failed_checks, run_all_checks

_RATIONAL = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


def rational(text: str) -> Fraction:
    if not _RATIONAL.match(text):
        raise argparse.ArgumentTypeError(f"expected an integer or p/q fraction, got {text!r}")
    return Fraction(text)


def edge_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(",") if t.strip() != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated edge indices, got {text!r}")


def _load_graph(path: str) -> EmbeddedGraph:
    if path == "-":
        return parse_rotation_system(sys.stdin.read())
    with open(path, "r", encoding="utf-8") as fh:
        return parse_rotation_system(fh.read())


def _coloring(g: EmbeddedGraph, bits: str) -> int:
    try:
        return spaces.coloring_from_string(g, bits)
    except ValueError as exc:
        raise InvalidGraphError(str(exc)) from None


def _emit(args: argparse.Namespace, document: dict[str, Any], lines: list[str]) -> None:
    if args.json:
        print(json.dumps(document, sort_keys=True, separators=(",", ":")))
    else:
        for line in lines:
            print(line)


def _fraction_str(x: Fraction) -> str:
    return str(x)


# -- command handlers ---------------------------------------------------------


def cmd_info(args: argparse.Namespace) -> int:
    g = _load_graph(args.path)
    s = spaces.summarize(g)
    doc = {
        "command": "info",
        "vertices": s.vertex_count,
        "edges": s.edge_count,
        "faces": s.face_count,
        "genus": s.genus,
        "dim_cocycle": s.dim_cocycle,
        "dim_dual_cocycle": s.dim_dual_cocycle,
        "dim_cycle": s.dim_cycle,
        "dim_sum": s.dim_sum,
        "dim_intersection": s.dim_intersection,
        "bicycle_dim": s.bicycle_dim,
        "class_exponent": s.class_exponent,
        "class_count": str(s.class_count),
    }
    lines = [
        f"vertices            {s.vertex_count}",
        f"edges               {s.edge_count}",
        f"faces               {s.face_count}",
        f"genus               {s.genus}",
        f"dim U (cuts)        {s.dim_cocycle}",
        f"dim U* (dual cuts)  {s.dim_dual_cocycle}",
        f"dim cycle space     {s.dim_cycle}",
        f"dim (U + U*)        {s.dim_sum}",
        f"dim (U cap U*)      {s.dim_intersection}",
        f"bicycle dimension   {s.bicycle_dim}",
        f"class count         {s.class_count} = 2^{s.class_exponent}",
    ]
    _emit(args, doc, lines)
    return 0


def cmd_dual(args: argparse.Namespace) -> int:
    g = _load_graph(args.path)
    d = g.dual()
    text = format_rotation_system(d, header="dual rotation system")
    doc = {
        "command": "dual",
        "rotations": [list(rot) for rot in d.rotations],
        "edge_darts": [list(pair) for pair in d.edge_darts],
        "text": text,
    }
    _emit(args, doc, [text.rstrip("\n")])
    return 0


def cmd_count(args: argparse.Namespace) -> int:
    g = _load_graph(args.path)
    counts: dict[str, int] = {}
    if args.method in ("direct", "all"):
        counts["direct"] = spaces.class_count_direct(g)
    if args.method in ("homology", "all"):
        counts["homology"] = homology.class_count_homology(g)
    if args.method in ("oracle", "all"):
        counts["oracle"] = oracle.enumerate_classes(g, edge_cap=args.cap).class_count
    doc = {"command": "count", "method": args.method}
    doc.update({k: str(v) for k, v in counts.items()})
    lines = [f"{k:9s} {v}" for k, v in counts.items()]
    if args.method == "all":
        if len(set(counts.values())) != 1:
            doc["agreement"] = "FAIL"
            _emit(args, doc, lines + ["routes disagree"])
            return 1
        doc["agreement"] = "ok"
        lines.append("agreement ok")
    _emit(args, doc, lines)
    return 0


def cmd_medial(args: argparse.Namespace) -> int:
    g = _load_graph(args.path)
    mc = trace_medial(g)
    rows = mc.trace_matrix().row_strings()
    doc = {"command": "medial", "components": mc.count, "trace_vectors": rows}
    lines = [f"components {mc.count}"] + [f"strand {i}: {s}" for i, s in enumerate(rows)]
    if mc.count == 0:
        lines.append("(edgeless graph: no strands)")
    _emit(args, doc, lines)
    return 0


def cmd_brt(args: argparse.Namespace) -> int:
    g = _load_graph(args.path)
    p = brt.brt_polynomial(g, edge_cap=args.cap)
    doc: dict[str, Any] = {"command": "brt", "polynomial": str(p)}
    lines = [str(p)]
    if args.eval is not None:
        x, y, z = args.eval
        value = p.evaluate(x, y, z)
        doc["eval_point"] = [str(x), str(y), str(z)]
        doc["value"] = _fraction_str(value)
        lines = [_fraction_str(value)]
    _emit(args, doc, lines)
    return 0


def cmd_tutte(args: argparse.Namespace) -> int:
    g = _load_graph(args.path)
    x, y = args.eval
    value = brt.tutte_eval(g, x, y, edge_cap=args.cap)
    doc = {
        "command": "tutte",
        "eval_point": [str(x), str(y)],
        "value": _fraction_str(value),
    }
    _emit(args, doc, [_fraction_str(value)])
    return 0


def cmd_homology(args: argparse.Namespace) -> int:
    g = _load_graph(args.path)
    try:
        tc = homology.tree_cotree(g, tree_edges=args.tree)
    except ValueError as exc:
        raise InvalidGraphError(str(exc)) from None
    hm = homology.fundamental_dual_cycles(g, tc)
    basis, images = homology.strand_image_matrix(g, tc)
    b = basis.nrows - gf2.rank(images)
    count = 1 << (2 * g.genus + b)
    doc = {
        "command": "homology",
        "tree_edges": list(tc.tree_edges),
        "cotree_edges": list(tc.cotree_edges),
        "leftover_edges": list(tc.leftover_edges),
        "fundamental_cycles": hm.cycle_matrix().row_strings(),
        "strand_images": images.row_strings(),
        "kernel_dim": b,
        "genus": g.genus,
        "class_count": str(count),
    }
    lines = [
        "tree edges      " + " ".join(map(str, tc.tree_edges)),
        "co-tree edges   " + " ".join(map(str, tc.cotree_edges)),
        "leftover edges  " + " ".join(map(str, tc.leftover_edges)),
    ]
    for i, s in enumerate(hm.cycle_matrix().row_strings()):
        lines.append(f"cycle {i}: {s}")
    for i, s in enumerate(images.row_strings()):
        lines.append(f"strand image {i}: {s}")
    lines.append(f"kernel dim b    {b}")
    lines.append(f"class count     {count} = 2^(2*{g.genus} + {b})")
    _emit(args, doc, lines)
    return 0


def cmd_reps(args: argparse.Namespace) -> int:
    g = _load_graph(args.path)
    rs = planar_representatives(g)
    ok = verify_representatives(g, rs)
    strings = [spaces.coloring_to_string(g, w) for w in rs.colorings]
    doc = {
        "command": "reps",
        "edges": list(rs.edges),
        "colorings": strings,
        "verified": ok,
    }
    lines = ["edges " + " ".join(map(str, rs.edges))] + strings
    lines.append("verified" if ok else "verification FAILED")
    _emit(args, doc, lines)
    return 0 if ok else 1


def cmd_signature(args: argparse.Namespace) -> int:
    g = _load_graph(args.path)
    w = _coloring(g, args.coloring)
    basis = spaces.signature_basis(g)
    sig = spaces.class_signature(g, w)
    text = gf2.vector_to_string(sig, basis.nrows)
    doc = {"command": "signature", "signature": text, "length": basis.nrows}
    _emit(args, doc, [text])
    return 0


def cmd_same_class(args: argparse.Namespace) -> int:
    g = _load_graph(args.path)
    w1 = _coloring(g, args.a)
    w2 = _coloring(g, args.b)
    same = spaces.same_class(g, w1, w2)
    doc = {"command": "same-class", "same": same}
    _emit(args, doc, ["true" if same else "false"])
    return 0


def cmd_bot(args: argparse.Namespace) -> int:
    g = _load_graph(args.path)
    try:
        matrix = spaces.bot_matrix(g, args.vertex, args.face)
    except (IndexError, ValueError) as exc:
        raise InvalidGraphError(str(exc)) from None
    doc = {
        "command": "bot",
        "rows": matrix.row_strings(),
        "rank": gf2.rank(matrix),
    }
    lines = matrix.row_strings() + [f"rank {gf2.rank(matrix)}"]
    _emit(args, doc, lines)
    return 0


def cmd_oracle(args: argparse.Namespace) -> int:
    g = _load_graph(args.path)
    census = oracle.enumerate_classes(g, edge_cap=args.cap)
    doc = {
        "command": "oracle",
        "class_count": str(census.class_count),
        "orbit_size": str(census.orbit_size),
    }
    lines = [f"classes    {census.class_count}", f"orbit size {census.orbit_size}"]
    if args.reps:
        strings = [spaces.coloring_to_string(g, w) for w in census.representatives]
        doc["representatives"] = strings
        lines.extend(strings)
    _emit(args, doc, lines)
    return 0


def cmd_selftest(args: argparse.Namespace) -> int:
    failures = 0
    report: list[str] = []
    doc_fixtures = {}
    for name in fixture_names():
        g = load_fixture(name)
        results = run_all_checks(g)
        bad = failed_checks(results)
        failures += len(bad)
        status = "ok" if not bad else "FAIL"
        report.append(f"{name}: {status}")
        doc_fixtures[name] = status
        for r in results:
            if args.verbose or not r.ok:
                mark = "pass" if r.ok else "FAIL"
                detail = f" ({r.detail})" if r.detail else ""
                report.append(f"  {r.name}: {mark}{detail}")
    report.append("selftest " + ("ok" if failures == 0 else f"FAILED ({failures} checks)"))
    doc = {"command": "selftest", "fixtures": doc_fixtures, "failures": failures}
    _emit(args, doc, report)
    return 0 if failures == 0 else 1


# -- wiring -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bicolorgame",
        description="Count and characterize edge bicoloring classes of embedded graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler, needs_path: bool = True, **kwargs):
        p = sub.add_parser(name, **kwargs)
        if needs_path:
            p.add_argument("path", help="rotation-system file ('-' for stdin)")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(handler=handler)
        return p

    add("info", cmd_info, help="counts, genus and space dimensions")
    add("dual", cmd_dual, help="emit the dual graph in the same format")

    p = add("count", cmd_count, help="equivalence class count")
    p.add_argument("--method", choices=("direct", "homology", "oracle", "all"), default="all")
    p.add_argument("--cap", type=int, default=oracle.DEFAULT_EDGE_CAP, help="oracle edge cap")

    add("medial", cmd_medial, help="strand count and trace vectors")

    p = add("brt", cmd_brt, help="ribbon polynomial, optionally evaluated")
    p.add_argument("--eval", nargs=3, type=rational, metavar=("X", "Y", "Z"))
    p.add_argument("--cap", type=int, default=brt.DEFAULT_EDGE_CAP, help="enumeration edge cap")

    p = add("tutte", cmd_tutte, help="Tutte polynomial value")
    p.add_argument("--eval", nargs=2, type=rational, metavar=("X", "Y"), required=True)
    p.add_argument("--cap", type=int, default=brt.DEFAULT_EDGE_CAP, help="enumeration edge cap")

    p = add("homology", cmd_homology, help="tree/co-tree data and the 2^(2g+b) count")
    p.add_argument("--tree", type=edge_list, default=None, metavar="E1,E2,...",
                   help="edge indices of a spanning tree to use")

    add("reps", cmd_reps, help="canonical class representatives (plane graphs)")

    p = add("signature", cmd_signature, help="complete class invariant of a coloring")
    p.add_argument("--coloring", required=True, metavar="BITS")

    p = add("same-class", cmd_same_class, help="decide equivalence of two colorings")
    p.add_argument("--a", required=True, metavar="BITS")
    p.add_argument("--b", required=True, metavar="BITS")

    p = add("bot", cmd_bot, help="stacked incidence matrices with one row deleted each")
    p.add_argument("--vertex", type=int, default=None)
    p.add_argument("--face", type=int, default=None)

    p = add("oracle", cmd_oracle, help="brute-force orbit census")
    p.add_argument("--cap", type=int, default=oracle.DEFAULT_EDGE_CAP)
    p.add_argument("--reps", action="store_true", help="print one coloring per class")

    p = add("selftest", cmd_selftest, needs_path=False,
            help="run the invariant suite on the built-in fixtures")
    p.add_argument("--verbose", action="store_true")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (InvalidGraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except UnsupportedError as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return 3
    except EdgeCapError as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return 4
    except InternalInvariantError as exc:
        print(f"invariant failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
