"""Command-line front end.

Subcommands parse the DSL, dispatch constructions and analyses, and emit
DSL / DOT / JSON artifacts.  Algebra-valued outputs use the same DSL they are
read from, so subcommands compose through pipes.  Exit codes: 0 success,
1 validation failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import constructions, drinfeld, findim, homology, leavitt, quotients
from .dga import DgQuiverAlgebra, declare_weight_homogeneous, validate
from .dot import emit_dot
from .dsl import Document, format_path, parse_document, parse_element, serialize_document
from .elements import PathElement
from .errors import DgQuiverError, ParseError

SCHEMA_PREFIX = "dgquiver"


def _schema(kind: str) -> str:
    return f"{SCHEMA_PREFIX}/{kind}/v1"


def _read_input(args) -> str:
    if args.input == "-":
        return sys.stdin.read()
    with open(args.input, "r", encoding="utf-8") as fh:
        return fh.read()


def _write(args, text: str) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _write_json(args, payload: dict) -> None:
    _write(args, json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _presentation_of(doc: Document) -> constructions.AlgebraPresentation:
    return constructions.AlgebraPresentation.build(doc.algebra.gq, doc.relations)


def _vertex_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError:
        raise ParseError(f"expected comma-separated integers, got {text!r}") from None


def _parse_range(text: str) -> range:
    if ":" in text:
        lo, hi = text.split(":", 1)
        return range(int(lo), int(hi) + 1)
    n = int(text)
    return range(n, n + 1)


def cmd_validate(args) -> int:
    doc = parse_document(_read_input(args))
    report = validate(doc.algebra)
    _write_json(args, {"schema": _schema("validate"),
                       "ok": report.ok, "violations": report.to_json()})
    return 0 if report.ok else 1


def cmd_dot(args) -> int:
    doc = parse_document(_read_input(args))
    _write(args, emit_dot(doc.algebra.gq))
    return 0


def cmd_construct(args) -> int:
    kind = args.kind
    if kind == "mckay":
        weights = _vertex_list(args.weights)
        if len(weights) != 3:
            raise ParseError("--weights needs exactly three integers")
        quiver, potential = constructions.mckay_cyclic(args.n, *weights)
        doc = Document(DgQuiverAlgebra(potential.gq), potential=potential)
        _write(args, serialize_document(doc))
        return 0
    doc = parse_document(_read_input(args))
    if kind == "resolve":
        out = constructions.resolve_gldim2(_presentation_of(doc))
        _write(args, serialize_document(Document(out)))
    elif kind == "auslander":
        data = constructions.auslander_rad2(doc.algebra.gq.quiver)
        if args.presentation:
            _write(args, serialize_document(
                Document(DgQuiverAlgebra(data.presentation.gq),
                         relations=list(data.presentation.relations))))
        else:
            _write(args, serialize_document(Document(data.dg_model)))
    elif kind == "ginzburg":
        if doc.potential is None:
            raise ParseError("input has no potential line")
        out = constructions.ginzburg(doc.algebra.gq.quiver, doc.potential)
        _write(args, serialize_document(Document(out)))
    elif kind == "preprojective":
        out = constructions.derived_preprojective(doc.algebra.gq.quiver, doc.lam)
        _write(args, serialize_document(Document(out)))
    else:
        raise ParseError(f"unknown construction {kind!r}")
    return 0


def cmd_delete_vertex(args) -> int:
    doc = parse_document(_read_input(args))
    out = quotients.delete_vertices(doc.algebra, _vertex_list(args.vertices))
    _write(args, serialize_document(Document(out)))
    return 0


def cmd_homotopy_check(args) -> int:
    doc = parse_document(_read_input(args))
    x = parse_element(args.contraction, doc.algebra.gq)
    report = quotients.verify_contraction(doc.algebra, args.vertex, x, args.max_length)
    _write_json(args, {"schema": _schema("homotopy-check"), **report.to_json()})
    return 0 if report.ok else 1


def cmd_dims(args) -> int:
    doc = parse_document(_read_input(args))
    table = homology.quotient_dim_truncated(_presentation_of(doc), args.max_length)
    _write_json(args, {"schema": _schema("dims"), **table.to_json()})
    return 0


def cmd_cohomology(args) -> int:
    doc = parse_document(_read_input(args))
    algebra = declare_weight_homogeneous(doc.algebra)
    entries = []
    for n in _parse_range(args.deg):
        for w in _parse_range(args.weight):
            entry = homology.truncated_cohomology(algebra, n, w,
                                                  want_representatives=False)
            entries.append(entry.to_json())
    _write_json(args, {"schema": _schema("cohomology"), "entries": entries})
    return 0


def cmd_drinfeld(args) -> int:
    doc = parse_document(_read_input(args))
    A = findim.build_findim(_presentation_of(doc), args.max_length)
    cx = drinfeld.DrinfeldComplex(A, _vertex_list(args.idempotent), args.pmax)
    h0 = drinfeld.drinfeld_h0(A, cx.e_vertices, cx)
    bad_d2 = drinfeld.verify_d_squared(cx)
    bad_leibniz = drinfeld.verify_leibniz(cx, cap=args.check_cap)
    payload = {
        "schema": _schema("drinfeld"),
        "component_dims": {str(k): v for k, v in sorted(cx.component_dims().items())},
        "h0_dim": h0.dim,
        "h0_basis": [format_path(A.gq, A.basis[i]) for i in h0.basis],
        "checks": {"d_squared": bad_d2 is None,
                   "leibniz": bad_leibniz is None,
                   "h0_routes_agree": True},
    }
    _write_json(args, payload)
    return 0 if bad_d2 is None and bad_leibniz is None else 1


def cmd_leavitt(args) -> int:
    doc = parse_document(_read_input(args))
    pres = leavitt.leavitt_presentation(doc.algebra.gq.quiver)
    relations: list[PathElement] = []
    for v in sorted(pres.ck1a):
        relations.append(pres.ck1a[v])
    for b in sorted(pres.ck1b):
        relations.append(pres.ck1b[b])
    relations.extend(pres.ck1c)
    pres_doc = Document(DgQuiverAlgebra(pres.gq), relations=relations)
    if args.format == "dsl":
        _write(args, serialize_document(pres_doc))
        return 0
    dims = {}
    for n in range(-args.max_degree, args.max_degree + 1):
        dims[str(n)] = leavitt.leavitt_graded_dim(
            doc.algebra.gq.quiver, n, args.word_length, pres)
    _write_json(args, {"schema": _schema("leavitt"),
                       "presentation": serialize_document(pres_doc),
                       "word_length": args.word_length,
                       "graded_dims": dims})
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", help="write output to this file instead of stdout")
    common.add_argument("--json-errors", action="store_true",
                        help="emit machine-readable errors on stderr")

    def add_input(sp):
        sp.add_argument("input", nargs="?", default="-",
                        help="input DSL file, or - for stdin")

    parser = argparse.ArgumentParser(
        prog="dgquiver",
        description="Exact-arithmetic toolkit for differential graded quiver algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common],
                       help="check dg-algebra axioms; exit 1 on violations")
    add_input(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("construct", parents=[common],
                       help="generate a named dg algebra")
    p.add_argument("kind", choices=["resolve", "auslander", "ginzburg",
                                    "preprojective", "mckay"])
    add_input(p)
    p.add_argument("--presentation", action="store_true",
                   help="for auslander: emit the presentation instead of the dg model")
    p.add_argument("--n", type=int, default=1, help="for mckay: order of the group")
    p.add_argument("--weights", default="0,0,0",
                   help="for mckay: a1,a2,a3 with a1+a2+a3 = 0 mod n")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("delete-vertex", parents=[common],
                       help="quotient by the ideal of the given vertices")
    add_input(p)
    p.add_argument("--vertices", required=True, help="comma-separated vertex ids")
    p.set_defaults(func=cmd_delete_vertex)

    p = sub.add_parser("homotopy-check", parents=[common],
                       help="verify dh + hd = id on through-vertex paths")
    add_input(p)
    p.add_argument("--vertex", type=int, required=True)
    p.add_argument("--contraction", required=True,
                   help="element x with d(x) = e_vertex, in element syntax")
    p.add_argument("--max-length", type=int, default=6)
    p.set_defaults(func=cmd_homotopy_check)

    p = sub.add_parser("drinfeld", parents=[common],
                       help="truncated Drinfeld quotient report for a presentation")
    add_input(p)
    p.add_argument("--idempotent", required=True, help="comma-separated vertex ids")
    p.add_argument("--pmax", type=int, default=2)
    p.add_argument("--max-length", type=int, default=8,
                   help="truncation bound used to materialize the algebra")
    p.add_argument("--check-cap", type=int, default=2000)
    p.set_defaults(func=cmd_drinfeld)

    p = sub.add_parser("leavitt", parents=[common],
                       help="Leavitt presentation and graded dimensions")
    add_input(p)
    p.add_argument("--format", choices=["dsl", "json"], default="dsl")
    p.add_argument("--max-degree", type=int, default=3)
    p.add_argument("--word-length", type=int, default=6)
    p.set_defaults(func=cmd_leavitt)

    p = sub.add_parser("cohomology", parents=[common],
                       help="truncated cohomology dimensions (weightwise)")
    add_input(p)
    p.add_argument("--deg", required=True, help="degree n or range a:b (use --deg=-2:0)")
    p.add_argument("--weight", required=True, help="weight w or range a:b")
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("dims", parents=[common],
                       help="truncated quotient dimension table for a presentation")
    add_input(p)
    p.add_argument("--max-length", type=int, required=True)
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("dot", parents=[common], help="emit Graphviz DOT")
    add_input(p)
    p.set_defaults(func=cmd_dot)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        if getattr(args, "json_errors", False):
            sys.stderr.write(json.dumps(
                {"schema": _schema("error"),
                 "error": {"kind": "parse", "message": exc.message,
                           "line": exc.line, "col": exc.col}},
                sort_keys=True) + "\n")
        else:
            sys.stderr.write(f"error: {exc}\n")
        return 2
    except DgQuiverError as exc:
        if getattr(args, "json_errors", False):
            sys.stderr.write(json.dumps(
                {"schema": _schema("error"),
                 "error": {"kind": type(exc).__name__, "message": str(exc)}},
                sort_keys=True) + "\n")
        else:
            sys.stderr.write(f"error: {exc}\n")
        return 2
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
