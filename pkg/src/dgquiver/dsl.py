"""Text DSL for quivers, differentials, relations, potentials, and lambdas.

One declaration per line; ``#`` starts a comment.  Grammar:

    vertex <id> [label]
    arrow <name> <src> -> <tgt> [deg <int>] [weight <int>]
    d <arrowname> = <element>
    relation <element>
    potential <element>
    lambda <vertexid> = <rational>

Elements are sums of terms ``[rational] factor...`` separated by standalone
``+``/``-`` tokens; a factor is an arrow name or ``e<vertex>``; factors are
juxtaposed in function order (rightmost applied first).  ``0`` is the zero
element.  Serialization is canonical, so parse(serialize(x)) == x.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .dga import DgQuiverAlgebra
from .elements import PathElement, Potential
from .errors import ParseError
from .quiver import GradedQuiver, Path, Quiver, compose

_INT_RE = re.compile(r"^-?\d+$")
_RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")
_TRIVIAL_RE = re.compile(r"^e(-?\d+)$")
_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_'*]*$")


@dataclass
class Document:
    """A parsed DSL file: an algebra plus optional relation/potential/lambda data."""

    algebra: DgQuiverAlgebra
    relations: list = field(default_factory=list)
    potential: Optional[Potential] = None
    lam: dict = field(default_factory=dict)

    def __post_init__(self):
        self.lam = {v: Fraction(c) for v, c in self.lam.items() if Fraction(c)}

    def __eq__(self, other):
        if not isinstance(other, Document):
            return NotImplemented
        return (self.algebra == other.algebra and self.relations == other.relations
                and self.potential == other.potential and self.lam == other.lam)


def _split_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if line.strip():
            yield lineno, line


def parse_document(text: str) -> Document:
    verts: list = []
    vert_ids: set[int] = set()
    arrow_decls: list[tuple[str, int, int]] = []
    arrow_names: set[str] = set()
    degrees: list[int] = []
    weights: list[Optional[int]] = []
    deferred: list[tuple[int, str, list[str], str]] = []

    for lineno, line in _split_lines(text):
        toks = line.split()
        head = toks[0]
        if head == "vertex":
            if len(toks) not in (2, 3):
                raise ParseError("vertex line needs an id and optional label", lineno, 1)
            if not _INT_RE.match(toks[1]):
                raise ParseError(f"vertex id must be an integer, got {toks[1]!r}", lineno, 1)
            vid = int(toks[1])
            if vid in vert_ids:
                raise ParseError(f"duplicate vertex id {vid}", lineno, 1)
            vert_ids.add(vid)
            verts.append((vid, toks[2]) if len(toks) == 3 else vid)
        elif head == "arrow":
            if len(toks) < 5 or toks[3] != "->":
                raise ParseError("arrow line must be: arrow <name> <src> -> <tgt> "
                                 "[deg <int>] [weight <int>]", lineno, 1)
            name = toks[1]
            if not _NAME_RE.match(name) or _TRIVIAL_RE.match(name):
                raise ParseError(f"invalid arrow name {name!r}", lineno, 1)
            if name in arrow_names:
                raise ParseError(f"duplicate arrow name {name!r}", lineno, 1)
            if not (_INT_RE.match(toks[2]) and _INT_RE.match(toks[4])):
                raise ParseError("arrow endpoints must be integer vertex ids", lineno, 1)
            deg, wt = 0, None
            rest = toks[5:]
            while rest:
                if rest[0] == "deg" and len(rest) >= 2 and _INT_RE.match(rest[1]):
                    deg = int(rest[1])
                elif rest[0] == "weight" and len(rest) >= 2 and _INT_RE.match(rest[1]):
                    wt = int(rest[1])
                else:
                    raise ParseError(f"unexpected token {rest[0]!r} in arrow line", lineno, 1)
                rest = rest[2:]
            arrow_names.add(name)
            arrow_decls.append((name, int(toks[2]), int(toks[4])))
            degrees.append(deg)
            weights.append(wt)
        elif head in ("d", "relation", "potential", "lambda"):
            deferred.append((lineno, head, toks[1:], line))
        else:
            raise ParseError(f"unknown declaration {head!r}", lineno, 1)

    if not verts:
        raise ParseError("no vertices")
    try:
        quiver = Quiver.build(verts, arrow_decls)
    except Exception as exc:
        raise ParseError(str(exc)) from exc
    weighted = [w for w in weights if w is not None]
    if weighted and len(weighted) != len(weights):
        raise ParseError("weight must be given for all arrows or none")
    gq = GradedQuiver.build(
        quiver,
        {i: degrees[i] for i in range(len(degrees))},
        {i: weights[i] for i in range(len(weights))} if weighted else None)

    d: dict[int, PathElement] = {}
    relations: list[PathElement] = []
    potential: Optional[Potential] = None
    lam: dict[int, Fraction] = {}
    for lineno, head, toks, line in deferred:
        if head == "d":
            if len(toks) < 3 or toks[1] != "=":
                raise ParseError("d line must be: d <arrow> = <element>", lineno, 1)
            try:
                arrow = quiver.arrow_named(toks[0])
            except Exception:
                raise ParseError(f"unknown arrow {toks[0]!r} in d line", lineno, 1) from None
            if arrow.ident in d:
                raise ParseError(f"duplicate d line for arrow {toks[0]!r}", lineno, 1)
            d[arrow.ident] = parse_element(" ".join(toks[2:]), gq, lineno)
        elif head == "relation":
            relations.append(parse_element(" ".join(toks), gq, lineno))
        elif head == "potential":
            if potential is not None:
                raise ParseError("multiple potential lines", lineno, 1)
            elem = parse_element(" ".join(toks), gq, lineno)
            try:
                potential = Potential.from_element(elem)
            except Exception as exc:
                raise ParseError(f"invalid potential: {exc}", lineno, 1) from exc
        else:
            if len(toks) != 3 or toks[1] != "=" or not _INT_RE.match(toks[0]):
                raise ParseError("lambda line must be: lambda <vertexid> = <rational>",
                                 lineno, 1)
            vid = int(toks[0])
            if vid not in vert_ids:
                raise ParseError(f"lambda references undeclared vertex {vid}", lineno, 1)
            if vid in lam:
                raise ParseError(f"duplicate lambda line for vertex {vid}", lineno, 1)
            if not _RATIONAL_RE.match(toks[2]):
                raise ParseError(f"invalid rational {toks[2]!r}", lineno, 1)
            lam[vid] = Fraction(toks[2])

    return Document(DgQuiverAlgebra(gq, d), relations, potential, lam)


def parse_quiver(text: str) -> GradedQuiver:
    return parse_document(text).algebra.gq


def parse_element(text: str, gq: GradedQuiver, lineno: Optional[int] = None) -> PathElement:
    """Parse element syntax over an already-built graded quiver."""
    toks = text.split()
    if not toks:
        raise ParseError("empty element", lineno)
    if toks == ["0"]:
        return PathElement.zero(gq)

    terms: list[tuple[Fraction, list[str]]] = []
    sign = Fraction(1)
    coeff: Optional[Fraction] = None
    factors: list[str] = []

    def flush():
        nonlocal coeff, factors
        if coeff is None and not factors:
            raise ParseError("empty term in element", lineno)
        terms.append((sign * (coeff if coeff is not None else Fraction(1)), factors))
        coeff, factors = None, []

    first = True
    for tok in toks:
        if tok in ("+", "-"):
            if first:
                if tok == "-":
                    sign = Fraction(-1)
                first = False
                continue
            flush()
            sign = Fraction(-1) if tok == "-" else Fraction(1)
            continue
        if _RATIONAL_RE.match(tok):
            if coeff is not None or factors:
                raise ParseError(f"misplaced rational {tok!r} inside a term", lineno)
            coeff = Fraction(tok)
        else:
            factors.append(tok)
        first = False
    flush()

    acc = PathElement.zero(gq)
    for c, facs in terms:
        if not facs:
            raise ParseError("term without a path", lineno)
        path: Optional[Path] = None
        for tok in facs:
            m = _TRIVIAL_RE.match(tok)
            if m:
                vid = int(m.group(1))
                if not gq.quiver.has_vertex(vid):
                    raise ParseError(f"unknown vertex in {tok!r}", lineno)
                factor = gq.trivial(vid)
            else:
                try:
                    factor = gq.arrow_path(gq.quiver.arrow_named(tok).ident)
                except Exception:
                    raise ParseError(f"unknown arrow {tok!r}", lineno) from None
            path = factor if path is None else compose(path, factor)
            if path is None:
                raise ParseError(
                    f"term does not compose: endpoint mismatch at {tok!r}", lineno)
        acc = acc + PathElement.of_path(gq, path, c)
    return acc


def format_rational(c: Fraction) -> str:
    return str(c)


def format_path(gq: GradedQuiver, p: Path) -> str:
    if p.is_trivial:
        return f"e{p.source}"
    return " ".join(gq.quiver.arrow(a).name for a in p.arrows)


def format_element(elem: PathElement) -> str:
    if elem.is_zero:
        return "0"
    bits: list[str] = []
    for i, p in enumerate(elem.support()):
        c = elem.terms[p]
        mag = abs(c)
        body = format_path(elem.gq, p)
        if mag != 1:
            body = f"{format_rational(mag)} {body}"
        if i == 0 and c > 0:
            bits.append(body)
        else:
            bits.append(("- " if c < 0 else "+ ") + body)
    return " ".join(bits)


def serialize_document(doc: Document) -> str:
    gq = doc.algebra.gq
    quiver = gq.quiver
    lines: list[str] = []
    for v in quiver.vertices:
        label = quiver.labels.get(v)
        lines.append(f"vertex {v}" + (f" {label}" if label else ""))
    for a in quiver.arrows:
        line = f"arrow {a.name} {a.source} -> {a.target}"
        if gq.degree[a.ident]:
            line += f" deg {gq.degree[a.ident]}"
        if gq.weight is not None:
            line += f" weight {gq.weight[a.ident]}"
        lines.append(line)
    for a in quiver.arrows:
        dx = doc.algebra.d.get(a.ident)
        if dx is not None and dx:
            lines.append(f"d {a.name} = {format_element(dx)}")
    for rel in doc.relations:
        lines.append(f"relation {format_element(rel)}")
    if doc.potential is not None and doc.potential:
        lines.append(f"potential {format_element(doc.potential)}")
    for v in sorted(doc.lam):
        lines.append(f"lambda {v} = {format_rational(doc.lam[v])}")
    return "\n".join(lines) + "\n"


def serialize_algebra(A: DgQuiverAlgebra) -> str:
    return serialize_document(Document(A))
