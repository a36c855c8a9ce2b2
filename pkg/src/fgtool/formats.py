"""Line-based text formats for complexes, posets, quivers and presentations.

::

    # complex                # poset              # quiver
    simplex a                elem a               vertex a
    simplex b                elem b               vertex b
    simplex a b              rel a < b            arrow f a b

Presentations are written as ``gens:``, ``rel:`` and invariant lines; words
are space-separated ``g`` / ``g^-1`` tokens. Lines starting with ``#`` are
comments everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .combinatorics import (
    Poset,
    Quiver,
    SimplicialComplex,
    close_down,
    make_poset,
    make_quiver,
    transitive_closure,
    validate_complex,
)
from .errors import DuplicateId, InputSyntaxError, MissingFace, UnknownLabel
from .groups import InvariantReport, Presentation, format_word, parse_word

KINDS = {"simplex": "complex", "elem": "poset", "rel": "poset", "vertex": "quiver", "arrow": "quiver"}


@dataclass(frozen=True)
class Record:
    directive: str
    args: tuple[str, ...]
    line: int


@dataclass(frozen=True)
class InputDocument:
    kind: str
    records: tuple[Record, ...]
    source: str = field(default="<input>", compare=False)


def _lines(text):
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield number, stripped.split()


def parse_input(text: str, source: str = "<input>") -> InputDocument:
    """Tokenize and check a structure file; label checks happen here too."""
    kind = None
    records = []
    for number, tokens in _lines(text):
        directive, args = tokens[0], tuple(tokens[1:])
        if directive not in KINDS:
            raise InputSyntaxError(f"unknown directive {directive!r}", number)
        this = KINDS[directive]
        if kind is None:
            kind = this
        elif kind != this:
            raise InputSyntaxError(f"{directive!r} line in a {kind} file", number)
        records.append(Record(directive, args, number))
    if kind is None:
        raise InputSyntaxError("empty input: no simplex, elem, rel, vertex or arrow lines")
    doc = InputDocument(kind, tuple(records), source)
    _check(doc)
    return doc


def _check(doc: InputDocument):
    if doc.kind == "complex":
        seen = set()
        for r in doc.records:
            if not r.args:
                raise InputSyntaxError("simplex needs at least one vertex", r.line)
            s = frozenset(r.args)
            if len(s) != len(r.args):
                raise InputSyntaxError("repeated vertex in simplex", r.line)
            if s in seen:
                raise DuplicateId(f"simplex {' '.join(sorted(s))} listed twice", r.line)
            seen.add(s)
    elif doc.kind == "poset":
        elems = set()
        for r in doc.records:
            if r.directive == "elem":
                if len(r.args) != 1:
                    raise InputSyntaxError("expected 'elem LABEL'", r.line)
                if r.args[0] in elems:
                    raise DuplicateId(f"element {r.args[0]!r} declared twice", r.line)
                elems.add(r.args[0])
        rels = set()
        for r in doc.records:
            if r.directive != "rel":
                continue
            if len(r.args) != 3 or r.args[1] != "<":
                raise InputSyntaxError("expected 'rel X < Y'", r.line)
            x, y = r.args[0], r.args[2]
            for v in (x, y):
                if v not in elems:
                    raise UnknownLabel(f"element {v!r} is not declared", r.line)
            if x == y:
                raise InputSyntaxError(f"relation {x} < {x} is reflexive", r.line)
            rels.add((x, y))
            if any(a == b for a, b in transitive_closure(elems, rels)):
                raise InputSyntaxError("relations form a cycle", r.line)
    else:
        verts, ids = set(), set()
        for r in doc.records:
            if r.directive == "vertex":
                if len(r.args) != 1:
                    raise InputSyntaxError("expected 'vertex LABEL'", r.line)
                if r.args[0] in verts:
                    raise DuplicateId(f"vertex {r.args[0]!r} declared twice", r.line)
                verts.add(r.args[0])
        for r in doc.records:
            if r.directive != "arrow":
                continue
            if len(r.args) != 3:
                raise InputSyntaxError("expected 'arrow ID SOURCE TARGET'", r.line)
            arrow_id, s, t = r.args
            if arrow_id in ids:
                raise DuplicateId(f"arrow id {arrow_id!r} used twice", r.line)
            ids.add(arrow_id)
            for v in (s, t):
                if v not in verts:
                    raise UnknownLabel(f"vertex {v!r} is not declared", r.line)
            if s == t:
                raise InputSyntaxError(f"arrow {arrow_id!r} is a loop", r.line)


def build(doc: InputDocument, close: bool = False):
    """Turn a checked document into a SimplicialComplex, Poset or Quiver."""
    if doc.kind == "complex":
        simplexes = [r.args for r in doc.records]
        if close:
            faces = close_down(simplexes)
        else:
            faces = {frozenset(s) for s in simplexes}
            for r in doc.records:
                for v in r.args:
                    face = frozenset(r.args) - {v}
                    if face and face not in faces:
                        missing = " ".join(sorted(face))
                        raise MissingFace(f"line {r.line}: face {{{missing}}} is not listed (use --close-down)")
        vertices = {v for s in simplexes for v in s}
        return validate_complex(vertices, faces)
    if doc.kind == "poset":
        elems = [r.args[0] for r in doc.records if r.directive == "elem"]
        rels = {(r.args[0], r.args[2]) for r in doc.records if r.directive == "rel"}
        return make_poset(elems, rels)
    verts = [r.args[0] for r in doc.records if r.directive == "vertex"]
    return make_quiver(verts, [r.args for r in doc.records if r.directive == "arrow"])


def parse_structure(text: str, close: bool = False):
    return build(parse_input(text), close)


# ---------------------------------------------------------------------------
# serialization


def serialize_structure(value) -> str:
    lines = []
    if isinstance(value, SimplicialComplex):
        for s in sorted((tuple(sorted(s)) for s in value.simplexes), key=lambda s: (len(s), s)):
            lines.append("simplex " + " ".join(s))
    elif isinstance(value, Poset):
        lines += [f"elem {x}" for x in value.elements]
        lines += [f"rel {x} < {y}" for x, y in value.covers()]
    elif isinstance(value, Quiver):
        lines += [f"vertex {v}" for v in value.vertices]
        lines += [f"arrow {a.id} {a.source} {a.target}" for a in value.arrows]
    else:
        raise TypeError(f"cannot serialize {type(value).__name__}")
    return "\n".join(lines) + "\n"


def serialize_invariants(report: InvariantReport) -> str:
    lines = [f"invariants: rank {report.abelian_rank}"]
    lines.append("torsion:" + "".join(f" {d}" for d in report.torsion))
    lines.append("homs:" + "".join(f" {k}={v}" for k, v in report.hom_counts.items()))
    lines += [f"notice: {n}" for n in report.notices]
    return "\n".join(lines) + "\n"


def serialize_presentation(p: Presentation, report: InvariantReport | None = None) -> str:
    lines = ["gens:" + "".join(f" {g}" for g in p.generators)]
    lines += [f"rel: {format_word(r)}" for r in p.relators]
    text = "\n".join(lines) + "\n"
    if report is not None:
        text += serialize_invariants(report)
    return text


def parse_presentation(text: str):
    """Inverse of :func:`serialize_presentation`: returns (presentation, report or None)."""
    gens = None
    rels = []
    rank = None
    torsion: tuple[int, ...] = ()
    homs: dict[str, int] = {}
    notices = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, _, rest = line.partition(":")
        rest = rest.strip()
        try:
            if key == "gens":
                if gens is not None:
                    raise DuplicateId("second gens line", number)
                gens = tuple(rest.split())
            elif key == "rel":
                rels.append(parse_word(rest))
            elif key == "invariants":
                word_, value = rest.split()
                if word_ != "rank":
                    raise ValueError
                rank = int(value)
            elif key == "torsion":
                torsion = tuple(int(x) for x in rest.split())
            elif key == "homs":
                for item in rest.split():
                    name, value = item.split("=")
                    homs[name] = int(value)
            elif key == "notice":
                notices.append(rest)
            else:
                raise InputSyntaxError(f"unknown key {key!r}", number)
        except ValueError:
            raise InputSyntaxError(f"malformed {key!r} line", number) from None
    if gens is None:
        raise InputSyntaxError("missing gens line")
    known = set(gens)
    for r in rels:
        for g, _e in r:
            if g not in known:
                raise UnknownLabel(f"relator uses undeclared generator {g!r}")
    report = InvariantReport(rank, torsion, homs, tuple(notices)) if rank is not None else None
    return Presentation(gens, tuple(rels)), report
