"""Text input format, analysis reports and DOT export.

Input is line oriented, ``#`` starts a comment::

    field Q                       # or: field F 5
    vertex s u d t
    arrow a1 s u
    arrow a2 u t
    arrow b1 s d
    arrow b2 d t
    nilpotency 3
    relation a1*a2 - b1*b2        # terms: [coeff [*]] arrow(*arrow)*
    rotation s a1+ b1+            # counterclockwise darts leaving s
    rotation u a2+ a1-
    rotation t a2- b2-
    rotation d b2+ b1-
    outer a1-                     # any dart on the unbounded face
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .algebra import AlgebraElement, IdealSpec, QuotientPresentation, build_presentation
from .derivations import f2_subspace, standard_basis
from .linalg import FieldSpec, _is_prime
from .planar import Dart, EmbeddingError, FaceSet, RotationSystem, build_embedding
from .quiver import Quiver, QuiverError

IDENT = r"[A-Za-z_][A-Za-z0-9_']*"
_IDENT_RE = re.compile(rf"{IDENT}\Z")
_TOKEN_RE = re.compile(rf"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<id>{IDENT})|(?P<op>[-+*]))")
KEYWORDS = ("field", "vertex", "arrow", "nilpotency", "relation", "rotation", "outer", "request")
REQUESTS = ("analyze", "diff", "h1", "hh1", "faces", "oracle")

Term = tuple[Fraction, tuple[str, ...]]


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 0, column: int = 0, kind: str = "syntax"):
        self.message, self.line, self.column, self.kind = message, line, column, kind
        super().__init__(f"line {line}, column {column}: {message}" if line else message)


@dataclass(frozen=True)
class ProblemSpec:
    vertices: tuple[str, ...]
    arrows: tuple[tuple[str, str, str], ...]
    nilpotency: int
    field: FieldSpec = FieldSpec()
    relations: tuple[tuple[Term, ...], ...] = ()
    rotation: tuple[tuple[str, tuple[str, ...]], ...] | None = None
    outer: str | None = None
    requested: tuple[str, ...] = dc_field(default=())

    def quiver(self) -> Quiver:
        return Quiver(self.vertices, self.arrows)

    def presentation(self, field: FieldSpec | None = None) -> QuotientPresentation:
        field = field or self.field
        q = self.quiver()
        rels = tuple(AlgebraElement.from_terms(q, field, r) for r in self.relations)
        return build_presentation(q, IdealSpec(rels, self.nilpotency), field)

    def embedding(self, quiver: Quiver | None = None) -> FaceSet | None:
        if self.rotation is None:
            return None
        rot = RotationSystem.from_strings(dict(self.rotation))
        outer = Dart.parse(self.outer) if self.outer else None
        return build_embedding(quiver or self.quiver(), rot, outer)


# -- parsing ----------------------------------------------------------------


def _parse_relation(text: str, offset: int, lineno: int) -> list[tuple[Term, int]]:
    """Terms with the 1-based column where each path starts."""
    pos = 0
    toks = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN_RE.match(text, pos)
        if not m:
            col = offset + len(text[:pos]) + len(text[pos:]) - len(text[pos:].lstrip()) + 1
            raise ParseError(f"unexpected character {text[pos:].lstrip()[0]!r}", lineno, col)
        kind = m.lastgroup
        start = m.start(kind)
        toks.append((kind, m.group(kind), offset + start + 1))
        pos = m.end()
    toks.append(("end", "", offset + len(text) + 1))
    i = 0

    def peek():
        return toks[i]

    terms = []
    sign = 1
    if peek()[0] == "op" and peek()[1] in "+-":
        sign = -1 if peek()[1] == "-" else 1
        i += 1
    while True:
        coeff = Fraction(1)
        kind, val, col = peek()
        if kind == "num":
            coeff = Fraction(val)
            i += 1
            if peek()[:2] == ("op", "*"):
                i += 1
            kind, val, col = peek()
        if kind != "id":
            raise ParseError(f"expected an arrow id, found {val or 'end of line'!r}", lineno, col)
        path_col = col
        word = [val]
        i += 1
        while peek()[:2] == ("op", "*"):
            i += 1
            kind, val, col = peek()
            if kind != "id":
                raise ParseError(f"expected an arrow id after '*', found {val or 'end of line'!r}", lineno, col)
            word.append(val)
            i += 1
        terms.append(((sign * coeff, tuple(word)), path_col))
        kind, val, col = peek()
        if kind == "end":
            return terms
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            i += 1
            continue
        raise ParseError(f"expected '+', '-' or end of line, found {val!r}", lineno, col)


def parse_input(text: str) -> ProblemSpec:
    vertices: list[tuple[str, int, int]] = []
    arrows: list[tuple[tuple[str, str, str], int, int]] = []
    relations: list[tuple[list[tuple[Term, int]], int]] = []
    rotation: list[tuple[str, tuple[str, ...], int]] = []
    field, nilpotency, outer = FieldSpec(), None, None
    requested: list[str] = []
    seen_field = False

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        words = [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", line)]
        if not words:
            continue
        (kw, kwcol), args = words[0], words[1:]
        if kw not in KEYWORDS:
            raise ParseError(f"unknown keyword {kw!r}", lineno, kwcol)

        def need(n, what):
            if len(args) != n:
                col = args[n][1] if len(args) > n else len(line.rstrip()) + 1
                raise ParseError(f"'{kw}' expects {what}", lineno, col)

        def ident(word, col):
            if not _IDENT_RE.match(word):
                raise ParseError(f"invalid identifier {word!r}", lineno, col)
            return word

        if kw == "field":
            if seen_field:
                raise ParseError("field declared twice", lineno, kwcol, "semantic")
            seen_field = True
            if len(args) == 1 and args[0][0] == "Q":
                field = FieldSpec()
            elif len(args) == 2 and args[0][0] == "F" and args[1][0].isdigit():
                p = int(args[1][0])
                if not _is_prime(p):
                    raise ParseError(f"{p} is not prime", lineno, args[1][1], "semantic")
                field = FieldSpec(p)
            else:
                raise ParseError("expected 'field Q' or 'field F <prime>'", lineno, kwcol)
        elif kw == "vertex":
            if not args:
                raise ParseError("'vertex' expects at least one id", lineno, kwcol)
            vertices.extend((ident(w, c), lineno, c) for w, c in args)
        elif kw == "arrow":
            need(3, "an id, a tail and a head")
            ids = tuple(ident(w, c) for w, c in args)
            arrows.append((ids, lineno, args[0][1]))
        elif kw == "nilpotency":
            need(1, "one integer")
            if nilpotency is not None:
                raise ParseError("nilpotency declared twice", lineno, kwcol, "semantic")
            if not re.fullmatch(r"-?\d+", args[0][0]):
                raise ParseError("nilpotency must be an integer", lineno, args[0][1])
            nilpotency = (int(args[0][0]), lineno, args[0][1])
        elif kw == "relation":
            if not args:
                raise ParseError("'relation' expects an expression", lineno, kwcol)
            start = args[0][1] - 1
            relations.append((_parse_relation(line[start:].rstrip(), start, lineno), lineno))
        elif kw == "rotation":
            if not args:
                raise ParseError("'rotation' expects a vertex id", lineno, kwcol)
            for w, c in args[1:]:
                if not re.fullmatch(rf"{IDENT}[+-]", w):
                    raise ParseError(f"invalid dart {w!r} (use arrow+ or arrow-)", lineno, c)
            rotation.append((ident(*args[0]), tuple(w for w, _ in args[1:]), lineno))
        elif kw == "outer":
            need(1, "one dart")
            if not re.fullmatch(rf"{IDENT}[+-]", args[0][0]):
                raise ParseError(f"invalid dart {args[0][0]!r}", lineno, args[0][1])
            outer = (args[0][0], lineno, args[0][1])
        elif kw == "request":
            for w, c in args:
                if w not in REQUESTS:
                    raise ParseError(f"unknown request {w!r}", lineno, c)
                requested.append(w)

    # semantic checks
    def sem(msg, line=0, col=0):
        return ParseError(msg, line, col, "semantic")

    if not vertices:
        raise sem("no vertices declared")
    if nilpotency is None:
        raise sem("missing 'nilpotency' line")
    vnames = [v for v, _, _ in vertices]
    for i, (v, ln, c) in enumerate(vertices):
        if v in vnames[:i]:
            raise sem(f"duplicate vertex {v!r}", ln, c)
    arrow_ends = {}
    for (aid, t, h), ln, c in arrows:
        if aid in arrow_ends:
            raise sem(f"duplicate arrow {aid!r}", ln, c)
        for end in (t, h):
            if end not in vnames:
                raise sem(f"arrow {aid} uses unknown vertex {end!r}", ln, c)
        arrow_ends[aid] = (t, h)
    N, nln, ncol = nilpotency
    if N < 2:
        raise sem(f"nilpotency bound must be >= 2, got {N}", nln, ncol)
    for terms, ln in relations:
        for (coeff, word), col in terms:
            for a in word:
                if a not in arrow_ends:
                    raise sem(f"unknown arrow {a!r}", ln, col)
            for x, y in zip(word, word[1:]):
                if arrow_ends[x][1] != arrow_ends[y][0]:
                    raise sem(
                        f"non-composable path {'*'.join(word)}: head of {x} is {arrow_ends[x][1]}, "
                        f"tail of {y} is {arrow_ends[y][0]}",
                        ln,
                        col,
                    )
            if field.p and coeff.denominator % field.p == 0:
                raise sem(f"coefficient {coeff} is undefined in {field}", ln, col)
            if len(word) < 2:
                raise sem(f"relation term not in R^2: {'*'.join(word)} has length {len(word)}", ln, col)
    try:
        quiver = Quiver(vnames, [a for a, _, _ in arrows])
    except QuiverError as exc:
        raise sem(str(exc)) from None

    rot = None
    if rotation:
        seen_v = set()
        for v, _, ln in rotation:
            if v in seen_v:
                raise sem(f"rotation at {v!r} given twice", ln, 1)
            seen_v.add(v)
        try:
            RotationSystem.from_strings({v: darts for v, darts, _ in rotation}).validate(quiver)
        except (EmbeddingError, QuiverError) as exc:
            raise sem(str(exc), rotation[0][2], 1) from None
        rot = tuple((v, darts) for v, darts, _ in rotation)
    if outer is not None:
        if rot is None:
            raise sem("'outer' given without a rotation system", outer[1], outer[2])
        if outer[0][:-1] not in arrow_ends:
            raise sem(f"outer dart names unknown arrow {outer[0][:-1]!r}", outer[1], outer[2])
    elif rot is not None and arrows:
        raise sem("a rotation system needs an 'outer' dart")

    return ProblemSpec(
        vertices=tuple(vnames),
        arrows=tuple(a for a, _, _ in arrows),
        nilpotency=N,
        field=field,
        relations=tuple(tuple(t for t, _ in terms) for terms, _ in relations),
        rotation=rot,
        outer=outer[0] if outer else None,
        requested=tuple(requested),
    )


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_relation(terms) -> str:
    out = []
    for k, (c, word) in enumerate(terms):
        c = Fraction(c)
        neg = c < 0
        mag = -c if neg else c
        body = "*".join(word) if mag == 1 else f"{_format_coeff(mag)} {'*'.join(word)}"
        if k == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append(("- " if neg else "+ ") + body)
    return " ".join(out)


def format_problem(spec: ProblemSpec) -> str:
    lines = ["field Q" if spec.field.is_rational else f"field F {spec.field.p}"]
    lines.append("vertex " + " ".join(spec.vertices))
    lines.extend(f"arrow {a} {t} {h}" for a, t, h in spec.arrows)
    lines.append(f"nilpotency {spec.nilpotency}")
    lines.extend(f"relation {format_relation(r)}" for r in spec.relations)
    for v, darts in spec.rotation or ():
        lines.append(" ".join(["rotation", v, *darts]))
    if spec.outer:
        lines.append(f"outer {spec.outer}")
    if spec.requested:
        lines.append("request " + " ".join(spec.requested))
    return "\n".join(lines) + "\n"


# -- DOT ------------------------------------------------------------------


def _dot_id(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(spec: ProblemSpec | Quiver) -> str:
    q = spec.quiver() if isinstance(spec, ProblemSpec) else spec
    lines = ["digraph quiver {"]
    lines.extend(f"  {_dot_id(v)};" for v in q.vertices)
    lines.extend(f"  {_dot_id(a.tail)} -> {_dot_id(a.head)} [label={_dot_id(a.id)}];" for a in q.arrows)
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- analysis report --------------------------------------------------------


@dataclass
class AnalysisReport:
    field: str
    vertices: int
    arrows: int
    nilpotency: int
    dim_algebra: int
    q_a: int
    q_c: int
    acyclic_algebra: bool
    monomial: bool
    complete_monomial: bool | None
    truncated: int | None
    b1: int
    b2: int
    dim_diff: int
    dim_center: int
    dim_inner: int
    dim_h1: int
    dim_f2: int
    dim_hh1: int
    caveats: list[str] = dc_field(default_factory=list)

    def to_dict(self) -> dict:
        return dict(self.__dict__)

    def to_text(self) -> str:
        yn = lambda b: "yes" if b else "no"
        lines = [
            f"field = {self.field}",
            f"|V| = {self.vertices}, |E| = {self.arrows}, N = {self.nilpotency}",
            f"dim A = {self.dim_algebra} (|Q_A| = {self.q_a}, |Q_C| = {self.q_c})",
            f"acyclic algebra: {yn(self.acyclic_algebra)}",
            f"monomial: {yn(self.monomial)}",
        ]
        if self.complete_monomial is not None:
            lines.append(f"complete monomial: {yn(self.complete_monomial)}")
        lines.append(
            f"truncated: n = {self.truncated}" if self.truncated is not None else "truncated: no"
        )
        lines += [
            f"|B1| = {self.b1}, |B2| = {self.b2}, dim Diff = {self.dim_diff}",
            f"dim Z = {self.dim_center}",
            f"dim Inn = {self.dim_inner}",
            f"dim H1 = {self.dim_h1}    (|B2| + dim Z - |Q_C| = {self.b2} + {self.dim_center} - {self.q_c})",
            f"dim F2 = {self.dim_f2}",
            f"dim HH1 = {self.dim_hh1}    (dim F2 + dim Z - |Q_C| = {self.dim_f2} + {self.dim_center} - {self.q_c})",
        ]
        lines.extend(f"note: {c}" for c in self.caveats)
        return "\n".join(lines) + "\n"


def analyze(p: QuotientPresentation) -> AnalysisReport:
    sb = standard_basis(p)
    f2 = f2_subspace(p)
    mono = p.is_monomial()
    caveats = []
    if f2.caveat:
        caveats.append(f2.caveat)
    if not mono:
        caveats.append("monomial test is syntactic; a change of generators is not detected")
    return AnalysisReport(
        field=str(p.field),
        vertices=len(p.quiver.vertices),
        arrows=len(p.quiver.arrows),
        nilpotency=p.nilpotency,
        dim_algebra=p.dimension,
        q_a=len(p.Q_A),
        q_c=len(p.Q_C),
        acyclic_algebra=p.is_acyclic_algebra,
        monomial=mono,
        complete_monomial=p.is_complete_monomial() if mono else None,
        truncated=p.is_truncated(),
        b1=len(sb.B1),
        b2=len(sb.B2),
        dim_diff=sb.dim_diff,
        dim_center=sb.dim_center,
        dim_inner=sb.dim_inner,
        dim_h1=sb.dim_h1,
        dim_f2=f2.dim_f2,
        dim_hh1=f2.dim_hh1,
        caveats=caveats,
    )
