"""Line-oriented text formats.

All formats share the same lexical rules: one declaration per line, tokens
separated by whitespace, ``#`` starts a comment, blank lines are ignored.
Degrees use the literal syntax of :func:`fuzzycat.degrees.parse_degree`.

Category (``.fcat``)::

    mode strict                    # or lax; optional
    tnorm min                      # or product, lukasiewicz; optional
    object A
    arrow f : A -> B @ 0.7
    identity A = 1_A               # optional, defaults to an arrow 1_A @ 1
    compose g . f = h              # h is g after f

Graph::

    node A
    arrow f : A -> B @ 0.6

Relation::

    elements: x y z
    rel x y = 0.7                  # unlisted pairs are 0, the diagonal is 1

Šostak annotation::

    star min
    omega A = 1
    mu f = 0.7
"""

from __future__ import annotations

from typing import Dict, Iterator, List, Optional, Tuple

from .category import Arrow, FuzzyCategory, LawMode
from .constructions import FuzzyRelation, SostakAnnotation, identity_id
from .degrees import ONE, TNorm, format_degree, parse_degree
from .errors import ParseError, RangeError, UnresolvedReferenceError
from .graph import FuzzyGraph, GraphArrow


def _lines(text: str) -> Iterator[Tuple[int, List[str]]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if tokens:
            yield number, tokens


def _degree(token: str, line: int):
    try:
        return parse_degree(token)
    except RangeError as exc:
        raise RangeError(str(exc), line) from None
    except ParseError as exc:
        raise ParseError(str(exc), line) from None


def _arrow_decl(tokens: List[str], line: int):
    # arrow <id> : <dom> -> <cod> @ <degree>
    if len(tokens) != 8 or tokens[2] != ":" or tokens[4] != "->" or tokens[6] != "@":
        raise ParseError("expected 'arrow <id> : <dom> -> <cod> @ <degree>'", line)
    return tokens[1], tokens[3], tokens[5], _degree(tokens[7], line)


def _expect(tokens: List[str], n: int, shape: str, line: int):
    if len(tokens) != n:
        raise ParseError(f"expected '{shape}'", line)


def _token(name: str) -> str:
    if not name or any(ch.isspace() for ch in name) or "#" in name:
        raise ValueError(f"id {name!r} cannot be written as a single token")
    return name


# -- categories ------------------------------------------------------------------


def parse_category_file(text: str) -> FuzzyCategory:
    law_mode: Optional[LawMode] = None
    tnorm: Optional[TNorm] = None
    objects: Dict[str, int] = {}
    arrows: Dict[str, Tuple[Arrow, int]] = {}
    identities: Dict[str, Tuple[str, int]] = {}
    table: Dict[Tuple[str, str], Tuple[str, int]] = {}

    for line, tokens in _lines(text):
        kw = tokens[0]
        if kw == "mode":
            _expect(tokens, 2, "mode strict|lax", line)
            if law_mode is not None:
                raise ParseError("mode declared twice", line)
            try:
                law_mode = LawMode(tokens[1].lower())
            except ValueError:
                raise ParseError(f"unknown mode {tokens[1]!r}", line) from None
        elif kw == "tnorm":
            _expect(tokens, 2, "tnorm min|product|lukasiewicz", line)
            if tnorm is not None:
                raise ParseError("tnorm declared twice", line)
            try:
                tnorm = TNorm.from_name(tokens[1])
            except ParseError as exc:
                raise ParseError(str(exc), line) from None
        elif kw == "object":
            _expect(tokens, 2, "object <id>", line)
            if tokens[1] in objects:
                raise ParseError(f"object {tokens[1]} declared twice", line)
            objects[tokens[1]] = line
        elif kw == "arrow":
            aid, dom, cod, rho = _arrow_decl(tokens, line)
            if aid in arrows:
                raise ParseError(f"arrow {aid} declared twice", line)
            arrows[aid] = (Arrow(aid, dom, cod, rho), line)
        elif kw == "identity":
            if len(tokens) != 4 or tokens[2] != "=":
                raise ParseError("expected 'identity <object> = <arrow>'", line)
            if tokens[1] in identities:
                raise ParseError(f"identity of {tokens[1]} declared twice", line)
            identities[tokens[1]] = (tokens[3], line)
        elif kw == "compose":
            if len(tokens) != 6 or tokens[2] != "." or tokens[4] != "=":
                raise ParseError("expected 'compose <g> . <f> = <h>'", line)
            key = (tokens[1], tokens[3])
            if key in table:
                raise ParseError(f"composite {tokens[1]} . {tokens[3]} declared twice", line)
            table[key] = (tokens[5], line)
        else:
            raise ParseError(f"unknown declaration {kw!r}", line)

    def need_object(name, line):
        if name not in objects:
            raise UnresolvedReferenceError(f"undeclared object {name!r}", line)

    def need_arrow(name, line):
        if name not in arrows:
            raise UnresolvedReferenceError(f"undeclared arrow {name!r}", line)

    for arrow, line in arrows.values():
        need_object(arrow.dom, line)
        need_object(arrow.cod, line)
    for obj, (aid, line) in identities.items():
        need_object(obj, line)
        need_arrow(aid, line)

    arrow_list = [a for a, _ in arrows.values()]
    ident_map = {obj: aid for obj, (aid, _) in identities.items()}
    for obj in objects:
        if obj in ident_map:
            continue
        aid = identity_id(obj)
        if aid not in arrows:
            arrow_list.append(Arrow(aid, obj, obj, ONE))
            arrows[aid] = (arrow_list[-1], 0)
        ident_map[obj] = aid

    # compose lines may name the generated identities
    for (g, f), (h, line) in table.items():
        for name in (g, f, h):
            need_arrow(name, line)

    composition = {key: h for key, (h, _) in table.items()}
    by_id = {a.id: a for a in arrow_list}
    for obj in objects:
        ident = ident_map[obj]
        for a in arrow_list:
            if a.cod == obj and by_id[ident].dom == obj:
                composition.setdefault((ident, a.id), a.id)
            if a.dom == obj and by_id[ident].cod == obj:
                composition.setdefault((a.id, ident), a.id)

    return FuzzyCategory(
        tuple(objects),
        tuple(arrow_list),
        {obj: ident_map[obj] for obj in objects},
        composition,
        law_mode or LawMode.STRICT,
        tnorm or TNorm.MIN,
    )


def render_category(c: FuzzyCategory) -> str:
    """Write ``c`` so that :func:`parse_category_file` reads back an equal category."""
    out = [f"mode {c.law_mode.value}", f"tnorm {c.tnorm.value}", ""]
    out += [f"object {_token(o)}" for o in c.objects]
    out += [
        f"arrow {_token(a.id)} : {a.dom} -> {a.cod} @ {format_degree(a.plausibility)}"
        for a in c.arrows
    ]
    out += [f"identity {o} = {c.identities[o]}" for o in c.objects if o in c.identities]
    out += [f"compose {_token(g)} . {_token(f)} = {_token(h)}" for (g, f), h in c.composition.items()]
    return "\n".join(out) + "\n"


# -- graphs ----------------------------------------------------------------------


def parse_graph_file(text: str) -> FuzzyGraph:
    nodes: Dict[str, int] = {}
    arrows: Dict[str, Tuple[GraphArrow, int]] = {}
    for line, tokens in _lines(text):
        if tokens[0] == "node":
            _expect(tokens, 2, "node <id>", line)
            if tokens[1] in nodes:
                raise ParseError(f"node {tokens[1]} declared twice", line)
            nodes[tokens[1]] = line
        elif tokens[0] == "arrow":
            aid, dom, cod, rho = _arrow_decl(tokens, line)
            if aid in arrows:
                raise ParseError(f"arrow {aid} declared twice", line)
            arrows[aid] = (GraphArrow(aid, dom, cod, rho), line)
        else:
            raise ParseError(f"unknown declaration {tokens[0]!r}", line)
    for arrow, line in arrows.values():
        for end in (arrow.dom, arrow.cod):
            if end not in nodes:
                raise UnresolvedReferenceError(f"undeclared node {end!r}", line)
    return FuzzyGraph(tuple(nodes), tuple(a for a, _ in arrows.values()))


def render_graph(g: FuzzyGraph) -> str:
    out = [f"node {_token(n)}" for n in g.nodes]
    out += [f"arrow {_token(a.id)} : {a.dom} -> {a.cod} @ {format_degree(a.plausibility)}" for a in g.arrows]
    return "\n".join(out) + "\n"


# -- relations -------------------------------------------------------------------


def parse_relation_file(text: str) -> FuzzyRelation:
    elements: Optional[List[str]] = None
    values = {}
    for line, tokens in _lines(text):
        if tokens[0] == "elements:":
            if elements is not None:
                raise ParseError("elements declared twice", line)
            elements = tokens[1:]
            if len(set(elements)) != len(elements):
                raise ParseError("duplicate element", line)
        elif tokens[0] == "rel":
            if len(tokens) != 5 or tokens[3] != "=":
                raise ParseError("expected 'rel <x> <y> = <degree>'", line)
            if elements is None:
                raise ParseError("'elements:' header must come first", line)
            for x in tokens[1:3]:
                if x not in elements:
                    raise UnresolvedReferenceError(f"undeclared element {x!r}", line)
            key = (tokens[1], tokens[2])
            if key in values:
                raise ParseError(f"pair {key[0]} {key[1]} given twice", line)
            values[key] = _degree(tokens[4], line)
        else:
            raise ParseError(f"unknown declaration {tokens[0]!r}", line)
    if elements is None:
        raise ParseError("missing 'elements:' header")
    return FuzzyRelation.from_pairs(elements, values)


def render_relation(r: FuzzyRelation) -> str:
    out = ["elements: " + " ".join(_token(x) for x in r.elements)]
    out += [f"rel {x} {y} = {format_degree(r(x, y))}" for x in r.elements for y in r.elements]
    return "\n".join(out) + "\n"


# -- annotations -----------------------------------------------------------------


def parse_annotation_file(text: str) -> SostakAnnotation:
    star = None
    omega, mu = {}, {}
    for line, tokens in _lines(text):
        if tokens[0] == "star":
            _expect(tokens, 2, "star min|product|lukasiewicz", line)
            try:
                star = TNorm.from_name(tokens[1])
            except ParseError as exc:
                raise ParseError(str(exc), line) from None
        elif tokens[0] in ("omega", "mu"):
            if len(tokens) != 4 or tokens[2] != "=":
                raise ParseError(f"expected '{tokens[0]} <id> = <degree>'", line)
            target = omega if tokens[0] == "omega" else mu
            if tokens[1] in target:
                raise ParseError(f"{tokens[0]} of {tokens[1]} given twice", line)
            target[tokens[1]] = _degree(tokens[3], line)
        else:
            raise ParseError(f"unknown declaration {tokens[0]!r}", line)
    return SostakAnnotation(omega, mu, star or TNorm.MIN)
