"""Builders for concrete fuzzy categories, and the Šostak-style checker."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from .category import Arrow, FuzzyCategory, LawMode
from .degrees import ONE, ZERO, DegreeLike, TNorm, as_degree, tnorm_apply
from .errors import (
    AnnotationError,
    ArrowDegreeError,
    ClosureError,
    DuplicateIdError,
    GraphError,
    IdentityError,
    PreorderError,
    TableError,
)
from .graph import FuzzyGraph, Path, enumerate_paths, validate_graph
from .violations import Violation, sorted_report

REFLEXIVITY = "Reflexivity"
TRANSITIVITY = "Transitivity"

MORPHISM_BOUND = "MorphismBound"  # mu(f) <= omega(dom) ^ omega(cod)
COMPOSITION_BOUND = "CompositionBound"  # mu(g.f) >= mu(g) * mu(f)
IDENTITY_WEIGHT = "IdentityWeight"  # mu(e_X) == omega(X)

UNIT_OBJECT = "∧"


def identity_id(obj: str) -> str:
    return f"1_{obj}"


# -- free category on a fuzzy graph ------------------------------------------


@dataclass(frozen=True)
class FreeCategory:
    """A length-bounded fragment of the free fuzzy category on a graph.

    ``paths`` maps each non-identity arrow id to its graph path (application
    order).  Pairs ``(g, f)`` whose concatenation is longer than ``max_len``
    have no table entry; there are ``truncated_count`` of them and
    :meth:`truncated_pairs` lists them.
    """

    category: FuzzyCategory
    paths: Dict[str, Path]
    max_len: int
    truncated_count: int

    def truncated_pairs(self) -> Iterator[Tuple[str, str]]:
        """Truncated ``(g, f)`` pairs, ordered by ``f`` then ``g``."""
        c = self.category
        for f in sorted(self.paths):
            room = self.max_len - len(self.paths[f])
            for g in c.arrows_from(c.arrow(f).cod):
                if g.id in self.paths and len(self.paths[g.id]) > room:
                    yield g.id, f


def path_arrow_id(p: Path) -> str:
    """``b.a`` for the path that runs ``a`` then ``b``."""
    return ".".join(reversed(p.arrows))


def free_fuzzy_category(g: FuzzyGraph, max_len: int) -> FreeCategory:
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    problems = validate_graph(g)
    if problems:
        raise GraphError("graph is not well formed", problems)

    arrows: List[Arrow] = []
    identities = {}
    for node in g.nodes:
        identities[node] = identity_id(node)
        arrows.append(Arrow(identity_id(node), node, node, ONE))

    paths: Dict[str, Path] = {}
    ids_by_path: Dict[Tuple[str, ...], str] = {}
    # non-identity arrows grouped by (domain, path length)
    by_start: Dict[Tuple[str, int], List[str]] = {}
    for src in g.nodes:
        for dst in g.nodes:
            for p, rho in enumerate_paths(g, src, dst, max_len):
                pid = path_arrow_id(p)
                paths[pid] = p
                ids_by_path[p.arrows] = pid
                by_start.setdefault((src, len(p)), []).append(pid)
                arrows.append(Arrow(pid, src, dst, rho))
    try:
        category = FuzzyCategory(g.nodes, tuple(arrows), identities, {})
    except DuplicateIdError as exc:
        raise GraphError(f"generated arrow ids collide: {exc}") from None

    table: Dict[Tuple[str, str], str] = {}
    truncated = 0
    for a in category.arrows:
        if a.id not in paths:
            for h in category.arrows_from(a.cod):
                table[h.id, a.id] = h.id
            for f in category.arrows_to(a.dom):
                table[a.id, f.id] = f.id
            continue
        fp = paths[a.id].arrows
        room = max_len - len(fp)
        for k in range(1, max_len + 1):
            hs = by_start.get((a.cod, k), ())
            if k > room:
                truncated += len(hs)
                continue
            for h in hs:
                table[h, a.id] = ids_by_path[fp + paths[h].arrows]
    category = FuzzyCategory(g.nodes, category.arrows, identities, table, LawMode.STRICT, TNorm.MIN)
    return FreeCategory(category, paths, max_len, truncated)


# -- fuzzy preorders -----------------------------------------------------------


@dataclass(frozen=True)
class FuzzyRelation:
    elements: Tuple[str, ...]
    matrix: Dict[Tuple[str, str], Fraction]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        if len(set(self.elements)) != len(self.elements):
            raise TableError("duplicate relation elements")
        matrix = {}
        for x in self.elements:
            for y in self.elements:
                if (x, y) not in self.matrix:
                    raise TableError(f"relation has no value for ({x}, {y})")
                matrix[x, y] = as_degree(self.matrix[x, y])
        extra = set(self.matrix) - set(matrix)
        if extra:
            raise TableError(f"relation mentions unknown pair(s) {sorted(extra)}")
        object.__setattr__(self, "matrix", matrix)

    @classmethod
    def from_pairs(cls, elements: Iterable[str], values: Mapping[Tuple[str, str], DegreeLike]):
        """Unlisted pairs default to 0, except the diagonal which defaults to 1."""
        elements = tuple(elements)
        matrix = {(x, y): (ONE if x == y else ZERO) for x in elements for y in elements}
        for key, value in values.items():
            if key not in matrix:
                raise TableError(f"pair {key} mentions an unknown element")
            matrix[key] = as_degree(value)
        return cls(elements, matrix)

    def __call__(self, x: str, y: str) -> Fraction:
        return self.matrix[x, y]


def validate_preorder(r: FuzzyRelation, t: TNorm = TNorm.MIN) -> List[Violation]:
    out = []
    for x in r.elements:
        if r(x, x) != ONE:
            out.append(Violation(REFLEXIVITY, (x,), expected=ONE, found=r(x, x)))
    for x in r.elements:
        for y in r.elements:
            for z in r.elements:
                bound = tnorm_apply(t, r(x, y), r(y, z))
                if bound > r(x, z):
                    out.append(Violation(TRANSITIVITY, (x, y, z), expected=bound, found=r(x, z),
                                         note=f"R({x},{y}) {t.value} R({y},{z}) <= R({x},{z})"))
    return sorted_report(out)


def pair_id(x: str, y: str) -> str:
    return f"<{x},{y}>"


def preorder_category(r: FuzzyRelation, t: TNorm = TNorm.MIN) -> FuzzyCategory:
    """One arrow ``<p,q>`` per pair with ``R(p,q) > 0``, in lax mode.

    Pairs with degree 0 are left out unless composition needs them, which can
    only happen for t-norms with zero divisors such as Łukasiewicz.
    """
    problems = validate_preorder(r, t)
    if problems:
        raise PreorderError("relation is not a fuzzy preorder", problems)

    present = {(x, y) for (x, y), v in r.matrix.items() if v > ZERO or x == y}
    while True:
        extra = {(x, z) for (x, y) in present for (y2, z) in present if y == y2} - present
        if not extra:
            break
        present |= extra

    arrows = tuple(
        Arrow(pair_id(x, y), x, y, r(x, y)) for x in r.elements for y in r.elements if (x, y) in present
    )
    identities = {x: pair_id(x, x) for x in r.elements}
    table = {}
    for x, y in sorted(present, key=lambda p: (r.elements.index(p[0]), r.elements.index(p[1]))):
        for z in r.elements:
            if (y, z) in present:
                table[pair_id(y, z), pair_id(x, y)] = pair_id(x, z)
    return FuzzyCategory(r.elements, arrows, identities, table, LawMode.LAX, t)


# -- the one-object category of degrees ----------------------------------------


def unit_interval_category(degrees: Iterable[DegreeLike]) -> FuzzyCategory:
    """Single object, one arrow per degree, composition is ``min``."""
    values = sorted({as_degree(d) for d in degrees})
    if ONE not in values:
        raise IdentityError("the degree set must contain 1 to have an identity")
    ids = {v: str(v) for v in values}
    arrows = tuple(Arrow(ids[v], UNIT_OBJECT, UNIT_OBJECT, v) for v in values)
    table = {}
    for a in values:
        for b in values:
            # closed under min by construction: min(a, b) is one of a, b
            table[ids[a], ids[b]] = ids[min(a, b)]
    return FuzzyCategory((UNIT_OBJECT,), arrows, {UNIT_OBJECT: ids[ONE]}, table)


# -- FSet ----------------------------------------------------------------------


@dataclass(frozen=True)
class MembershipTable:
    carrier: Tuple[str, ...]
    membership: Dict[str, Fraction]

    def __post_init__(self):
        object.__setattr__(self, "carrier", tuple(self.carrier))
        if set(self.membership) != set(self.carrier):
            raise TableError("membership must be given for exactly the carrier's elements")
        object.__setattr__(self, "membership", {x: as_degree(self.membership[x]) for x in self.carrier})

    @classmethod
    def of(cls, values: Mapping[str, DegreeLike]) -> "MembershipTable":
        return cls(tuple(values), dict(values))

    def __call__(self, x: str) -> Fraction:
        return self.membership[x]


@dataclass(frozen=True)
class FunctionTable:
    source: Tuple[str, ...]
    target: Tuple[str, ...]
    map: Dict[str, str]

    def __post_init__(self):
        object.__setattr__(self, "source", tuple(self.source))
        object.__setattr__(self, "target", tuple(self.target))
        if set(self.map) != set(self.source):
            raise TableError("function must be defined on exactly its source")
        stray = sorted({y for y in self.map.values() if y not in self.target})
        if stray:
            raise TableError(f"function images outside the target: {stray}")
        object.__setattr__(self, "map", {x: self.map[x] for x in self.source})

    def __call__(self, x: str) -> str:
        return self.map[x]

    def then(self, g: "FunctionTable") -> "FunctionTable":
        return FunctionTable(self.source, g.target, {x: g(self(x)) for x in self.source})

    @classmethod
    def identity(cls, carrier: Sequence[str]) -> "FunctionTable":
        return cls(tuple(carrier), tuple(carrier), {x: x for x in carrier})


def fset_arrow_degree(f: FunctionTable, a: MembershipTable, b: MembershipTable) -> Optional[Fraction]:
    """Largest lambda with ``b(f(x)) - a(x) >= lambda`` for every x.

    Returns ``None`` when no lambda in [0, 1] qualifies, i.e. ``f`` is not an
    FSet arrow between these fuzzy subsets.
    """
    if set(a.carrier) != set(f.source) or set(b.carrier) != set(f.target):
        raise TableError("membership tables do not match the function's source and target")
    if not f.source:
        raise TableError("the function's source is empty")
    lam = min(b(f(x)) - a(x) for x in f.source)
    if lam < ZERO:
        return None
    return min(lam, ONE)


def fset_category(
    objects: Sequence[Tuple[str, MembershipTable]],
    arrows: Sequence[Tuple[str, FunctionTable, str, str]],
) -> FuzzyCategory:
    """FSet restricted to the listed objects and functions.

    ``objects`` pairs an object name with its membership table (whose carrier
    is the underlying set); each arrow names its source and target objects.
    Listed arrows carry their :func:`fset_arrow_degree`.  A composite of
    arrows of degrees l1, l2 is recorded at ``min(l1, l2)``; when that degree
    differs from every existing arrow with the same function, a new arrow
    ``g.f`` is added, so one function may appear at several degrees.  The
    listed functions must already be closed under composition.
    """
    members = dict(objects)
    if len(members) != len(objects):
        raise TableError("duplicate object names")
    names = tuple(name for name, _ in objects)

    # arrows are keyed by (src, dst, function) plus their degree
    def fkey(src, dst, fn):
        return (src, dst, tuple(sorted(fn.map.items())))

    functions: Dict[tuple, FunctionTable] = {}
    by_key: Dict[tuple, str] = {}
    cat_arrows: List[Arrow] = []
    funcs: Dict[str, FunctionTable] = {}
    identities = {}

    for name in names:
        fn = FunctionTable.identity(members[name].carrier)
        aid = identity_id(name)
        identities[name] = aid
        functions[fkey(name, name, fn)] = fn
        by_key[fkey(name, name, fn) + (ONE,)] = aid
        cat_arrows.append(Arrow(aid, name, name, ONE))
        funcs[aid] = fn

    for aid, fn, src, dst in arrows:
        if src not in members or dst not in members:
            raise TableError(f"arrow {aid} refers to an unknown object")
        lam = fset_arrow_degree(fn, members[src], members[dst])
        if lam is None:
            raise ArrowDegreeError(f"{aid} violates the membership bound for every degree in [0, 1]")
        k = fkey(src, dst, fn)
        if k + (lam,) in by_key:
            raise TableError(f"{aid} duplicates arrow {by_key[k + (lam,)]}")
        functions.setdefault(k, fn)
        by_key[k + (lam,)] = aid
        cat_arrows.append(Arrow(aid, src, dst, lam))
        funcs[aid] = fn

    table: Dict[Tuple[str, str], str] = {}
    done = 0
    while done < len(cat_arrows):
        done = len(cat_arrows)
        for f in list(cat_arrows):
            for g in list(cat_arrows):
                if g.dom != f.cod or (g.id, f.id) in table:
                    continue
                fn = funcs[f.id].then(funcs[g.id])
                k = fkey(f.dom, g.cod, fn)
                if k not in functions:
                    raise ClosureError(f"composite {g.id} . {f.id} is not among the listed functions")
                lam = min(f.plausibility, g.plausibility)
                aid = by_key.get(k + (lam,))
                if aid is None:
                    aid = _fresh_id(f"{g.id}.{f.id}", funcs)
                    by_key[k + (lam,)] = aid
                    cat_arrows.append(Arrow(aid, f.dom, g.cod, lam))
                    funcs[aid] = fn
                table[g.id, f.id] = aid
    return FuzzyCategory(names, tuple(cat_arrows), identities, table)


def _fresh_id(base: str, taken) -> str:
    aid = base
    while aid in taken:
        aid += "'"
    return aid


# -- Šostak-style annotations --------------------------------------------------


@dataclass(frozen=True)
class SostakAnnotation:
    omega: Dict[str, Fraction]
    mu: Dict[str, Fraction]
    star: TNorm = TNorm.MIN

    def __post_init__(self):
        object.__setattr__(self, "omega", {k: as_degree(v) for k, v in self.omega.items()})
        object.__setattr__(self, "mu", {k: as_degree(v) for k, v in self.mu.items()})


def plausibility_annotation(c: FuzzyCategory, star: TNorm = TNorm.MIN) -> SostakAnnotation:
    """Every object weighted 1, every arrow weighted by its plausibility."""
    return SostakAnnotation({x: ONE for x in c.objects}, {a.id: a.plausibility for a in c.arrows}, star)


def sostak_check(c: FuzzyCategory, ann: SostakAnnotation) -> List[Violation]:
    missing = [x for x in c.objects if x not in ann.omega] + [a.id for a in c.arrows if a.id not in ann.mu]
    if missing:
        raise AnnotationError(f"annotation is missing: {', '.join(missing)}")
    omega, mu = ann.omega, ann.mu
    out = []
    for f in c.arrows:
        bound = min(omega[f.dom], omega[f.cod])
        if mu[f.id] > bound:
            out.append(Violation(MORPHISM_BOUND, (f.id,), expected=bound, found=mu[f.id]))
    for (g, f), h in c.composition.items():
        if not (c.has_arrow(g) and c.has_arrow(f) and c.has_arrow(h)):
            continue
        bound = tnorm_apply(ann.star, mu[g], mu[f])
        if mu[h] < bound:
            out.append(Violation(COMPOSITION_BOUND, (g, f, h), expected=bound, found=mu[h]))
    for x in c.objects:
        e = c.identities.get(x)
        if e is not None and c.has_arrow(e) and mu[e] != omega[x]:
            out.append(Violation(IDENTITY_WEIGHT, (e,), expected=omega[x], found=mu[e]))
    return sorted_report(out)
