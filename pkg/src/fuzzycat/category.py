"""Finite fuzzy categories with an explicit composition table."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Tuple, Union

from .degrees import ONE, DegreeLike, TNorm, as_degree, tnorm_apply
from .errors import (
    ArrowError,
    ComposabilityError,
    DuplicateIdError,
    ObjectError,
    TotalityError,
)
from .violations import Violation, sorted_report

DOM_COD = "DomCod"
DEGREE_LAW = "DegreeLaw"
ASSOC = "Assoc"
IDENTITY_LAW = "IdentityLaw"
IDENTITY_DEGREE = "IdentityDegree"
TOTALITY = "Totality"


class LawMode(Enum):
    """How a composite's degree must relate to the t-norm of its factors."""

    STRICT = "strict"  # p(g.f) == t(p f, p g)
    LAX = "lax"  # p(g.f) >= t(p f, p g)


@dataclass(frozen=True)
class Arrow:
    id: str
    dom: str
    cod: str
    plausibility: Fraction

    def __post_init__(self):
        object.__setattr__(self, "plausibility", as_degree(self.plausibility))


@dataclass(frozen=True)
class FuzzyCategory:
    """A finite category whose arrows carry degrees.

    ``composition`` maps ``(g, f)`` (read ``g . f``, ``f`` applied first) to
    the id of the composite.  Nothing beyond id uniqueness is enforced here;
    :func:`validate_axioms` reports everything else.
    """

    objects: Tuple[str, ...]
    arrows: Tuple[Arrow, ...]
    identities: Dict[str, str]
    composition: Dict[Tuple[str, str], str]
    law_mode: LawMode = LawMode.STRICT
    tnorm: TNorm = TNorm.MIN
    _by_id: Dict[str, Arrow] = field(init=False, repr=False, compare=False)
    _from: Dict[str, List[Arrow]] = field(init=False, repr=False, compare=False)
    _to: Dict[str, List[Arrow]] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "objects", tuple(self.objects))
        object.__setattr__(self, "arrows", tuple(self.arrows))
        object.__setattr__(self, "identities", dict(self.identities))
        object.__setattr__(self, "composition", dict(self.composition))
        for kind, ids in (("object", self.objects), ("arrow", [a.id for a in self.arrows])):
            dupes = sorted(k for k, n in Counter(ids).items() if n > 1)
            if dupes:
                raise DuplicateIdError(f"duplicate {kind} id(s): {', '.join(dupes)}")
        object.__setattr__(self, "_by_id", {a.id: a for a in self.arrows})
        out, into = {}, {}
        for a in sorted(self.arrows, key=lambda x: x.id):
            out.setdefault(a.dom, []).append(a)
            into.setdefault(a.cod, []).append(a)
        object.__setattr__(self, "_from", out)
        object.__setattr__(self, "_to", into)

    @classmethod
    def build(
        cls,
        objects: Iterable[str],
        arrows: Iterable[Tuple[str, str, str, DegreeLike]],
        identities: Mapping[str, str],
        composition: Mapping[Tuple[str, str], str],
        law_mode: LawMode = LawMode.STRICT,
        tnorm: TNorm = TNorm.MIN,
    ) -> "FuzzyCategory":
        return cls(
            tuple(objects),
            tuple(Arrow(*a) for a in arrows),
            dict(identities),
            dict(composition),
            law_mode,
            tnorm,
        )

    def arrow(self, arrow_id: Union[str, Arrow]) -> Arrow:
        if isinstance(arrow_id, Arrow):
            arrow_id = arrow_id.id
        try:
            return self._by_id[arrow_id]
        except KeyError:
            raise ArrowError(f"no arrow {arrow_id!r}") from None

    def has_arrow(self, arrow_id: str) -> bool:
        return arrow_id in self._by_id

    def hom(self, a: str, b: str) -> List[Arrow]:
        """Arrows ``a -> b`` ordered by id."""
        return [x for x in self.arrows_from(a) if x.cod == b]

    def arrows_from(self, obj: str) -> List[Arrow]:
        return self._from.get(obj, [])

    def arrows_to(self, obj: str) -> List[Arrow]:
        return self._to.get(obj, [])

    def composable_pairs(self):
        """Every ``(g, f)`` with ``dom g == cod f``, ordered by ids."""
        return [(g, f) for g in sorted(self.arrows, key=lambda x: x.id) for f in self.arrows_to(g.dom)]

    def with_modes(self, law_mode: Optional[LawMode] = None, tnorm: Optional[TNorm] = None):
        return replace(
            self,
            law_mode=self.law_mode if law_mode is None else law_mode,
            tnorm=self.tnorm if tnorm is None else tnorm,
        )


def identity_of(c: FuzzyCategory, b: str) -> Arrow:
    if b not in c.objects:
        raise ObjectError(f"no object {b!r}")
    try:
        return c.arrow(c.identities[b])
    except KeyError:
        raise TotalityError(f"object {b!r} has no designated identity") from None


def compose(c: FuzzyCategory, g: Union[str, Arrow], f: Union[str, Arrow]) -> Arrow:
    """The table's ``g . f``."""
    g, f = c.arrow(g), c.arrow(f)
    if g.dom != f.cod:
        raise ComposabilityError(f"cannot compose {g.id} . {f.id}: {f.id} ends at {f.cod}, {g.id} starts at {g.dom}")
    try:
        return c.arrow(c.composition[g.id, f.id])
    except KeyError:
        raise TotalityError(f"composition table has no entry for {g.id} . {f.id}") from None


def compose_path(c: FuzzyCategory, arrow_ids: Iterable[str]) -> Arrow:
    """Fold a chain given in application order into one arrow."""
    ids = list(arrow_ids)
    if not ids:
        raise ValueError("empty chain")
    acc = c.arrow(ids[0])
    for nxt in ids[1:]:
        acc = compose(c, nxt, acc)
    return acc


def degree_law_holds(c: FuzzyCategory, found: Fraction, combined: Fraction) -> bool:
    if c.law_mode is LawMode.STRICT:
        return found == combined
    return found >= combined


def validate_axioms(c: FuzzyCategory) -> List[Violation]:
    """Exhaustively check bookkeeping, degree law, associativity and identities.

    Returns every violation found, sorted by law tag and then arrow ids; the
    list is empty exactly when ``c`` is a fuzzy category under its
    ``law_mode`` and ``tnorm``.
    """
    out: List[Violation] = []
    objects = set(c.objects)

    for a in c.arrows:
        for end in (a.dom, a.cod):
            if end not in objects:
                out.append(Violation(DOM_COD, (a.id,), found=end, note="endpoint is not an object"))

    # identities
    for b in c.objects:
        ident_id = c.identities.get(b)
        if ident_id is None:
            out.append(Violation(TOTALITY, (b,), note="object has no identity"))
            continue
        if not c.has_arrow(ident_id):
            out.append(Violation(DOM_COD, (ident_id,), note=f"identity of {b} is not an arrow"))
            continue
        ident = c.arrow(ident_id)
        if (ident.dom, ident.cod) != (b, b):
            out.append(Violation(DOM_COD, (ident_id,), expected=f"{b}->{b}", found=f"{ident.dom}->{ident.cod}"))
        if ident.plausibility != ONE:
            out.append(Violation(IDENTITY_DEGREE, (ident_id,), expected=ONE, found=ident.plausibility))
    for b in c.identities:
        if b not in objects:
            out.append(Violation(DOM_COD, (c.identities[b],), found=b, note="identity assigned to unknown object"))

    # table entries that should not be there
    for (g_id, f_id), h_id in c.composition.items():
        missing = [x for x in (g_id, f_id, h_id) if not c.has_arrow(x)]
        if missing:
            out.append(Violation(DOM_COD, (g_id, f_id, h_id), note=f"unknown arrow(s) {', '.join(missing)}"))
            continue
        g, f = c.arrow(g_id), c.arrow(f_id)
        if g.dom != f.cod:
            out.append(Violation(DOM_COD, (g_id, f_id), note="table entry for a non-composable pair"))

    # totality, bookkeeping and degree law over composable pairs
    for g, f in c.composable_pairs():
        h_id = c.composition.get((g.id, f.id))
        if h_id is None:
            out.append(Violation(TOTALITY, (g.id, f.id), note="missing composite"))
            continue
        if not c.has_arrow(h_id):
            continue
        h = c.arrow(h_id)
        if (h.dom, h.cod) != (f.dom, g.cod):
            out.append(
                Violation(DOM_COD, (g.id, f.id, h.id), expected=f"{f.dom}->{g.cod}", found=f"{h.dom}->{h.cod}")
            )
        combined = tnorm_apply(c.tnorm, f.plausibility, g.plausibility)
        if not degree_law_holds(c, h.plausibility, combined):
            relation = "==" if c.law_mode is LawMode.STRICT else ">="
            out.append(
                Violation(DEGREE_LAW, (g.id, f.id, h.id), expected=combined, found=h.plausibility,
                          note=f"p({g.id} . {f.id}) {relation} {c.tnorm.value}")
            )

    # associativity: h.(g.f) == (h.g).f
    table = c.composition
    for g, f in c.composable_pairs():
        gf = table.get((g.id, f.id))
        if gf is None:
            continue
        for h in c.arrows_from(g.cod):
            hg = table.get((h.id, g.id))
            if hg is None:
                continue
            left = table.get((h.id, gf))
            right = table.get((hg, f.id))
            if left is None or right is None:
                continue
            if left != right:
                out.append(Violation(ASSOC, (h.id, g.id, f.id), expected=left, found=right,
                                     note="h.(g.f) vs (h.g).f"))

    # identity law
    for b, ident_id in c.identities.items():
        if b not in objects or not c.has_arrow(ident_id):
            continue
        for a in c.arrows_to(b):
            got = table.get((ident_id, a.id))
            if got is not None and got != a.id:
                out.append(Violation(IDENTITY_LAW, (ident_id, a.id), expected=a.id, found=got))
        for a in c.arrows_from(b):
            got = table.get((a.id, ident_id))
            if got is not None and got != a.id:
                out.append(Violation(IDENTITY_LAW, (a.id, ident_id), expected=a.id, found=got))

    return sorted_report(out)


def opposite(c: FuzzyCategory) -> FuzzyCategory:
    """Reverse every arrow and transpose the composition table."""
    return FuzzyCategory(
        c.objects,
        tuple(Arrow(a.id, a.cod, a.dom, a.plausibility) for a in c.arrows),
        dict(c.identities),
        {(f, g): h for (g, f), h in c.composition.items()},
        c.law_mode,
        c.tnorm,
    )
