"""Degree-valued categorical properties of a finite fuzzy category.

Paths are lists of arrow ids in application order, as everywhere else in the
package: ``["f", "g"]`` is the composite ``g . f``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .category import FuzzyCategory, compose_path, identity_of
from .degrees import ONE, degree_min
from .errors import ObjectError, PathError


@dataclass(frozen=True)
class CommutationResult:
    composite1: str
    composite2: str
    min1: Fraction
    min2: Fraction
    strong: bool
    nu: Fraction
    commutes: bool


@dataclass(frozen=True)
class IsoWitness:
    f: str
    g: str
    degree: Fraction


@dataclass(frozen=True)
class MonicEpicResult:
    arrow: str
    holds: bool
    nu: Fraction
    counterexample: Optional[Tuple[str, str]] = None


class LimitMode(Enum):
    EXACTLY_ONE = "exactly-one"  # the only arrow, and it has degree 1
    DEGREE_ONE = "degree-one"  # the only degree-1 arrow; weaker arrows allowed


def _chain_endpoints(c: FuzzyCategory, path: Sequence[str]) -> Tuple[str, str]:
    if not path:
        raise PathError("a path needs at least one arrow")
    steps = [c.arrow(a) for a in path]
    for first, second in zip(steps, steps[1:]):
        if first.cod != second.dom:
            raise PathError(f"{first.id} ends at {first.cod} but {second.id} starts at {second.dom}")
    return steps[0].dom, steps[-1].cod


def commutation(c: FuzzyCategory, p1: Sequence[str], p2: Sequence[str]) -> CommutationResult:
    """Compare two parallel paths.

    ``commutes`` asks whether both fold to the same arrow; ``strong``
    additionally requires the two degree minima to agree.  ``nu`` is the
    smaller of the two minima in every case.
    """
    ends1, ends2 = _chain_endpoints(c, p1), _chain_endpoints(c, p2)
    if ends1 != ends2:
        raise PathError(f"paths are not parallel: {ends1[0]}->{ends1[1]} vs {ends2[0]}->{ends2[1]}")
    comp1, comp2 = compose_path(c, p1).id, compose_path(c, p2).id
    min1 = degree_min(c.arrow(a).plausibility for a in p1)
    min2 = degree_min(c.arrow(a).plausibility for a in p2)
    commutes = comp1 == comp2
    return CommutationResult(
        composite1=comp1,
        composite2=comp2,
        min1=min1,
        min2=min2,
        strong=commutes and min1 == min2,
        nu=min(min1, min2),
        commutes=commutes,
    )


def isomorphism_degree(c: FuzzyCategory, a: str, b: str) -> Optional[IsoWitness]:
    """Best inverse pair ``f: a -> b``, ``g: b -> a``, or None."""
    for obj in (a, b):
        if obj not in c.objects:
            raise ObjectError(f"no object {obj!r}")
    id_a, id_b = identity_of(c, a).id, identity_of(c, b).id
    best = None
    for f in c.hom(a, b):
        for g in c.hom(b, a):
            if c.composition.get((g.id, f.id)) != id_a or c.composition.get((f.id, g.id)) != id_b:
                continue
            w = IsoWitness(f.id, g.id, min(f.plausibility, g.plausibility))
            # hom lists are id-sorted, so a strict improvement keeps the smallest ids on ties
            if best is None or w.degree > best.degree:
                best = w
    return best


def _cancellation(f, probes, composite) -> MonicEpicResult:
    groups = {}
    for x in probes:
        k = composite(x)
        if k is not None:
            groups.setdefault(k, []).append(x)
    squares = []
    bad = []
    for members in groups.values():
        for i, g in enumerate(members):
            for h in members[i:]:
                squares.append(min(f.plausibility, g.plausibility, h.plausibility))
                if g.id != h.id:
                    bad.append((g, h))
    if bad:
        g, h = min(bad, key=lambda pair: (pair[0].id, pair[1].id))
        return MonicEpicResult(f.id, False, min(f.plausibility, g.plausibility, h.plausibility), (g.id, h.id))
    return MonicEpicResult(f.id, True, min(squares, default=ONE))


def is_monic(c: FuzzyCategory, f_id: str) -> MonicEpicResult:
    """Left cancellation: ``f.g == f.h`` must force ``g == h``.

    Each pair ``g, h`` into ``dom f`` whose composites with ``f`` coincide is
    a test square, including ``g == h``.  When the property holds ``nu`` is
    the smallest square degree (1 if there is none); otherwise it is the
    degree of the first counterexample in id order.  Pairs whose composite is
    missing from the table cannot form a square and are skipped.
    """
    f = c.arrow(f_id)
    return _cancellation(f, c.arrows_to(f.dom), lambda g: c.composition.get((f.id, g.id)))


def is_epic(c: FuzzyCategory, f_id: str) -> MonicEpicResult:
    """Right cancellation, dual to :func:`is_monic`."""
    f = c.arrow(f_id)
    return _cancellation(f, c.arrows_from(f.cod), lambda g: c.composition.get((g.id, f.id)))


def _unique_degree_one(arrows, mode: LimitMode) -> bool:
    if mode is LimitMode.EXACTLY_ONE:
        return len(arrows) == 1 and arrows[0].plausibility == ONE
    return sum(1 for a in arrows if a.plausibility == ONE) == 1


def find_terminal(c: FuzzyCategory, mode: LimitMode = LimitMode.EXACTLY_ONE) -> List[str]:
    return sorted(t for t in c.objects if all(_unique_degree_one(c.hom(a, t), mode) for a in c.objects))


def find_initial(c: FuzzyCategory, mode: LimitMode = LimitMode.EXACTLY_ONE) -> List[str]:
    return sorted(i for i in c.objects if all(_unique_degree_one(c.hom(i, a), mode) for a in c.objects))
