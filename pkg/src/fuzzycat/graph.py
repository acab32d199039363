"""Fuzzy graphs and plausibility-graded paths.

A path is stored in *application order*: ``Path(("f", "g"))`` applies ``f``
first and then ``g``, i.e. it denotes the composite ``g . f``.  Written in the
usual right-to-left display ``(f_1, ..., f_k)`` the tuple is reversed.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Tuple

from .degrees import DegreeLike, as_degree, degree_min
from .errors import ArrowError, NodeError, PathError
from .violations import Violation, sorted_report

DANGLING_ENDPOINT = "DanglingEndpoint"
DUPLICATE_ID = "DuplicateId"


@dataclass(frozen=True)
class GraphArrow:
    id: str
    dom: str
    cod: str
    plausibility: Fraction

    def __post_init__(self):
        object.__setattr__(self, "plausibility", as_degree(self.plausibility))


@dataclass(frozen=True)
class Path:
    arrows: Tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "arrows", tuple(self.arrows))
        if not self.arrows:
            raise PathError("a path has at least one arrow")

    def __len__(self):
        return len(self.arrows)

    def __add__(self, other: "Path") -> "Path":
        """``p + q`` runs ``p`` first, then ``q``."""
        return Path(self.arrows + other.arrows)


@dataclass(frozen=True)
class FuzzyGraph:
    nodes: Tuple[str, ...]
    arrows: Tuple[GraphArrow, ...]
    _by_id: Dict[str, GraphArrow] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "nodes", tuple(self.nodes))
        object.__setattr__(self, "arrows", tuple(self.arrows))
        by_id = {}
        for a in self.arrows:
            by_id.setdefault(a.id, a)
        object.__setattr__(self, "_by_id", by_id)

    @classmethod
    def build(cls, nodes: Iterable[str], arrows: Iterable[Tuple[str, str, str, DegreeLike]]):
        """Shorthand: ``FuzzyGraph.build("AB", [("f", "A", "B", "0.6")])``."""
        return cls(tuple(nodes), tuple(GraphArrow(*a) for a in arrows))

    def arrow(self, arrow_id: str) -> GraphArrow:
        try:
            return self._by_id[arrow_id]
        except KeyError:
            raise ArrowError(f"no arrow {arrow_id!r} in graph") from None

    def outgoing(self, node: str) -> List[GraphArrow]:
        return sorted((a for a in self.arrows if a.dom == node), key=lambda a: a.id)


def validate_graph(g: FuzzyGraph) -> List[Violation]:
    """Dangling endpoints and duplicate node/arrow ids; empty when well formed."""
    out = []
    for name, n in Counter(g.nodes).items():
        if n > 1:
            out.append(Violation(DUPLICATE_ID, (name,), note=f"node declared {n} times"))
    for name, n in Counter(a.id for a in g.arrows).items():
        if n > 1:
            out.append(Violation(DUPLICATE_ID, (name,), note=f"arrow declared {n} times"))
    nodes = set(g.nodes)
    for a in g.arrows:
        for end, node in (("domain", a.dom), ("codomain", a.cod)):
            if node not in nodes:
                out.append(Violation(DANGLING_ENDPOINT, (a.id,), found=node, note=f"unknown {end}"))
    return sorted_report(out)


def _check_chain(g: FuzzyGraph, p: Path) -> List[GraphArrow]:
    steps = [g.arrow(i) for i in p.arrows]
    for first, second in zip(steps, steps[1:]):
        if first.cod != second.dom:
            raise PathError(
                f"{first.id} ends at {first.cod} but {second.id} starts at {second.dom}"
            )
    return steps


def path_plausibility(g: FuzzyGraph, p: Path) -> Fraction:
    return degree_min(a.plausibility for a in _check_chain(g, p))


def path_endpoints(g: FuzzyGraph, p: Path) -> Tuple[str, str]:
    steps = _check_chain(g, p)
    return steps[0].dom, steps[-1].cod


def enumerate_paths(g: FuzzyGraph, source: str, target: str, max_len: int):
    """All paths ``source -> target`` of length 1..max_len with their degrees.

    Arrows may repeat, so cycles are followed until the length bound.  Output
    is sorted lexicographically by the arrow-id tuple.
    """
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    for node in (source, target):
        if node not in g.nodes:
            raise NodeError(f"no node {node!r} in graph")

    found = []
    stack = [(a, (a.id,), a.plausibility) for a in g.outgoing(source)]
    while stack:
        last, ids, rho = stack.pop()
        if last.cod == target:
            found.append((Path(ids), rho))
        if len(ids) < max_len:
            for nxt in g.outgoing(last.cod):
                stack.append((nxt, ids + (nxt.id,), min(rho, nxt.plausibility)))
    found.sort(key=lambda item: item[0].arrows)
    return found
