from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, List, Tuple

from .degrees import format_degree


@dataclass(frozen=True)
class Violation:
    """One failed check.

    ``law`` is a short tag such as ``"DegreeLaw"``; ``subjects`` are the ids
    of the offending arrows (or nodes, elements, objects) in a fixed order.
    """

    law: str
    subjects: Tuple[str, ...]
    expected: Any = None
    found: Any = None
    note: str = ""

    def sort_key(self):
        return (self.law, self.subjects, _key(self.expected), _key(self.found), self.note)

    def __str__(self):
        parts = [f"{self.law}: {', '.join(self.subjects)}"]
        if self.expected is not None or self.found is not None:
            parts.append(f"expected {_show(self.expected)}, found {_show(self.found)}")
        if self.note:
            parts.append(self.note)
        return "; ".join(parts)


def _show(value):
    if isinstance(value, Fraction):
        return format_degree(value)
    return "-" if value is None else str(value)


def _key(value):
    return (type(value).__name__, _show(value))


def sorted_report(violations: Iterable[Violation]) -> List[Violation]:
    """Deduplicate and order violations by tag, then subject ids."""
    return sorted(set(violations), key=Violation.sort_key)
