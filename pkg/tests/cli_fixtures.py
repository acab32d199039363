"""Small input files shared by the CLI tests and the acceptance suite."""

from fuzzycat.constructions import unit_interval_category
from fuzzycat.fileformats import render_category

TRIANGLE = """\
object A
object B
object C
arrow f : A -> B @ 0.8
arrow g : B -> C @ 0.5
arrow h : A -> C @ 0.6
arrow h2 : A -> C @ 0.5
compose g . f = h
"""

BROKEN = """\
object A
object B
object C
arrow f : A -> B @ 0.8
arrow g : B -> C @ 0.5
arrow h : A -> C @ 0.6
compose g . f = h
"""

FORK = """\
object A
object B
object C
arrow f : A -> B @ 0.9
arrow g : C -> A @ 0.6
arrow h : C -> A @ 0.7
arrow k : C -> B @ 0.5
compose f . g = k
compose f . h = k
"""

ISO = """\
mode lax
object A
object B
arrow f : A -> B @ 0.6
arrow g : B -> A @ 0.9
compose g . f = 1_A
compose f . g = 1_B
"""

GRAPH = """\
node A
node B
arrow f : A -> B @ 0.7
arrow g : B -> A @ 0.4
"""

RELATION = "elements: x y z\nrel x y = 0.7\nrel y z = 0.5\nrel x z = 0.5\n"
NON_TRANSITIVE = "elements: x y z\nrel x y = 0.7\nrel y z = 0.5\n"

SOURCES = {
    "unit.fcat": render_category(unit_interval_category(["0", "1/4", "1/2", "1"])),
    "triangle.fcat": TRIANGLE,
    "broken.fcat": BROKEN,
    "fork.fcat": FORK,
    "iso.fcat": ISO,
    "loop.graph": GRAPH,
    "rel.txt": RELATION,
    "bad_rel.txt": NON_TRANSITIVE,
    "garbage.fcat": "object A\narrow f : A -> A @ 7\n",
}


def write_fixtures(directory):
    paths = {}
    for name, text in SOURCES.items():
        p = directory / name
        p.write_text(text, encoding="utf-8")
        paths[name] = str(p)
    return paths
