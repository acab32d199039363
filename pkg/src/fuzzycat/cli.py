"""Command-line front end.

Exit codes: 0 when the check passes or a value was produced, 1 when
violations were found or the property fails, 2 for usage and input errors.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from fractions import Fraction
from typing import List, Optional

from . import __version__
from .analysis import LimitMode, commutation, find_initial, find_terminal, is_epic, is_monic, isomorphism_degree
from .category import LawMode, validate_axioms
from .constructions import free_fuzzy_category, plausibility_annotation, preorder_category, sostak_check
from .degrees import TNorm, format_degree
from .errors import FuzzyCatError, GraphError, PreorderError
from .fileformats import (
    parse_annotation_file,
    parse_category_file,
    parse_graph_file,
    parse_relation_file,
    render_category,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
TRUNCATION_LISTING = 50


class _Usage(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _Usage(f"{self.prog}: {message}")


def _plain(value):
    if isinstance(value, Fraction):
        return format_degree(value)
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {k: _plain(v) for k, v in value.items()}
    return value


def _violation_dict(v):
    return {
        "law": v.law,
        "subjects": list(v.subjects),
        "expected": _plain(v.expected),
        "found": _plain(v.found),
        "note": v.note,
    }


def _report(args, digest, verdict, violations=(), witnesses=(), **values):
    return {
        "tool": "fuzzycat",
        "version": __version__,
        "command": args.command,
        "input_sha256": digest,
        "verdict": verdict,
        "values": _plain(values),
        "violations": [_violation_dict(v) for v in violations],
        "witnesses": _plain(list(witnesses)),
    }


def render_text(doc) -> str:
    head = [
        ("command", doc["command"]),
        ("input", "sha256:" + doc["input_sha256"]),
        ("verdict", doc["verdict"]),
    ]
    head += [(k, _show(v)) for k, v in sorted(doc["values"].items())]
    width = max(len(k) for k, _ in head)
    lines = [f"{k.ljust(width)}  {v}" for k, v in head]
    lines.append(f"violations ({len(doc['violations'])})")
    for v in doc["violations"]:
        extra = ""
        if v["expected"] is not None or v["found"] is not None:
            extra = f"  expected {_show(v['expected'])}, found {_show(v['found'])}"
        note = f"  [{v['note']}]" if v["note"] else ""
        lines.append(f"  {v['law']:<16} {', '.join(v['subjects'])}{extra}{note}")
    if doc["witnesses"]:
        lines.append(f"witnesses ({len(doc['witnesses'])})")
        for w in doc["witnesses"]:
            lines.append("  " + "  ".join(f"{k}={_show(w[k])}" for k in sorted(w)))
    return "\n".join(lines) + "\n"


def render_machine(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _show(value):
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return "[" + ", ".join(_show(v) for v in value) + "]"
    return str(value)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fuzzycat", description="Check finite fuzzy categories.")
    parser.add_argument("--version", action="version", version=f"fuzzycat {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def command(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="input file, or - for standard input")
        p.add_argument("--format", choices=["text", "machine"], default="text")
        return p

    def with_tnorm(p, help_text="t-norm (default: the file's, else min)"):
        p.add_argument("--tnorm", choices=[t.value for t in TNorm], help=help_text)

    p = command("validate", "check the category axioms")
    p.add_argument("--law", choices=[m.value for m in LawMode],
                   help="degree law (default: the file's, else strict)")
    with_tnorm(p)

    p = command("commute", "compare two parallel paths")
    p.add_argument("--path", action="append", required=True,
                   help="comma-separated arrow ids, first-applied first; give exactly twice")

    p = command("iso", "degree to which two objects are isomorphic")
    p.add_argument("a")
    p.add_argument("b")

    for name, what in (("monic", "left"), ("epic", "right")):
        p = command(name, f"{what}-cancellation test for an arrow")
        p.add_argument("arrow")

    p = command("limits", "initial and terminal objects")
    p.add_argument("--mode", choices=[m.value for m in LimitMode], default=LimitMode.EXACTLY_ONE.value)

    p = command("from-graph", "write the free fuzzy category on a graph as .fcat")
    p.add_argument("--max-len", type=int, default=3)

    p = command("from-relation", "write the preorder category of a fuzzy relation as .fcat")
    with_tnorm(p, "t-norm for transitivity (default min)")

    p = command("sostak", "check the graded-object/graded-morphism conditions")
    p.add_argument("--annotation", help="omega/mu file; unlisted entries default to omega = 1 and mu = plausibility")
    with_tnorm(p, "the * operation (default: the annotation's, else min)")
    return parser


def _read(path: str, stdin) -> bytes:
    if path == "-":
        data = stdin.read()
        return data.encode("utf-8") if isinstance(data, str) else data
    with open(path, "rb") as fh:
        return fh.read()


def _decode(data: bytes) -> str:
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise _Usage(f"input is not UTF-8: {exc}") from None


def _dispatch(args, data: bytes, stdout):
    digest = hashlib.sha256(data).hexdigest()
    text = _decode(data)

    if args.command == "from-graph":
        if args.max_len < 1:
            raise _Usage("--max-len must be at least 1")
        free = free_fuzzy_category(parse_graph_file(text), args.max_len)
        stdout.write(render_category(free.category))
        if free.truncated_count:
            stdout.write(f"# truncated composites (length > {args.max_len}): {free.truncated_count}\n")
            for i, (g, f) in enumerate(free.truncated_pairs()):
                if i == TRUNCATION_LISTING:
                    stdout.write(f"#   ... and {free.truncated_count - i} more\n")
                    break
                stdout.write(f"#   {g} . {f}\n")
        return EXIT_OK, None

    if args.command == "from-relation":
        t = TNorm(args.tnorm) if args.tnorm else TNorm.MIN
        stdout.write(render_category(preorder_category(parse_relation_file(text), t)))
        return EXIT_OK, None

    c = parse_category_file(text)

    if args.command == "validate":
        c = c.with_modes(LawMode(args.law) if args.law else None, TNorm(args.tnorm) if args.tnorm else None)
        found = validate_axioms(c)
        doc = _report(args, digest, "fail" if found else "pass", found,
                      law=c.law_mode.value, tnorm=c.tnorm.value)
        return (EXIT_FAIL if found else EXIT_OK), doc

    if args.command == "commute":
        if len(args.path) != 2:
            raise _Usage("commute needs exactly two --path options")
        p1, p2 = ([x.strip() for x in p.split(",") if x.strip()] for p in args.path)
        r = commutation(c, p1, p2)
        doc = _report(args, digest, "value" if r.commutes else "fail",
                      nu=r.nu, strong=r.strong, commutes=r.commutes,
                      composite1=r.composite1, composite2=r.composite2, min1=r.min1, min2=r.min2)
        return (EXIT_OK if r.commutes else EXIT_FAIL), doc

    if args.command == "iso":
        w = isomorphism_degree(c, args.a, args.b)
        if w is None:
            return EXIT_FAIL, _report(args, digest, "fail", a=args.a, b=args.b)
        doc = _report(args, digest, "value", [], [{"f": w.f, "g": w.g, "degree": w.degree}],
                      a=args.a, b=args.b, degree=w.degree)
        return EXIT_OK, doc

    if args.command in ("monic", "epic"):
        r = (is_monic if args.command == "monic" else is_epic)(c, args.arrow)
        witnesses = [] if r.counterexample is None else [
            {"g": r.counterexample[0], "h": r.counterexample[1], "degree": r.nu}
        ]
        doc = _report(args, digest, "pass" if r.holds else "fail", [], witnesses,
                      arrow=r.arrow, holds=r.holds, nu=r.nu)
        return (EXIT_OK if r.holds else EXIT_FAIL), doc

    if args.command == "limits":
        mode = LimitMode(args.mode)
        doc = _report(args, digest, "value", mode=mode.value,
                      initial=find_initial(c, mode), terminal=find_terminal(c, mode))
        return EXIT_OK, doc

    if args.command == "sostak":
        ann = plausibility_annotation(c)
        if args.annotation:
            with open(args.annotation, "rb") as fh:
                extra = fh.read()
            given = parse_annotation_file(_decode(extra))
            # entries the file leaves out keep their defaults
            ann = type(ann)({**ann.omega, **given.omega}, {**ann.mu, **given.mu}, given.star)
            digest = hashlib.sha256(data + b"\0" + extra).hexdigest()
        if args.tnorm:
            ann = type(ann)(ann.omega, ann.mu, TNorm(args.tnorm))
        found = sostak_check(c, ann)
        doc = _report(args, digest, "fail" if found else "pass", found, star=ann.star.value)
        return (EXIT_FAIL if found else EXIT_OK), doc

    raise _Usage(f"unknown command {args.command!r}")


def run(argv: List[str], stdout=None, stderr=None, stdin=None) -> int:
    """Run one command; returns the exit code."""
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    stdin = sys.stdin if stdin is None else stdin
    try:
        args = build_parser().parse_args(argv)
    except _Usage as exc:
        stderr.write(f"{exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)

    try:
        data = _read(args.file, stdin)
        code, doc = _dispatch(args, data, stdout)
    except (GraphError, PreorderError) as exc:
        stderr.write(f"error: {exc}\n")
        for v in exc.violations:
            stderr.write(f"  {v}\n")
        return EXIT_FAIL
    except (FuzzyCatError, _Usage, OSError) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_USAGE

    if doc is not None:
        stdout.write(render_machine(doc) if args.format == "machine" else render_text(doc))
    return code


def main(argv: Optional[List[str]] = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
