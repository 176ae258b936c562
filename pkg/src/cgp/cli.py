"""Command-line front end: ``cgp match|contains|scontains|scmatch|equiv|gen``.

Exit status: 0 positive verdict or success, 1 negative verdict (including an
empty match), 2 usage, parse or consistency errors.
"""
from __future__ import annotations

import argparse
import os
import sys

from .containment import equivalent_cgp, focus_equivalent, t_contained
from .dsl import ParseError, parse_graph, parse_match_result, parse_pattern, serialize_graph, \
    serialize_match_result, serialize_pattern
from .model import Cgp, FocusedQgp, ValidationError
from .scmatch import InconsistentInputs, sc_match
from .simulation import EMPTY, cond_sim
from .strongc import strong_report
from .testkit import GenParams, gen_cgp, gen_graph


class UsageError(Exception):
    pass


def _edge(key) -> str:
    src, dst, label = key
    return f"{src} -> {dst} : {label}"


def _read(path: str, parse):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror}") from exc
    try:
        return parse(text)
    except (ParseError, ValidationError, ValueError) as exc:
        raise UsageError(f"{path}: {exc}") from exc


class _Out:
    """Collects output; ``pretty`` groups lines under indented headings."""

    def __init__(self, pretty: bool):
        self.pretty, self.lines = pretty, []

    def line(self, text: str = ""):
        self.lines.append(text)

    def group(self, title: str, items):
        items = list(items)
        if self.pretty:
            self.lines.append(f"{title}:")
            self.lines += ["  " + s for s in items]
        else:
            self.lines += [f"{title} {s}" for s in items]

    def text(self) -> str:
        return "".join(s + "\n" for s in self.lines)


def _mapping(out: _Out, mapping):
    out.group("lambda", [f"{u} = {', '.join(sorted(ws))}" for u, ws in sorted(mapping.nodes.items())]
              + [f"{_edge(e)} = {'; '.join(_edge(x) for x in sorted(xs))}"
                 for e, xs in sorted(mapping.edges.items())])


def cmd_match(args, out: _Out) -> int:
    c = _read(args.pattern, parse_pattern)
    g = _read(args.graph, parse_graph)
    res = cond_sim(c, g)
    m = res[1] if res is not None else EMPTY
    out.lines.append(serialize_match_result(m, out.pretty).rstrip("\n"))
    return 0 if m else 1


def cmd_contains(args, out: _Out) -> int:
    c1, c2 = _read(args.p1, parse_pattern), _read(args.p2, parse_pattern)
    tc = t_contained(c1, c2)
    if tc is None:
        out.line("not contained")
        return 1
    out.line("contained")
    _mapping(out, tc.mapping)
    out.group("relation", [f"{a} {b}" for a, b in sorted(tc.relation)])
    return 0


def cmd_scontains(args, out: _Out) -> int:
    c1, c2 = _read(args.p1, parse_pattern), _read(args.p2, parse_pattern)
    sc, reports = strong_report(c1, c2)
    if sc is None and not reports:
        out.line("not contained")
        return 1
    if sc is None:
        out.line("not strongly contained")
        bad = next(r for r in reports if not r.ok)
        where = f"predicate {bad.polarity}{bad.pred} on {bad.focus}"
        if bad.uncovered:
            out.line(f"uncovered edge {_edge(bad.uncovered[0])} in {where}")
        else:
            out.line(f"{where}: {bad.status}")
        return 1
    out.line("strongly contained")
    _mapping(out, sc.mapping)
    out.group("r+", [f"{_edge(a)} ~ {_edge(b)}" for a, b in sorted(sc.r_plus)])
    out.group("r-", [f"{_edge(a)} ~ {_edge(b)}" for a, b in sorted(sc.r_minus)])
    out.group("predicate", [f"{r.polarity}{r.pred} on {r.focus}: {r.status}" for r in reports])
    return 0


def cmd_scmatch(args, out: _Out) -> int:
    c1, c2 = _read(args.p1, parse_pattern), _read(args.p2, parse_pattern)
    m2 = _read(args.result, parse_match_result)
    if m2 and (set(m2.nodes) != set(c2.core.node_ids) or set(m2.edges) != {e.key for e in c2.core.edges}):
        raise UsageError(f"inconsistent inputs: {args.result} is not a match result of {args.p2}")
    sc, _ = strong_report(c1, c2)
    if sc is None:
        out.line("not strongly contained")
        return 1
    try:
        m = sc_match(c1, c2, sc.mapping, sc.r_plus, sc.r_minus, m2)
    except InconsistentInputs as exc:
        raise UsageError(str(exc)) from exc
    out.lines.append(serialize_match_result(m, out.pretty).rstrip("\n"))
    return 0 if m else 1


def _focused(c: Cgp, focus: str, path: str) -> FocusedQgp:
    if c.positives or c.negatives:
        raise UsageError(f"{path}: --focus expects a pattern without predicates")
    if focus not in c.core.node:
        raise UsageError(f"{path}: unknown focus {focus}")
    return FocusedQgp(c.core, focus)


def cmd_equiv(args, out: _Out) -> int:
    c1, c2 = _read(args.p1, parse_pattern), _read(args.p2, parse_pattern)
    if args.focus:
        f1, f2 = args.focus
        ok = focus_equivalent(_focused(c1, f1, args.p1), _focused(c2, f2, args.p2))
    else:
        ok = equivalent_cgp(c1, c2)
    out.line("equivalent" if ok else "not equivalent")
    return 0 if ok else 1


def _range(text: str) -> tuple[int, int]:
    try:
        lo, _, hi = text.partition(":")
        return (int(lo), int(hi or lo))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected N or LO:HI, got {text!r}") from exc


def cmd_gen(args, out: _Out) -> int:
    seed = args.seed
    env = os.environ.get("CGP_SEED")
    if env is not None:
        try:
            seed = int(env)
        except ValueError as exc:
            raise UsageError(f"CGP_SEED must be an integer, got {env!r}") from exc
    fields = {"seed": seed}
    for name in ("nodes", "pattern_nodes", "predicates"):
        if getattr(args, name) is not None:
            fields[name] = getattr(args, name)
    if args.density is not None:
        fields["density"] = args.density
    try:
        p = GenParams(**fields)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.graph:
        text = serialize_graph(gen_graph(p), args.name or "G")
    else:
        text = serialize_pattern(gen_cgp(p), args.name or "C", pretty=out.pretty)
    out.lines.append(text.rstrip("\n"))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cgp", description="Conditional graph pattern tools.")
    ap.add_argument("--format", choices=("compact", "pretty"), default="compact")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("match", help="match a pattern against a graph")
    s.add_argument("pattern")
    s.add_argument("graph")
    s.set_defaults(run=cmd_match)

    for name, fn, text in (("contains", cmd_contains, "decide containment p1 in p2"),
                           ("scontains", cmd_scontains, "decide strong containment p1 in p2")):
        s = sub.add_parser(name, help=text)
        s.add_argument("p1")
        s.add_argument("p2")
        s.set_defaults(run=fn)

    s = sub.add_parser("scmatch", help="answer p1 from a match result of p2")
    s.add_argument("p1")
    s.add_argument("p2")
    s.add_argument("--result", required=True)
    s.set_defaults(run=cmd_scmatch)

    s = sub.add_parser("equiv", help="decide equivalence")
    s.add_argument("p1")
    s.add_argument("p2")
    s.add_argument("--focus", nargs=2, metavar=("F1", "F2"))
    s.set_defaults(run=cmd_equiv)

    s = sub.add_parser("gen", help="generate a random graph or pattern")
    kind = s.add_mutually_exclusive_group(required=True)
    kind.add_argument("--graph", action="store_true")
    kind.add_argument("--pattern", action="store_true")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--name")
    s.add_argument("--nodes", type=_range)
    s.add_argument("--pattern-nodes", type=_range)
    s.add_argument("--predicates", type=_range)
    s.add_argument("--density", type=float)
    s.set_defaults(run=cmd_gen)

    for p in sub.choices.values():
        p.add_argument("--format", choices=("compact", "pretty"), default=argparse.SUPPRESS)
    return ap


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = _Out(args.format == "pretty")
    try:
        code = args.run(args, out)
    except UsageError as exc:
        print(f"cgp: {exc}", file=stderr)
        return 2
    stdout.write(out.text())
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
