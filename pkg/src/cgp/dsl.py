"""Line-oriented text format for graphs, patterns and match results.

::

    pattern C1
    node a1 : Pr {age >= 45}
    node b1 : PhD
    edge a1 -> b1 : supervised [2]
    predicate + on b1
      node x1 : Article
      edge b1 -> x1 : published [2]
    end

Graphs use ``graph <name>`` and attribute assignments (``{age=50}``); edges
carry no quantifier.  A match result starts with ``result`` and lists, per
core node, the matched nodes with their attributes and, per core edge, the
matched edges.  ``#`` starts a comment.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field

from .model import (Atom, Cgp, DataEdge, DataGraph, DataNode, FocusedQgp, PatternEdge, PatternNode, Qgp,
                    ValidationError, format_const, validate)
from .simulation import MatchResult


class ParseError(ValueError):
    def __init__(self, line: int, column: int, message: str):
        self.line, self.column = line, column
        super().__init__(f"line {line}, column {column}: {message}")


_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<string>"(?:[^"\\]|\\.)*")
  | (?P<arrow>->)
  | (?P<number>-?\d+(?:\.\d+)?(?:[eE][+-]?\d+)?)
  | (?P<op>>=|<=|!=|=|>|<)
  | (?P<ident>[A-Za-z_][\w.]*)
  | (?P<punct>[:{},\[\]+-])
""", re.VERBOSE)


@dataclass
class Tok:
    kind: str
    text: str
    col: int


def _tokens(line: str, lineno: int) -> list[Tok]:
    out, pos = [], 0
    code = _strip_comment(line)
    while pos < len(code):
        m = _TOKEN.match(code, pos)
        if not m:
            raise ParseError(lineno, pos + 1, f"unexpected character {code[pos]!r}")
        if m.lastgroup != "ws":
            out.append(Tok(m.lastgroup, m.group(), pos + 1))
        pos = m.end()
    return out


def _strip_comment(line: str) -> str:
    in_str = esc = False
    for i, ch in enumerate(line):
        if in_str:
            if esc:
                esc = False
            elif ch == "\\":
                esc = True
            elif ch == '"':
                in_str = False
        elif ch == '"':
            in_str = True
        elif ch == "#":
            return line[:i]
    return line


class _Line:
    def __init__(self, toks: list[Tok], lineno: int, width: int):
        self.toks, self.i, self.lineno, self.width = toks, 0, lineno, width

    def error(self, msg: str):
        col = self.toks[self.i].col if self.i < len(self.toks) else self.width + 1
        raise ParseError(self.lineno, col, msg)

    def peek(self) -> Tok | None:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, kind: str, text: str | None = None) -> str:
        t = self.peek()
        if t is None or t.kind != kind or (text is not None and t.text != text):
            want = repr(text) if text else kind
            got = repr(t.text) if t else "end of line"
            self.error(f"expected {want}, got {got}")
        self.i += 1
        return t.text

    def accept(self, kind: str, text: str | None = None) -> bool:
        t = self.peek()
        if t is not None and t.kind == kind and (text is None or t.text == text):
            self.i += 1
            return True
        return False

    def const(self):
        t = self.peek()
        if t is None:
            self.error("expected a constant")
        self.i += 1
        if t.kind == "string":
            return re.sub(r"\\(.)", r"\1", t.text[1:-1])
        if t.kind == "number":
            return float(t.text) if re.search(r"[.eE]", t.text) else int(t.text)
        self.i -= 1
        self.error(f"expected a constant, got {t.text!r}")

    def done(self):
        if self.peek() is not None:
            self.error(f"unexpected {self.peek().text!r}")


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        toks = _tokens(raw, lineno)
        if toks:
            yield _Line(toks, lineno, len(raw))


def _braced(ln: _Line, item):
    out = []
    if not ln.accept("punct", "{"):
        return out
    if ln.accept("punct", "}"):
        return out
    while True:
        out.append(item(ln))
        if ln.accept("punct", "}"):
            return out
        ln.take("punct", ",")


def _atom(ln: _Line) -> Atom:
    attr = ln.take("ident")
    op = ln.take("op")
    return Atom(attr, op, ln.const())


def _assignment(ln: _Line):
    attr = ln.take("ident")
    ln.take("op", "=")
    return attr, ln.const()


def _header(lines, kind: str) -> tuple[str, list]:
    lines = list(lines)
    if not lines:
        raise ParseError(1, 1, f"expected '{kind}' header")
    head = lines[0]
    head.take("ident", kind)
    name = head.take("ident") if head.peek() is not None else ""
    head.done()
    return name, lines[1:]


# -- graphs ----------------------------------------------------------------

def parse_graph(text: str) -> DataGraph:
    _, body = _header(_lines(text), "graph")
    nodes, edges, seen = [], [], {}
    for ln in body:
        kw = ln.take("ident")
        if kw == "node":
            nid = ln.take("ident")
            ln.take("punct", ":")
            label = ln.take("ident")
            pairs = _braced(ln, _assignment)
            ln.done()
            names = [k for k, _ in pairs]
            if len(set(names)) != len(names):
                raise ParseError(ln.lineno, 1, "attribute names must be unique within one node")
            if nid in seen:
                raise ParseError(ln.lineno, 1, f"duplicate data node id {nid}")
            seen[nid] = ln.lineno
            nodes.append(DataNode(nid, label, tuple(pairs)))
        elif kw == "edge":
            src = ln.take("ident")
            ln.take("arrow")
            dst = ln.take("ident")
            ln.take("punct", ":")
            label = ln.take("ident")
            if ln.peek() is not None and ln.peek().text == "[":
                ln.error("data edges carry no quantifier")
            ln.done()
            edges.append((DataEdge(src, dst, label), ln.lineno))
        else:
            ln.i -= 1
            ln.error(f"unknown statement {kw!r}")
    for e, lineno in edges:
        for end in (e.src, e.dst):
            if end not in seen:
                raise ParseError(lineno, 1, f"edge references unknown node {end}")
    return DataGraph(frozenset(nodes), frozenset(e for e, _ in edges))


def serialize_graph(g: DataGraph, name: str = "G") -> str:
    out = [f"graph {name}".rstrip()]
    for n in sorted(g.nodes):
        attrs = ", ".join(f"{k}={format_const(v)}" for k, v in n.attrs)
        out.append(f"node {n.id} : {n.label}" + (f" {{{attrs}}}" if attrs else ""))
    for e in sorted(g.edges):
        out.append(f"edge {e.src} -> {e.dst} : {e.label}")
    return "\n".join(out) + "\n"


# -- patterns --------------------------------------------------------------

@dataclass
class _Block:
    polarity: str
    focus: str
    lineno: int
    nodes: list = field(default_factory=list)
    edges: list = field(default_factory=list)


def _pattern_node(ln: _Line) -> PatternNode:
    nid = ln.take("ident")
    ln.take("punct", ":")
    label = ln.take("ident")
    atoms = _braced(ln, _atom)
    ln.done()
    return PatternNode(nid, label, tuple(atoms))


def _pattern_edge(ln: _Line) -> PatternEdge:
    src = ln.take("ident")
    ln.take("arrow")
    dst = ln.take("ident")
    ln.take("punct", ":")
    label = ln.take("ident")
    cq = 1
    if ln.accept("punct", "["):
        t = ln.peek()
        ln.take("number")
        if not re.fullmatch(r"-?\d+", t.text):
            ln.i -= 1
            ln.error("quantifier must be an integer")
        cq = int(t.text)
        ln.take("punct", "]")
    ln.done()
    return PatternEdge(src, dst, label, cq)


def parse_pattern_named(text: str) -> tuple[str, Cgp]:
    name, body = _header(_lines(text), "pattern")
    core_nodes, core_edges, blocks = [], [], []
    block = None
    for ln in body:
        kw = ln.take("ident")
        if kw == "predicate":
            if block is not None:
                ln.error("nested predicate block")
            if ln.accept("punct", "+"):
                pol = "+"
            else:
                ln.take("punct", "-")
                pol = "-"
            ln.take("ident", "on")
            focus = ln.take("ident")
            ln.done()
            block = _Block(pol, focus, ln.lineno)
        elif kw == "end":
            ln.done()
            if block is None:
                ln.i = 0
                ln.error("'end' outside a predicate block")
            blocks.append(block)
            block = None
        elif kw == "node":
            n = _pattern_node(ln)
            (block.nodes if block else core_nodes).append((n, ln.lineno))
        elif kw == "edge":
            e = _pattern_edge(ln)
            (block.edges if block else core_edges).append(e)
        else:
            ln.i -= 1
            ln.error(f"unknown statement {kw!r}")
    if block is not None:
        raise ParseError(block.lineno, 1, "predicate block is not closed with 'end'")
    core = Qgp(frozenset(n for n, _ in core_nodes), frozenset(core_edges))
    core_ids = {n.id for n, _ in core_nodes}
    pos, neg = [], []
    for b in blocks:
        nodes = set()
        for n, lineno in b.nodes:
            if n.id in core_ids and (n.id != b.focus or n != core.node.get(n.id)):
                raise ParseError(lineno, 1, f"predicate redeclares core node {n.id}")
            nodes.add(n)
        if b.focus in core.node:
            nodes.add(core.node[b.focus])
        pred = FocusedQgp(Qgp(frozenset(nodes), frozenset(b.edges)), b.focus)
        (pos if b.polarity == "+" else neg).append(pred)
    c = Cgp(core, tuple(pos), tuple(neg))
    _check_duplicates(core_nodes, core_edges, blocks)
    violations = validate(c)
    if violations:
        raise ValidationError(violations)
    return name, c


def _check_duplicates(core_nodes, core_edges, blocks):
    from .model import Violation

    found = []
    ids = [n.id for n, _ in core_nodes] + [n.id for b in blocks for n, _ in b.nodes
                                           if n.id != b.focus]
    for dup in sorted({i for i in ids if ids.count(i) > 1}):
        found.append(Violation("duplicate node id", dup))
    keys = [e.key for e in core_edges] + [e.key for b in blocks for e in b.edges]
    for dup in sorted({k for k in keys if keys.count(k) > 1}):
        found.append(Violation("duplicate edge", str(dup)))
    if found:
        raise ValidationError(found)


def parse_pattern(text: str) -> Cgp:
    return parse_pattern_named(text)[1]


def _node_line(n: PatternNode) -> str:
    cons = ", ".join(map(str, n.constraint))
    return f"node {n.id} : {n.label}" + (f" {{{cons}}}" if cons else "")


def _edge_line(e: PatternEdge) -> str:
    return f"edge {e.src} -> {e.dst} : {e.label}" + (f" [{e.cq}]" if e.cq != 1 else "")


def serialize_pattern(c: Cgp, name: str = "C", pretty: bool = True) -> str:
    pad = "  " if pretty else ""
    out = [f"pattern {name}".rstrip()]
    out += [_node_line(n) for n in sorted(c.core.nodes)]
    out += [_edge_line(e) for e in sorted(c.core.edges)]
    for pol, _, p in c.predicates:
        out.append(f"predicate {pol} on {p.focus}")
        out += [pad + _node_line(n) for n in sorted(p.pattern.nodes) if n.id != p.focus]
        out += [pad + _edge_line(e) for e in sorted(p.pattern.edges)]
        out.append("end")
    return "\n".join(out) + "\n"


# -- match results ---------------------------------------------------------

def serialize_match_result(m: MatchResult, pretty: bool = False) -> str:
    pad = "  " if pretty else ""
    out = ["result"]
    for u in sorted(m.nodes):
        out.append(f"section {u}")
        for v in sorted(m.nodes[u]):
            n = m.payload[v]
            attrs = ", ".join(f"{k}={format_const(x)}" for k, x in n.attrs)
            out.append(pad + f"node {n.id} : {n.label}" + (f" {{{attrs}}}" if attrs else ""))
    for key in sorted(m.edges):
        src, dst, label = key
        out.append(f"section {src} -> {dst} : {label}")
        for e in sorted(m.edges[key]):
            out.append(pad + f"edge {e.src} -> {e.dst} : {e.label}")
    return "\n".join(out) + "\n"


def parse_match_result(text: str) -> MatchResult:
    lines = list(_lines(text))
    if not lines:
        raise ParseError(1, 1, "expected 'result' header")
    lines[0].take("ident", "result")
    lines[0].done()
    nodes, edges, payload = {}, {}, {}
    section = None
    for ln in lines[1:]:
        kw = ln.take("ident")
        if kw == "section":
            a = ln.take("ident")
            if ln.accept("arrow"):
                b = ln.take("ident")
                ln.take("punct", ":")
                section = ("edge", (a, b, ln.take("ident")))
                edges.setdefault(section[1], set())
            else:
                section = ("node", a)
                nodes.setdefault(a, set())
            ln.done()
        elif kw == "node":
            if section is None or section[0] != "node":
                ln.i -= 1
                ln.error("node line outside a node section")
            nid = ln.take("ident")
            ln.take("punct", ":")
            label = ln.take("ident")
            n = DataNode(nid, label, tuple(_braced(ln, _assignment)))
            ln.done()
            if payload.setdefault(nid, n) != n:
                raise ParseError(ln.lineno, 1, f"conflicting payload for {nid}")
            nodes[section[1]].add(nid)
        elif kw == "edge":
            if section is None or section[0] != "edge":
                ln.i -= 1
                ln.error("edge line outside an edge section")
            src = ln.take("ident")
            ln.take("arrow")
            dst = ln.take("ident")
            ln.take("punct", ":")
            label = ln.take("ident")
            ln.done()
            edges[section[1]].add(DataEdge(src, dst, label))
        else:
            ln.i -= 1
            ln.error(f"unknown statement {kw!r}")
    m = MatchResult({k: frozenset(v) for k, v in nodes.items()},
                    {k: frozenset(v) for k, v in edges.items()}, payload)
    m.check()
    return m
