"""Data graphs, quantified patterns and conditional patterns.

Everything here is an immutable value.  Patterns are validated explicitly
with :func:`validate`, which returns the list of violated invariants rather
than raising, so callers can report every problem at once.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Union

Const = Union[int, float, str]

OPS = (">=", "<=", "=", "!=", ">", "<")


def const_kind(c: Const) -> str:
    if isinstance(c, bool):
        raise TypeError("booleans are not attribute constants")
    if isinstance(c, int):
        return "int"
    if isinstance(c, float):
        return "dec"
    if isinstance(c, str):
        return "str"
    raise TypeError(f"unsupported constant {c!r}")


@dataclass(frozen=True, order=True)
class Atom:
    """One ``attr op constant`` comparison."""

    attr: str
    op: str
    value: Const

    def __post_init__(self):
        if self.op not in OPS:
            raise ValueError(f"unknown operator {self.op!r}")
        const_kind(self.value)

    def __str__(self):
        return f"{self.attr} {self.op} {format_const(self.value)}"


def format_const(c: Const) -> str:
    if isinstance(c, str):
        return '"' + c.replace("\\", "\\\\").replace('"', '\\"') + '"'
    return repr(c)


def _attrs(values: Mapping[str, Const] | Iterable[tuple[str, Const]] | None):
    if values is None:
        return ()
    items = values.items() if isinstance(values, Mapping) else values
    pairs = tuple(sorted(items))
    names = [k for k, _ in pairs]
    if len(set(names)) != len(names):
        raise ValueError("attribute names must be unique within one node")
    for _, v in pairs:
        const_kind(v)
    return pairs


# -- data graphs -----------------------------------------------------------

@dataclass(frozen=True, order=True)
class DataNode:
    id: str
    label: str
    attrs: tuple[tuple[str, Const], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "attrs", _attrs(self.attrs))

    @property
    def values(self) -> dict[str, Const]:
        return dict(self.attrs)


@dataclass(frozen=True, order=True)
class DataEdge:
    src: str
    dst: str
    label: str


@dataclass(frozen=True)
class DataGraph:
    """Labeled directed graph; edges are keyed by ``(src, dst, label)``."""

    nodes: frozenset[DataNode] = frozenset()
    edges: frozenset[DataEdge] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "nodes", frozenset(self.nodes))
        object.__setattr__(self, "edges", frozenset(self.edges))
        ids = [n.id for n in self.nodes]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate data node id")
        known = set(ids)
        for e in self.edges:
            if e.src not in known or e.dst not in known:
                raise ValueError(f"edge {e.src}->{e.dst} references an unknown node")

    @classmethod
    def build(cls, nodes: Iterable, edges: Iterable = ()) -> "DataGraph":
        """Build from ``(id, label, attrs)`` and ``(src, dst, label)`` tuples."""
        ns = [n if isinstance(n, DataNode) else DataNode(n[0], n[1], _attrs(n[2] if len(n) > 2 else None))
              for n in nodes]
        es = [e if isinstance(e, DataEdge) else DataEdge(*e) for e in edges]
        return cls(frozenset(ns), frozenset(es))

    @cached_property
    def node(self) -> dict[str, DataNode]:
        return {n.id: n for n in self.nodes}

    @cached_property
    def _out(self) -> dict[tuple[str, str], frozenset[str]]:
        idx = defaultdict(set)
        for e in self.edges:
            idx[e.src, e.label].add(e.dst)
        return {k: frozenset(v) for k, v in idx.items()}

    @cached_property
    def _in(self) -> dict[tuple[str, str], frozenset[str]]:
        idx = defaultdict(set)
        for e in self.edges:
            idx[e.dst, e.label].add(e.src)
        return {k: frozenset(v) for k, v in idx.items()}

    def children(self, v: str, label: str) -> frozenset[str]:
        return self._out.get((v, label), frozenset())

    def parents(self, v: str, label: str) -> frozenset[str]:
        return self._in.get((v, label), frozenset())

    @cached_property
    def by_label(self) -> dict[str, frozenset[str]]:
        idx = defaultdict(set)
        for n in self.nodes:
            idx[n.label].add(n.id)
        return {k: frozenset(v) for k, v in idx.items()}

    def __len__(self):
        return len(self.nodes) + len(self.edges)


# -- patterns --------------------------------------------------------------

@dataclass(frozen=True, order=True)
class PatternNode:
    id: str
    label: str
    constraint: tuple[Atom, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "constraint", tuple(self.constraint))


@dataclass(frozen=True, order=True)
class PatternEdge:
    src: str
    dst: str
    label: str
    cq: int = 1

    @property
    def key(self) -> tuple[str, str, str]:
        return (self.src, self.dst, self.label)

    def __str__(self):
        cq = f"[{self.cq}]" if self.cq != 1 else ""
        return f"{self.src}-{self.label}{cq}->{self.dst}"


EdgeKey = tuple[str, str, str]


@dataclass(frozen=True)
class Qgp:
    """Quantified graph pattern: constraints on nodes, counting quantifiers on edges."""

    nodes: frozenset[PatternNode] = frozenset()
    edges: frozenset[PatternEdge] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "nodes", frozenset(self.nodes))
        object.__setattr__(self, "edges", frozenset(self.edges))

    @classmethod
    def build(cls, nodes: Iterable, edges: Iterable = ()) -> "Qgp":
        ns = [n if isinstance(n, PatternNode) else PatternNode(n[0], n[1], tuple(n[2]) if len(n) > 2 else ())
              for n in nodes]
        es = [e if isinstance(e, PatternEdge) else PatternEdge(*e) for e in edges]
        return cls(frozenset(ns), frozenset(es))

    @cached_property
    def node(self) -> dict[str, PatternNode]:
        return {n.id: n for n in self.nodes}

    @cached_property
    def edge(self) -> dict[EdgeKey, PatternEdge]:
        return {e.key: e for e in self.edges}

    @cached_property
    def node_ids(self) -> tuple[str, ...]:
        return tuple(sorted({n.id for n in self.nodes}))

    @cached_property
    def out_edges(self) -> dict[str, tuple[PatternEdge, ...]]:
        idx = defaultdict(list)
        for e in sorted(self.edges):
            idx[e.src].append(e)
        return {k: tuple(v) for k, v in idx.items()}

    @cached_property
    def in_edges(self) -> dict[str, tuple[PatternEdge, ...]]:
        idx = defaultdict(list)
        for e in sorted(self.edges):
            idx[e.dst].append(e)
        return {k: tuple(v) for k, v in idx.items()}

    def outgoing(self, u: str) -> tuple[PatternEdge, ...]:
        return self.out_edges.get(u, ())

    def incoming(self, u: str) -> tuple[PatternEdge, ...]:
        return self.in_edges.get(u, ())

    @cached_property
    def neighbors(self) -> dict[str, frozenset[str]]:
        idx = defaultdict(set)
        for e in self.edges:
            idx[e.src].add(e.dst)
            idx[e.dst].add(e.src)
        return {k: frozenset(v) for k, v in idx.items()}

    def is_connected(self) -> bool:
        ids = set(self.node_ids)
        if not ids:
            return False
        start = min(ids)
        seen = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for w in self.neighbors.get(u, ()):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen == ids

    def __len__(self):
        return len(self.nodes) + len(self.edges)


@dataclass(frozen=True)
class FocusedQgp:
    pattern: Qgp
    focus: str


@dataclass(frozen=True)
class Cgp:
    """Core pattern plus positive and negative predicates on core nodes.

    A predicate's pattern contains its focus node, which is the very core
    node it is attached to (same id, label and constraint).
    """

    core: Qgp
    positives: tuple[FocusedQgp, ...] = ()
    negatives: tuple[FocusedQgp, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "positives", tuple(self.positives))
        object.__setattr__(self, "negatives", tuple(self.negatives))

    @property
    def predicates(self) -> Iterator[tuple[str, int, FocusedQgp]]:
        for i, p in enumerate(self.positives):
            yield "+", i, p
        for i, p in enumerate(self.negatives):
            yield "-", i, p

    def predicates_on(self, u: str, polarity: str) -> list[tuple[int, FocusedQgp]]:
        preds = self.positives if polarity == "+" else self.negatives
        return [(i, p) for i, p in enumerate(preds) if p.focus == u]

    @cached_property
    def pos_nodes(self) -> frozenset[str]:
        """Positive predicate nodes, focus nodes excluded."""
        core = set(self.core.node_ids)
        return frozenset(n.id for p in self.positives for n in p.pattern.nodes if n.id not in core)

    @cached_property
    def pos_edges(self) -> frozenset[PatternEdge]:
        return frozenset(e for p in self.positives for e in p.pattern.edges)

    @cached_property
    def neg_nodes(self) -> frozenset[str]:
        core = set(self.core.node_ids)
        return frozenset(n.id for p in self.negatives for n in p.pattern.nodes if n.id not in core)

    @cached_property
    def neg_edges(self) -> frozenset[PatternEdge]:
        return frozenset(e for p in self.negatives for e in p.pattern.edges)

    @classmethod
    def of(cls, q: Qgp) -> "Cgp":
        return cls(q)


@dataclass(frozen=True)
class Violation:
    code: str
    element: str = ""

    def __str__(self):
        return f"{self.code}: {self.element}" if self.element else self.code


class ValidationError(ValueError):
    def __init__(self, violations: list[Violation]):
        self.violations = list(violations)
        super().__init__("; ".join(map(str, self.violations)))


@dataclass(frozen=True)
class Size:
    core: int
    positive: int
    negative: int
    total: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "total", self.core + self.positive + self.negative)


# -- validation ------------------------------------------------------------

def _check_qgp(q: Qgp, where: str) -> list[Violation]:
    from .constraints import is_satisfiable, mixed_attributes

    out = []
    ids = [n.id for n in q.nodes]
    for dup in sorted({i for i in ids if ids.count(i) > 1}):
        out.append(Violation("duplicate node id", f"{where}:{dup}"))
    keys = [e.key for e in q.edges]
    for dup in sorted({k for k in keys if keys.count(k) > 1}):
        out.append(Violation("duplicate edge", f"{where}:{dup}"))
    known = set(ids)
    for e in sorted(q.edges):
        if e.src not in known or e.dst not in known:
            out.append(Violation("edge endpoint missing", f"{where}:{e}"))
        if e.cq < 1:
            out.append(Violation("CQ below 1", f"{where}:{e}"))
    for n in sorted(q.nodes):
        for attr in mixed_attributes(n.constraint):
            out.append(Violation("mixed constant types", f"{where}:{n.id}.{attr}"))
        if not mixed_attributes(n.constraint) and not is_satisfiable(n.constraint):
            out.append(Violation("unsatisfiable constraint", f"{where}:{n.id}"))
    if ids and not any(v.code == "edge endpoint missing" for v in out) and not q.is_connected():
        out.append(Violation("not connected", where))
    if not ids:
        out.append(Violation("empty pattern", where))
    return out


def validate(c: Cgp | Qgp) -> list[Violation]:
    """Return every structural violation of ``c``; an empty list means valid."""
    if isinstance(c, Qgp):
        c = Cgp(c)
    out = []
    for v in _check_qgp(c.core, "core"):
        if v.code == "not connected":
            v = Violation("core not connected")
        out.append(v)
    core = c.core.node
    seen_owner: dict[str, str] = {}
    for pol, i, p in c.predicates:
        name = f"{pol}{i}"
        out.extend(_check_qgp(p.pattern, f"predicate {name}"))
        if p.focus not in core:
            out.append(Violation("predicate focus not in core", f"{name}:{p.focus}"))
            continue
        if p.focus not in p.pattern.node:
            out.append(Violation("predicate focus not in predicate", f"{name}:{p.focus}"))
        elif p.pattern.node[p.focus] != core[p.focus]:
            out.append(Violation("predicate focus differs from core node", f"{name}:{p.focus}"))
        for nid in p.pattern.node_ids:
            if nid == p.focus:
                continue
            if nid in core:
                out.append(Violation("predicate intersects core beyond focus", f"{name}:{nid}"))
            elif nid in seen_owner:
                out.append(Violation("predicates share nodes", f"{seen_owner[nid]},{name}:{nid}"))
            else:
                seen_owner[nid] = name
    return out


def check(c: Cgp) -> Cgp:
    """Raise :class:`ValidationError` unless ``c`` is valid; return it otherwise."""
    violations = validate(c)
    if violations:
        raise ValidationError(violations)
    return c


def positive_version(c: Cgp) -> Qgp:
    """The core merged with every positive predicate."""
    nodes = set(c.core.nodes)
    edges = set(c.core.edges)
    for p in c.positives:
        nodes |= p.pattern.nodes
        edges |= p.pattern.edges
    return Qgp(frozenset(nodes), frozenset(edges))


def size(c: Cgp) -> Size:
    # predicate sizes exclude focus nodes, which are counted with the core
    pos = len(c.pos_nodes) + len(c.pos_edges)
    neg = len(c.neg_nodes) + len(c.neg_edges)
    return Size(len(c.core), pos, neg)


def is_rooted_tree(p: FocusedQgp) -> bool:
    """True when ``p`` is an undirected tree and every edge pointing back
    toward the focus has CQ 1.

    For such predicates satisfaction at a node ``v`` always has a witness
    that matches the focus to ``v`` alone.
    """
    q = p.pattern
    if len(q.edges) != len(q.nodes) - 1 or not q.is_connected():
        return False
    depth = {p.focus: 0}
    queue = [p.focus]
    while queue:
        u = queue.pop(0)
        for w in sorted(q.neighbors.get(u, ())):
            if w not in depth:
                depth[w] = depth[u] + 1
                queue.append(w)
    return all(e.cq == 1 or depth[e.src] < depth[e.dst] for e in q.edges)
