"""Simulation-based matching of patterns over data graphs.

All engines share one greatest-fixpoint refinement: start from the
label/attribute compatible candidates of every pattern node and remove data
nodes that violate a child condition (with counting quantifier) or, for dual
semantics, a parent condition, until nothing changes.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Mapping

from .constraints import satisfies
from .model import Cgp, DataEdge, DataGraph, DataNode, EdgeKey, FocusedQgp, PatternNode, Qgp

MatchRelation = frozenset  # of (pattern node id, data node id)


@dataclass(frozen=True)
class MatchResult:
    """Core-node and core-edge matches, with matched node payloads."""

    nodes: Mapping[str, frozenset[str]] = field(default_factory=dict)
    edges: Mapping[EdgeKey, frozenset[DataEdge]] = field(default_factory=dict)
    payload: Mapping[str, DataNode] = field(default_factory=dict)

    def __bool__(self):
        return bool(self.nodes)

    def __len__(self):
        """Number of distinct matched data nodes and edges."""
        vs = set().union(*self.nodes.values()) if self.nodes else set()
        es = set().union(*self.edges.values()) if self.edges else set()
        return len(vs) + len(es)

    def check(self) -> None:
        """Raise ``ValueError`` if an edge endpoint is missing from its node sets."""
        for key, matched in self.edges.items():
            src, dst, label = key
            for e in matched:
                if (e.src not in self.nodes.get(src, ()) or e.dst not in self.nodes.get(dst, ())
                        or e.label != label):
                    raise ValueError(f"corrupt match result: {e} under {key}")
        for vs in self.nodes.values():
            for v in vs:
                if v not in self.payload:
                    raise ValueError(f"corrupt match result: no payload for {v}")


EMPTY = MatchResult()


def compatible(node: PatternNode, g: DataGraph) -> set[str]:
    return {v for v in g.by_label.get(node.label, ()) if satisfies(g.node[v].attrs, node.constraint)}


def refine(q: Qgp, g: DataGraph, sim: dict[str, set[str]], *, parents: bool = True,
           rng: random.Random | None = None) -> dict[str, set[str]]:
    """Shrink ``sim`` in place to the largest sub-relation meeting the edge conditions."""
    pending = set(q.node_ids)
    while pending:
        order = sorted(pending)
        if rng is not None:
            rng.shuffle(order)
        u = order[0]
        pending.discard(u)
        cands = sorted(sim[u])
        if rng is not None:
            rng.shuffle(cands)
        removed = False
        for v in cands:
            if not _holds(q, g, sim, u, v, parents):
                sim[u].discard(v)
                removed = True
        if removed:
            pending |= q.neighbors.get(u, frozenset())
    return sim


def _holds(q, g, sim, u, v, parents):
    for e in q.outgoing(u):
        kids = g.children(v, e.label)
        if len(kids) < e.cq:
            return False
        target = sim[e.dst]
        if e.cq == 1:
            if kids.isdisjoint(target):
                return False
        elif sum(1 for k in kids if k in target) < e.cq:
            return False
    if parents:
        for e in q.incoming(u):
            if g.parents(v, e.label).isdisjoint(sim[e.src]):
                return False
    return True


def _relation(sim) -> MatchRelation:
    return frozenset((u, v) for u, vs in sim.items() for v in vs)


def _run(q: Qgp, g: DataGraph, init: dict[str, set[str]] | None, parents: bool, rng):
    sim = {n.id: compatible(n, g) for n in q.nodes} if init is None else init
    refine(q, g, sim, parents=parents, rng=rng)
    if any(not vs for vs in sim.values()):
        return None
    return sim


def graph_sim(p: Qgp, g: DataGraph, *, rng: random.Random | None = None) -> MatchRelation:
    """Plain graph simulation (children only); empty when some node is unmatched."""
    if any(e.cq != 1 for e in p.edges):
        raise ValueError("CQ unsupported in graph simulation")
    sim = _run(p, g, None, False, rng)
    return _relation(sim) if sim else frozenset()


def qgp_sim(q: Qgp, g: DataGraph, *, rng: random.Random | None = None) -> MatchRelation:
    """Maximum dual-simulation relation honouring counting quantifiers."""
    sim = _run(q, g, None, True, rng)
    return _relation(sim) if sim else frozenset()


def qgp_eval(q: FocusedQgp, g: DataGraph) -> frozenset[str]:
    """Data nodes matching the focus of ``q``."""
    sim = _run(q.pattern, g, None, True, None)
    return frozenset(sim[q.focus]) if sim else frozenset()


def predicate_filter(c: Cgp, g: DataGraph, sim: dict[str, set[str]]) -> None:
    """Apply every predicate of ``c`` to the candidate sets of its focus."""
    for pol, _, p in c.predicates:
        hits = qgp_eval(p, g)
        if pol == "+":
            sim[p.focus] &= hits
        else:
            sim[p.focus] -= hits


def cond_sim(c: Cgp, g: DataGraph, *, rng: random.Random | None = None
             ) -> tuple[MatchRelation, MatchResult] | None:
    """Conditional simulation of ``c`` over ``g``; ``None`` when ``g`` does not match.

    A predicate is itself a pattern with a maximum relation, so "some
    subgraph matches the predicate with the focus on v" is the same as v
    being among the predicate's focus matches over the whole graph.  Each
    predicate is therefore evaluated once, up front.
    """
    sim = {n.id: compatible(n, g) for n in c.core.nodes}
    predicate_filter(c, g, sim)
    sim = _run(c.core, g, sim, True, rng)
    if sim is None:
        return None
    return _relation(sim), match_result(c.core, g, sim)


def match_result(core: Qgp, g: DataGraph, sim: Mapping[str, set[str]]) -> MatchResult:
    nodes = {u: frozenset(vs) for u, vs in sim.items()}
    edges = {}
    for e in core.edges:
        targets = nodes[e.dst]
        edges[e.key] = frozenset(DataEdge(v, w, e.label) for v in nodes[e.src]
                                 for w in g.children(v, e.label) if w in targets)
    payload = {v: g.node[v] for vs in nodes.values() for v in vs}
    return MatchResult(nodes, edges, payload)
