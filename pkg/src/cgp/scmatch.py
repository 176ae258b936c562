"""Answer a strongly contained pattern from the container's match result.

Nothing here accepts a data graph: the only graph available is the union of
the nodes and edges in C2's match result (the view graph).
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Mapping

from .constraints import satisfies
from .containment import ContainmentMapping
from .model import Cgp, DataEdge, DataGraph, DataNode, EdgeKey
from .simulation import EMPTY, MatchResult, compatible, match_result, refine
from .strongc import StrongContainment, strong_report


class InconsistentInputs(ValueError):
    pass


@dataclass(frozen=True)
class ViewGraph:
    graph: DataGraph
    node_sources: Mapping[str, tuple[str, ...]]
    edge_sources: Mapping[DataEdge, tuple[EdgeKey, ...]]


def build_view_graph(m2: MatchResult) -> ViewGraph:
    """Materialize a match result as a graph, remembering which pattern
    element each data element matched."""
    m2.check()
    node_src = defaultdict(list)
    for u in sorted(m2.nodes):
        for v in sorted(m2.nodes[u]):
            node_src[v].append(u)
    edge_src = defaultdict(list)
    for key in sorted(m2.edges):
        for e in sorted(m2.edges[key]):
            edge_src[e].append(key)
    nodes = frozenset(m2.payload[v] for v in node_src)
    g = DataGraph(nodes, frozenset(edge_src))
    return ViewGraph(g, {k: tuple(v) for k, v in sorted(node_src.items())},
                     {k: tuple(v) for k, v in sorted(edge_src.items())})


def _consistent(c2: Cgp, m2: MatchResult) -> bool:
    return set(m2.nodes) == set(c2.core.node_ids) and set(m2.edges) == {e.key for e in c2.core.edges}


def sc_match(c1: Cgp, c2: Cgp, mapping: ContainmentMapping, r_plus, r_minus,
             m2: MatchResult) -> MatchResult:
    """C1's match result from C2's, given that C1 is strongly contained in C2.

    The containment witness is recomputed from the patterns alone and must
    agree with ``(mapping, r_plus, r_minus)``.
    """
    sc, _ = strong_report(c1, c2)
    if (sc is None or sc.mapping != mapping or sc.r_plus != frozenset(r_plus)
            or sc.r_minus != frozenset(r_minus)):
        raise InconsistentInputs("inconsistent inputs: not a strong containment witness for these patterns")
    if not m2:
        return EMPTY
    if not _consistent(c2, m2):
        raise InconsistentInputs("inconsistent inputs: match result is not over the containing pattern")
    try:
        view = build_view_graph(m2)
    except ValueError as exc:
        raise InconsistentInputs(f"inconsistent inputs: {exc}") from exc
    return extract(c1, sc, m2, view.graph)


def extract(c1: Cgp, sc: StrongContainment, m2: MatchResult, vg: DataGraph) -> MatchResult:
    cand = {}
    for u in c1.core.node_ids:
        node = c1.core.node[u]
        sets = [m2.nodes[w] for w in sorted(sc.mapping.nodes[u])]
        cand[u] = {v for v in frozenset.intersection(*sets)
                   if vg.node[v].label == node.label and satisfies(vg.node[v].attrs, node.constraint)}
    for plan in sc.positive:
        sim = {}
        for n in plan.pattern.nodes:
            if n.id == plan.focus:
                sim[n.id] = set(cand[plan.focus])
            else:
                allowed = compatible(n, vg)
                for w in plan.bounds[n.id]:
                    allowed &= m2.nodes[w]
                sim[n.id] = allowed
        refine(plan.pattern, vg, sim)
        cand[plan.focus] &= sim[plan.focus]
    for plan in sc.negative:
        if plan.pattern is None:
            continue
        sim = {n.id: compatible(n, vg) for n in plan.pattern.nodes}
        refine(plan.pattern, vg, sim)
        if all(sim.values()):
            cand[plan.focus] -= sim[plan.focus]
    refine(c1.core, vg, cand)
    if any(not vs for vs in cand.values()):
        return EMPTY
    return match_result(c1.core, vg, cand)
