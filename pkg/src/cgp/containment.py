"""Traditional containment between conditional patterns, and equivalence."""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Mapping

from .model import Cgp, EdgeKey, FocusedQgp, Qgp, positive_version
from .pom import pom, pom_seeded
from .simulation import MatchResult


@dataclass(frozen=True)
class ContainmentMapping:
    """Core nodes/edges of the contained pattern to core nodes/edges of the container."""

    nodes: Mapping[str, frozenset[str]]
    edges: Mapping[EdgeKey, frozenset[EdgeKey]]


@dataclass(frozen=True)
class Containment:
    mapping: ContainmentMapping
    relation: frozenset  # realizing relation over (V1 ∪ V1+) x (V2 ∪ V2+)


def _negatives_respected(c1: Cgp, c2: Cgp, s) -> set:
    cache = {}
    keep = set()
    for u1, u2 in s:
        ok = True
        for i2, p2 in c2.predicates_on(u2, "-"):
            found = False
            for i1, p1 in c1.predicates_on(u1, "-"):
                if (i2, i1) not in cache:
                    cache[i2, i1] = pom(p2.pattern, p1.pattern)
                if (u2, u1) in cache[i2, i1]:
                    found = True
                    break
            if not found:
                ok = False
                break
        if ok:
            keep.add((u1, u2))
    return keep


def t_contained(c1: Cgp, c2: Cgp) -> Containment | None:
    """Decide ``c1 ⊑ c2``; return the mapping and its realizing relation, or ``None``."""
    q1, q2 = positive_version(c1), positive_version(c2)
    s = pom(q1, q2)
    if not s:
        return None
    s = _negatives_respected(c1, c2, s)
    # core nodes of c1 may only be realized by core nodes of c2
    core1 = set(c1.core.node_ids)
    s = {(u1, u2) for u1, u2 in s if not (u1 in core1 and u2 in c2.pos_nodes)}
    s = pom_seeded(q1, q2, s)
    if not s:
        return None
    core2 = set(c2.core.node_ids)
    nodes = {u1: frozenset(u2 for (a, u2) in s if a == u1 and u2 in core2) for u1 in c1.core.node_ids}
    edges = {}
    for e1 in c1.core.edges:
        edges[e1.key] = frozenset(
            e2.key for e2 in c2.core.edges
            if e2.label == e1.label and (e1.src, e2.src) in s and (e1.dst, e2.dst) in s)
    if not all(nodes.values()) or not all(edges.values()):
        return None
    return Containment(ContainmentMapping(nodes, edges), frozenset(s))


@dataclass(frozen=True)
class Candidates:
    nodes: Mapping[str, frozenset[str]]
    edges: Mapping[EdgeKey, frozenset]
    payload: Mapping


def candidates(mapping: ContainmentMapping, m2: MatchResult) -> Candidates:
    """Intersect the container's matches over every image of each core element."""
    if not m2:
        return Candidates({u: frozenset() for u in mapping.nodes},
                          {e: frozenset() for e in mapping.edges}, {})
    nodes, edges = {}, {}
    for u, images in mapping.nodes.items():
        sets = []
        for x in sorted(images):
            if x not in m2.nodes:
                raise ValueError(f"mapping/result mismatch: {x}")
            sets.append(m2.nodes[x])
        nodes[u] = frozenset.intersection(*sets)
    for e, images in mapping.edges.items():
        sets = []
        for x in sorted(images):
            if x not in m2.edges:
                raise ValueError(f"mapping/result mismatch: {x}")
            sets.append(m2.edges[x])
        edges[e] = frozenset.intersection(*sets)
    payload = {v: m2.payload[v] for vs in nodes.values() for v in vs}
    return Candidates(nodes, edges, payload)


def equivalent_cgp(c1: Cgp, c2: Cgp) -> bool:
    return t_contained(c1, c2) is not None and t_contained(c2, c1) is not None


def strip_focus(q: FocusedQgp) -> Qgp:
    n = q.pattern.node[q.focus]
    nodes = (q.pattern.nodes - {n}) | {replace(n, constraint=())}
    return Qgp(frozenset(nodes), q.pattern.edges)


def focus_equivalent(q1: FocusedQgp, q2: FocusedQgp) -> bool:
    """Equivalence of two focused QGPs, ignoring the constraints on both foci."""
    a, b = Cgp(strip_focus(q1)), Cgp(strip_focus(q2))
    ab = t_contained(a, b)
    if ab is None or (q1.focus, q2.focus) not in ab.relation:
        return False
    ba = t_contained(b, a)
    return ba is not None and (q2.focus, q1.focus) in ba.relation
