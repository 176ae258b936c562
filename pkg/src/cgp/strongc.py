"""Strong containment: when can C1's matches be extracted from C2's alone?

Every predicate edge of C1 must be accounted for.  A positive predicate edge
is either *refinable*, because it lines up with a C2 core edge whose matches
are returned by C2 (R+), or *eliminable*, because it sits in a fragment
equivalent to part of a C2 positive predicate that every C2 match already
satisfies (E+).  A negative predicate is eliminable as a whole when C2
carries an equivalent one (E-), or refinable when all its edges line up with
C2 core edges (R-).

Refinement from a view is only exact when a predicate's witnesses can be
chosen around a single focus match, which holds for rooted-tree predicates
(see :func:`cgp.model.is_rooted_tree`); other predicates are reported as not
evaluable.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterator, Mapping

from .constraints import equivalent, implies
from .containment import ContainmentMapping, focus_equivalent, t_contained
from .model import Cgp, EdgeKey, FocusedQgp, PatternEdge, PatternNode, Qgp, is_rooted_tree


def _node_matches(n1: PatternNode, n2: PatternNode) -> bool:
    return n1.label == n2.label and implies(n1.constraint, n2.constraint)


def edge_matches(e1: PatternEdge, e2: PatternEdge, q1: Qgp, q2: Qgp) -> bool:
    """``e1`` (an edge of ``q1``) matches ``e2`` (an edge of ``q2``)."""
    return (e1.label == e2.label and e1.cq >= e2.cq
            and _node_matches(q1.node[e1.src], q2.node[e2.src])
            and _node_matches(q1.node[e1.dst], q2.node[e2.dst]))


@dataclass(frozen=True, order=True)
class SubPredicate:
    """Connected part of positive predicate ``pred`` of C1, hanging at ``root``."""

    pred: int
    root: str
    edges: frozenset[EdgeKey]

    @property
    def nodes(self) -> frozenset[str]:
        return frozenset({self.root} | {x for e in self.edges for x in e[:2]})


@dataclass(frozen=True)
class RefElimRelations:
    r_plus: frozenset[tuple[EdgeKey, EdgeKey]] = frozenset()
    r_minus: frozenset[tuple[EdgeKey, EdgeKey]] = frozenset()
    e_plus: frozenset[tuple[SubPredicate, str]] = frozenset()
    e_minus: frozenset[tuple[int, str]] = frozenset()


# -- R+ --------------------------------------------------------------------

def _r_plus(c1: Cgp, c2: Cgp, s) -> set:
    out = set()
    for e1 in c1.pos_edges:
        for e2 in c2.core.edges:
            if e1.label == e2.label and (e1.src, e2.src) in s and (e1.dst, e2.dst) in s:
                out.add((e1.key, e2.key))
    return out


# -- E+ --------------------------------------------------------------------

def _equivalent_edge(e1, e2, q1, q2, s, root) -> bool:
    if e1.label != e2.label or e1.cq != e2.cq:
        return False
    if (e1.src, e2.src) not in s or (e1.dst, e2.dst) not in s:
        return False
    for a, b in ((e1.src, e2.src), (e1.dst, e2.dst)):
        n1, n2 = q1.node[a], q2.node[b]
        if n1.label != n2.label:
            return False
        # the root pair is compared like a focus: its constraints are not part of the fragment
        if (a, b) != root and not equivalent(n1.constraint, n2.constraint):
            return False
    return True


def _incident(q: Qgp, u: str) -> Iterator[tuple[str, PatternEdge]]:
    for e in q.outgoing(u):
        yield "out", e
    for e in q.incoming(u):
        yield "in", e


def _paired_reach(p1: Qgp, p2: Qgp, s, x: str, w: str, allowed: frozenset | None):
    """Edges of ``p1`` reachable from the pair (x, w) through edge-wise
    equivalent steps into ``p2``; the root is never re-entered."""
    root = (x, w)
    seen = {root}
    queue = deque([root])
    matched: dict[EdgeKey, set[EdgeKey]] = {}
    while queue:
        a, b = queue.popleft()
        for d1, e1 in _incident(p1, a):
            if allowed is not None and e1.key not in allowed:
                continue
            for d2, e2 in _incident(p2, b):
                if d1 != d2 or not _equivalent_edge(e1, e2, p1, p2, s, root):
                    continue
                matched.setdefault(e1.key, set()).add(e2.key)
                nxt = (e1.dst, e2.dst) if d1 == "out" else (e1.src, e2.src)
                if nxt[0] != x and nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
    return matched


def _prune(p1: Qgp, x: str, edges: set) -> set:
    """Largest subset, connected to ``x``, whose non-root nodes have all their
    ``p1`` edges inside it."""
    edges = set(edges)
    changed = True
    while changed:
        changed = False
        nodes = {n for e in edges for n in e[:2]} - {x}
        for y in sorted(nodes):
            at_y = {e.key for _, e in _incident(p1, y)}
            if not at_y <= edges:
                edges -= at_y
                changed = True
        # keep only what is still attached to the root
        reach, stack = {x}, [x]
        while stack:
            u = stack.pop()
            for e in list(edges):
                for a, b in ((e[0], e[1]), (e[1], e[0])):
                    if a == u and b not in reach:
                        reach.add(b)
                        stack.append(b)
        kept = {e for e in edges if e[0] in reach and e[1] in reach}
        if kept != edges:
            edges = kept
            changed = True
    return edges


def _sub_qgp(q: Qgp, edges, root: str) -> Qgp:
    keys = set(edges)
    es = frozenset(e for e in q.edges if e.key in keys)
    ids = {root} | {n for e in es for n in (e.src, e.dst)}
    return Qgp(frozenset(q.node[i] for i in ids), es)


def greatest_fragment(p1: Qgp, p2: Qgp, s, x: str, w: str):
    """The greatest fragment of ``p1`` at ``x`` that is boundary-closed and
    reachable pairwise from (x, w), with its counterpart edges in ``p2``."""
    edges = set(_paired_reach(p1, p2, s, x, w, None))
    while True:
        pruned = _prune(p1, x, edges)
        matched = _paired_reach(p1, p2, s, x, w, frozenset(pruned))
        if set(matched) == pruned:
            break
        edges = set(matched)
    counterpart = set().union(*matched.values()) if matched else set()
    return frozenset(pruned), frozenset(counterpart)


def _e_plus(c1: Cgp, c2: Cgp, s) -> set:
    out = set()
    core2 = set(c2.core.node_ids)
    for i, p1 in enumerate(c1.positives):
        q1 = p1.pattern
        for p2 in c2.positives:
            w = p2.focus
            for x in q1.node_ids:
                if (x, w) not in s or w not in core2:
                    continue
                frag, counter = greatest_fragment(q1, p2.pattern, s, x, w)
                if not frag:
                    continue
                other = _sub_qgp(p2.pattern, counter, w)
                if not other.is_connected():
                    continue
                if focus_equivalent(FocusedQgp(_sub_qgp(q1, frag, x), x), FocusedQgp(other, w)):
                    out.add((SubPredicate(i, x, frag), w))
    return out


# -- R- --------------------------------------------------------------------

def _anchors(c1: Cgp, c2: Cgp, s, u1: str) -> set:
    core2 = set(c2.core.node_ids)
    return {(u1, w) for a, w in s if a == u1 and w in core2}


def _r_minus_candidates(p: FocusedQgp, c2: Cgp, anchors: set):
    """Node and edge pairs reachable from the anchors by stepwise matching
    of predicate edges onto C2 core edges."""
    q, core = p.pattern, c2.core
    pairs = set()
    edge_pairs = set()
    queue = deque(sorted(anchors))
    seen = set(anchors)
    while queue:
        a, b = queue.popleft()
        for d1, e1 in _incident(q, a):
            for d2, e2 in _incident(core, b):
                if d1 != d2 or not edge_matches(e1, e2, q, core):
                    continue
                nxt = (e1.dst, e2.dst) if d1 == "out" else (e1.src, e2.src)
                if nxt[0] == p.focus and nxt not in anchors:
                    continue
                edge_pairs.add((e1, e2))
                if nxt not in seen:
                    seen.add(nxt)
                    pairs.add(nxt)
                    queue.append(nxt)
    return pairs - anchors, edge_pairs


def closure_ok(q: Qgp, c2: Cgp, keep: set, anchors: set, y: str, z: str) -> bool:
    """Every C2 core edge at ``z`` is mirrored by a predicate edge at ``y``
    into a kept or anchor pair, and ``z`` carries no C2 predicate."""
    if any(p.focus == z for _, _, p in c2.predicates):
        return False
    ok = keep | anchors
    for f in c2.core.outgoing(z):
        if not any(g.label == f.label and g.cq >= f.cq and (g.dst, f.dst) in ok for g in q.outgoing(y)):
            return False
    for f in c2.core.incoming(z):
        if not any(g.label == f.label and (g.src, f.src) in ok for g in q.incoming(y)):
            return False
    return True


def _r_minus_one(p: FocusedQgp, c2: Cgp, anchors: set) -> set:
    pairs, edge_pairs = _r_minus_candidates(p, c2, anchors)
    keep = set(pairs)
    changed = True
    while changed:
        changed = False
        for y, z in sorted(keep):
            if not closure_ok(p.pattern, c2, keep, anchors, y, z):
                keep.discard((y, z))
                changed = True
    ok = keep | anchors
    return {(e1.key, e2.key) for e1, e2 in edge_pairs
            if (e1.src, e2.src) in ok and (e1.dst, e2.dst) in ok}


def _r_minus(c1: Cgp, c2: Cgp, s) -> set:
    out = set()
    for p in c1.negatives:
        out |= _r_minus_one(p, c2, _anchors(c1, c2, s, p.focus))
    return out


# -- E- --------------------------------------------------------------------

def _e_minus(c1: Cgp, c2: Cgp, s) -> set:
    out = set()
    for i, p1 in enumerate(c1.negatives):
        for p2 in c2.negatives:
            if (p1.focus, p2.focus) in s and focus_equivalent(p1, p2):
                out.add((i, p2.focus))
    return out


def extract_rels(c1: Cgp, c2: Cgp, s) -> RefElimRelations:
    s = frozenset(s)
    return RefElimRelations(frozenset(_r_plus(c1, c2, s)), frozenset(_r_minus(c1, c2, s)),
                            frozenset(_e_plus(c1, c2, s)), frozenset(_e_minus(c1, c2, s)))


# -- evaluation plans ------------------------------------------------------

@dataclass(frozen=True)
class PositivePlan:
    """What is left of a positive predicate once eliminable fragments are
    cut off, and which C2 core matches bound each remaining node."""

    pred: int
    focus: str
    pattern: Qgp
    bounds: Mapping[str, frozenset[str]]


@dataclass(frozen=True)
class NegativePlan:
    pred: int
    focus: str
    pattern: Qgp | None  # None: eliminated, nothing to check


@dataclass(frozen=True)
class PredicateReport:
    polarity: str
    pred: int
    focus: str
    status: str  # "refined", "eliminated", "partly eliminated" or why not evaluable
    uncovered: tuple[EdgeKey, ...] = ()

    @property
    def ok(self) -> bool:
        return self.status in ("refined", "eliminated", "partly eliminated")


def positive_plan(c1: Cgp, c2: Cgp, s, i: int, rels: RefElimRelations):
    """Return ``(plan, report)``; ``plan`` is None when not evaluable."""
    p = c1.positives[i]
    edges = {e.key for e in p.pattern.edges}
    refinable = {e1 for e1, _ in rels.r_plus} & edges
    frags = [f for f, _ in rels.e_plus if f.pred == i]
    eliminable = set().union(*(f.edges for f in frags)) if frags else set()
    uncovered = tuple(sorted(edges - refinable - eliminable))

    def fail(status):
        return None, PredicateReport("+", i, p.focus, status, uncovered)

    if uncovered:
        return fail("uncovered edges")
    if not is_rooted_tree(p):
        return fail("not a rooted tree")
    chosen = {f for f in frags if f.edges - refinable}
    chosen = {f for f in chosen if not any(f.edges < g.edges for g in chosen)}
    chosen_edges = set()
    for f in sorted(chosen):
        if f.edges & chosen_edges:
            return fail("overlapping fragments")
        chosen_edges |= f.edges
        if p.focus in f.nodes - {f.root}:
            return fail("fragment spans the focus")
    cut = set().union(*(f.nodes - {f.root} for f in chosen)) if chosen else set()
    rest = edges - chosen_edges
    q = _sub_qgp(p.pattern, rest, p.focus)
    assert not (set(q.node_ids) & cut)
    core2 = set(c2.core.node_ids)
    bounds = {x: frozenset(w for a, w in s if a == x and w in core2)
              for x in q.node_ids if x != p.focus}
    status = "refined" if not chosen else ("eliminated" if not rest else "partly eliminated")
    return PositivePlan(i, p.focus, q, bounds), PredicateReport("+", i, p.focus, status)


def negative_plan(c1: Cgp, c2: Cgp, i: int, rels: RefElimRelations):
    p = c1.negatives[i]
    if any(j == i for j, _ in rels.e_minus):
        return NegativePlan(i, p.focus, None), PredicateReport("-", i, p.focus, "eliminated")
    edges = {e.key for e in p.pattern.edges}
    uncovered = tuple(sorted(edges - {e1 for e1, _ in rels.r_minus}))
    if uncovered:
        return None, PredicateReport("-", i, p.focus, "uncovered edges", uncovered)
    if not is_rooted_tree(p):
        return None, PredicateReport("-", i, p.focus, "not a rooted tree")
    return NegativePlan(i, p.focus, p.pattern), PredicateReport("-", i, p.focus, "refined")


# -- decision --------------------------------------------------------------

@dataclass(frozen=True)
class StrongContainment:
    """Outcome of a successful strong containment check.

    Unpacks as ``(mapping, r_plus, r_minus)``; the realizing relation, the
    elimination relations and the per-predicate plans are kept for
    extraction and diagnostics.
    """

    mapping: ContainmentMapping
    r_plus: frozenset
    r_minus: frozenset
    relation: frozenset = field(repr=False)
    rels: RefElimRelations = field(repr=False)
    positive: tuple[PositivePlan, ...] = field(repr=False, default=())
    negative: tuple[NegativePlan, ...] = field(repr=False, default=())
    report: tuple[PredicateReport, ...] = field(repr=False, default=())

    def __iter__(self):
        return iter((self.mapping, self.r_plus, self.r_minus))


def strong_report(c1: Cgp, c2: Cgp):
    """``(StrongContainment or None, reports)``; reports are empty when even
    traditional containment fails."""
    tc = t_contained(c1, c2)
    if tc is None:
        return None, ()
    rels = extract_rels(c1, c2, tc.relation)
    pos, neg, reports = [], [], []
    for i in range(len(c1.positives)):
        plan, rep = positive_plan(c1, c2, tc.relation, i, rels)
        reports.append(rep)
        if plan is not None:
            pos.append(plan)
    for i in range(len(c1.negatives)):
        plan, rep = negative_plan(c1, c2, i, rels)
        reports.append(rep)
        if plan is not None:
            neg.append(plan)
    reports = tuple(reports)
    if not all(r.ok for r in reports):
        return None, reports
    return StrongContainment(tc.mapping, rels.r_plus, rels.r_minus, tc.relation, rels,
                             tuple(pos), tuple(neg), reports), reports


def s_contained(c1: Cgp, c2: Cgp) -> StrongContainment | None:
    """Decide ``c1 ⊑s c2``."""
    return strong_report(c1, c2)[0]
