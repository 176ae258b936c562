"""Random instances and exhaustive oracles for the property suites.

Every generator takes its randomness from ``GenParams.seed`` (or an explicit
``random.Random``) so that a failing case can be replayed from its seed.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, replace
from itertools import count

from .constraints import implies, satisfies
from .model import (Atom, Cgp, DataEdge, DataGraph, DataNode, FocusedQgp, PatternEdge,
                    PatternNode, Qgp, is_rooted_tree, positive_version, validate)


@dataclass(frozen=True)
class GenParams:
    nodes: tuple[int, int] = (6, 12)          # data graph size
    pattern_nodes: tuple[int, int] = (2, 4)   # core size
    density: float = 0.25                     # probability of an edge per ordered pair
    labels: int = 3
    edge_labels: int = 2
    attrs: tuple[str, ...] = ("a", "b")
    values: tuple[int, int] = (0, 9)
    cq: tuple[int, int] = (1, 2)
    predicates: tuple[int, int] = (0, 2)
    predicate_size: tuple[int, int] = (1, 2)  # edges per predicate
    positive_ratio: float = 0.5
    constraint_prob: float = 0.3
    extra_core_edges: float = 0.2
    seed: int = 0

    def __post_init__(self):
        for name in ("nodes", "pattern_nodes", "values", "cq", "predicates", "predicate_size"):
            lo, hi = getattr(self, name)
            if lo > hi:
                raise ValueError(f"empty range for {name}")
        if self.labels < 1 or self.edge_labels < 1:
            raise ValueError("label alphabets must be non-empty")

    def rng(self) -> random.Random:
        return random.Random(self.seed)


def node_labels(p: GenParams) -> list[str]:
    return [chr(ord("A") + i) for i in range(p.labels)]


def edge_labels(p: GenParams) -> list[str]:
    return [chr(ord("x") - i) for i in range(p.edge_labels)] if p.edge_labels <= 3 else \
        [f"e{i}" for i in range(p.edge_labels)]


# -- data graphs -----------------------------------------------------------

def gen_graph(p: GenParams, rng: random.Random | None = None) -> DataGraph:
    rng = rng or p.rng()
    n = rng.randint(*p.nodes)
    labels, elabels = node_labels(p), edge_labels(p)
    nodes = []
    for i in range(n):
        attrs = {a: rng.randint(*p.values) for a in p.attrs if rng.random() < 0.8}
        nodes.append(DataNode(f"v{i}", rng.choice(labels), tuple(attrs.items())))
    edges = set()
    for i in range(n):
        for j in range(n):
            if i != j and rng.random() < p.density:
                edges.add(DataEdge(f"v{i}", f"v{j}", rng.choice(elabels)))
    return DataGraph(frozenset(nodes), frozenset(edges))


def _witness_value(constraint, attr, lo, hi, rng):
    atoms = [a for a in constraint if a.attr == attr]
    consts = [a.value for a in atoms]
    pool = list(range(lo, hi + 1)) + [c + d for c in consts for d in (-1, 0, 1)]
    rng.shuffle(pool)
    for x in pool:
        if satisfies({attr: x}, atoms):
            return x
    raise ValueError(f"no witness value for {attr}")


def instantiate(node: PatternNode, nid: str, p: GenParams, rng: random.Random) -> DataNode:
    """A data node satisfying ``node``'s label and constraint."""
    attrs = {}
    constrained = {a.attr for a in node.constraint}
    for attr in sorted(constrained | set(p.attrs)):
        if attr in constrained:
            attrs[attr] = _witness_value(node.constraint, attr, *p.values, rng)
        elif rng.random() < 0.8:
            attrs[attr] = rng.randint(*p.values)
    return DataNode(nid, node.label, tuple(attrs.items()))


def plant(g: DataGraph, q: Qgp, p: GenParams, rng: random.Random, copies: int | None = None,
          noise: int = 4) -> DataGraph:
    """Add ``copies`` instances of ``q`` joined so every CQ is met, plus a few
    random edges between the planted part and the rest."""
    k = copies or max([e.cq for e in q.edges], default=1)
    tag = len(g.nodes)
    inst = {}
    nodes = set(g.nodes)
    for i in range(k):
        for n in sorted(q.nodes):
            d = instantiate(n, f"w{tag}_{i}_{n.id}", p, rng)
            inst[n.id, i] = d.id
            nodes.add(d)
    edges = set(g.edges)
    for e in q.edges:
        for i in range(k):
            for j in range(k):
                edges.add(DataEdge(inst[e.src, i], inst[e.dst, j], e.label))
    ids = sorted(n.id for n in nodes)
    planted = sorted(inst.values())
    elabels = edge_labels(p)
    for _ in range(noise):
        a, b = rng.choice(planted), rng.choice(ids)
        if rng.random() < 0.5:
            a, b = b, a
        if a != b:
            edges.add(DataEdge(a, b, rng.choice(elabels)))
    return DataGraph(frozenset(nodes), frozenset(edges))


# -- patterns --------------------------------------------------------------

def _constraint(p: GenParams, rng: random.Random) -> tuple[Atom, ...]:
    if rng.random() >= p.constraint_prob:
        return ()
    op = rng.choice((">=", "<=", "!=", ">", "<", "="))
    lo, hi = p.values
    # keep constants strictly inside the value range so every op is satisfiable there
    return (Atom(rng.choice(p.attrs), op, rng.randint(lo + 1, max(lo + 1, hi - 1))),)


def _cq(p: GenParams, rng: random.Random) -> int:
    return 1 if rng.random() < 0.6 else rng.randint(*p.cq)


def _random_tree(p, rng, focus: PatternNode, prefix: str, n_edges: int):
    """Rooted-tree predicate pattern hanging off ``focus``."""
    labels, elabels = node_labels(p), edge_labels(p)
    nodes = [focus]
    edges = []
    for i in range(n_edges):
        parent = rng.choice(nodes)
        child = PatternNode(f"{prefix}{i}", rng.choice(labels), _constraint(p, rng))
        if rng.random() < 0.6:
            edges.append(PatternEdge(parent.id, child.id, rng.choice(elabels), _cq(p, rng)))
        else:
            edges.append(PatternEdge(child.id, parent.id, rng.choice(elabels), 1))
        nodes.append(child)
    return Qgp(frozenset(nodes), frozenset(edges))


def gen_cgp(p: GenParams, rng: random.Random | None = None, prefix: str = "u") -> Cgp:
    rng = rng or p.rng()
    labels, elabels = node_labels(p), edge_labels(p)
    n = rng.randint(*p.pattern_nodes)
    core_nodes = [PatternNode(f"{prefix}{i}", rng.choice(labels), _constraint(p, rng)) for i in range(n)]
    edges = {}
    for i in range(1, n):
        j = rng.randrange(i)
        a, b = (core_nodes[j].id, core_nodes[i].id) if rng.random() < 0.5 else (core_nodes[i].id, core_nodes[j].id)
        e = PatternEdge(a, b, rng.choice(elabels), _cq(p, rng))
        edges[e.key] = e
    for i in range(n):
        for j in range(n):
            if i != j and rng.random() < p.extra_core_edges / n:
                e = PatternEdge(core_nodes[i].id, core_nodes[j].id, rng.choice(elabels), _cq(p, rng))
                edges.setdefault(e.key, e)
    core = Qgp(frozenset(core_nodes), frozenset(edges.values()))
    pos, neg = [], []
    for k in range(rng.randint(*p.predicates)):
        focus = rng.choice(core_nodes)
        tree = _random_tree(p, rng, focus, f"{prefix}p{k}_", rng.randint(*p.predicate_size))
        (pos if rng.random() < p.positive_ratio else neg).append(FocusedQgp(tree, focus.id))
    c = Cgp(core, tuple(pos), tuple(neg))
    assert not validate(c), validate(c)
    return c


# -- contained variants ----------------------------------------------------

def _replace_node(c: Cgp, new: PatternNode) -> Cgp:
    """Swap one node everywhere it appears (core and predicate foci)."""
    def swap(q: Qgp) -> Qgp:
        if new.id not in q.node:
            return q
        return Qgp((q.nodes - {q.node[new.id]}) | {new}, q.edges)
    return Cgp(swap(c.core), tuple(FocusedQgp(swap(x.pattern), x.focus) for x in c.positives),
               tuple(FocusedQgp(swap(x.pattern), x.focus) for x in c.negatives))


def _tighten(node: PatternNode, p: GenParams, rng) -> PatternNode:
    extra = _constraint(replace(p, constraint_prob=1.0), rng)
    cons = node.constraint + extra
    if not implies(cons, node.constraint) or not satisfiable_in_range(cons, p):
        return node
    return replace(node, constraint=cons)


def satisfiable_in_range(cons, p: GenParams) -> bool:
    attrs = {a.attr for a in cons}
    return all(any(satisfies({x: v}, [a for a in cons if a.attr == x])
                   for v in range(p.values[0], p.values[1] + 1)) for x in attrs)


def derive_contained(c: Cgp, p: GenParams, rng: random.Random) -> Cgp:
    """A variant of ``c`` whose matches are, by construction, a subset of ``c``'s:
    tightened constraints, raised CQs and extra predicates."""
    out = c
    for _ in range(rng.randint(1, 3)):
        move = rng.randrange(4)
        if move == 0:
            # a tightened negative focus no longer passes the syntactic negative
            # check, so that case is kept rare
            neg_foci = {x.focus for x in out.negatives}
            pool = [n for n in sorted(out.core.nodes) if n.id not in neg_foci]
            if not pool or rng.random() < 0.05:
                pool = sorted(out.core.nodes)
            out = _replace_node(out, _tighten(rng.choice(pool), p, rng))
        elif move == 1 and out.core.edges:
            e = rng.choice(sorted(out.core.edges))
            raised = replace(e, cq=e.cq + 1)
            out = replace(out, core=Qgp(out.core.nodes, (out.core.edges - {e}) | {raised}))
        else:
            focus = out.core.node[rng.choice(out.core.node_ids)]
            tag = next(i for i in count() if not any(n.startswith(f"d{i}_") for n in _all_ids(out)))
            tree = _random_tree(p, rng, focus, f"d{tag}_", rng.randint(*p.predicate_size))
            pred = FocusedQgp(tree, focus.id)
            if move == 2:
                out = replace(out, positives=out.positives + (pred,))
            else:
                out = replace(out, negatives=out.negatives + (pred,))
    return out


def _all_ids(c: Cgp) -> set[str]:
    ids = set(c.core.node_ids)
    for _, _, x in c.predicates:
        ids |= set(x.pattern.node_ids)
    return ids


def _pendant(core: Qgp, edge: PatternEdge, attach: str, banned: set[str]):
    """Nodes cut off from ``attach`` when ``edge`` is removed, if they form a
    tree that only ``edge`` connects to the rest and that carries no banned node."""
    other = edge.dst if edge.src == attach else edge.src
    rest = core.edges - {edge}
    side = {other}
    stack = [other]
    while stack:
        u = stack.pop()
        for e in rest:
            for a, b in ((e.src, e.dst), (e.dst, e.src)):
                if a == u and b not in side:
                    side.add(b)
                    stack.append(b)
    if attach in side or side & banned:
        return None
    inner = [e for e in rest if e.src in side or e.dst in side]
    if len(inner) != len(side) - 1:
        return None
    return side, inner


def derive_strong(c: Cgp, p: GenParams, rng: random.Random) -> Cgp | None:
    """A variant of ``c`` built to be strongly contained in it.

    Pendant core subtrees of ``c`` become positive predicates (refinable
    from core matches), copies of pendant subtrees with tighter constraints
    become negative predicates, constraints and CQs on the core are
    tightened, and ``c``'s own predicates are kept.  Returns ``None`` when
    the generated variant is not a valid pattern.
    """
    out = c
    fresh = count()
    for _ in range(rng.randint(1, 3)):
        move = rng.randrange(4)
        foci = {x.focus for _, _, x in out.predicates}
        if move in (0, 1):
            cands = []
            neg_foci = {x.focus for x in out.negatives}
            for e in sorted(out.core.edges):
                for attach in (e.src, e.dst):
                    # a moved subtree takes its positive predicates along
                    got = _pendant(out.core, e, attach, neg_foci if move == 0 else foci)
                    if got is not None:
                        cands.append((e, attach, got))
            if not cands:
                continue
            e, attach, (side, inner) = rng.choice(cands)
            tag = next(fresh)
            ren = {u: f"{u}_s{tag}" for u in side}
            ren[attach] = attach
            nodes = {replace(out.core.node[u], id=ren[u]) for u in side} | {out.core.node[attach]}
            edges = {replace(x, src=ren[x.src], dst=ren[x.dst]) for x in inner + [e]}
            if move == 0:
                if len(side) >= len(out.core.nodes):
                    continue
                carried = [x for x in out.positives if x.focus in side]
                for x in carried:
                    nodes |= {n for n in x.pattern.nodes if n.id != x.focus}
                    edges |= {replace(y, src=ren.get(y.src, y.src), dst=ren.get(y.dst, y.dst))
                              for y in x.pattern.edges}
                pred = FocusedQgp(Qgp(frozenset(nodes), frozenset(edges)), attach)
                if not is_rooted_tree(pred):
                    continue
                core = Qgp(out.core.nodes - {out.core.node[u] for u in side},
                           out.core.edges - set(inner) - {e})
                kept = tuple(x for x in out.positives if x.focus not in side)
                out = replace(out, core=core, positives=kept + (pred,))
            else:
                # tighten one copied node so the negative is not trivially the core
                victim = rng.choice(sorted(side))
                nodes = {_tighten(n, p, rng) if n.id == ren[victim] else n for n in nodes}
                pred = FocusedQgp(Qgp(frozenset(nodes), frozenset(edges)), attach)
                if is_rooted_tree(pred):
                    out = replace(out, negatives=out.negatives + (pred,))
        elif move == 2:
            neg_foci = {x.focus for x in out.negatives}
            pool = [n for n in sorted(out.core.nodes) if n.id not in neg_foci] or sorted(out.core.nodes)
            out = _replace_node(out, _tighten(rng.choice(pool), p, rng))
        elif out.core.edges:
            e = rng.choice(sorted(out.core.edges))
            raised = replace(e, cq=e.cq + 1)
            out = replace(out, core=Qgp(out.core.nodes, (out.core.edges - {e}) | {raised}))
    return None if validate(out) else out


# -- exhaustive maximum relations -----------------------------------------

MAX_PAIRS = 12


class OracleTooLarge(ValueError):
    pass


def _greatest(compat: list, ok) -> frozenset:
    """Union of every subset ``R`` of ``compat`` in which each pair passes ``ok(R, pair)``."""
    if len(compat) > MAX_PAIRS:
        raise OracleTooLarge("instance too large for oracle")
    best = set()
    for mask in range(1, 1 << len(compat)):
        rel = frozenset(compat[i] for i in range(len(compat)) if mask >> i & 1)
        if rel <= best:
            continue
        if all(ok(rel, pair) for pair in rel):
            best |= rel
    return frozenset(best)


def _covered(rel, ids) -> frozenset:
    return rel if {u for u, _ in rel} >= set(ids) else frozenset()


def _data_ok(q: Qgp, g: DataGraph, parents: bool):
    def ok(rel, pair):
        u, v = pair
        for e in q.outgoing(u):
            hits = {w for w in g.children(v, e.label) if (e.dst, w) in rel}
            if len(hits) < e.cq:
                return False
        if parents:
            for e in q.incoming(u):
                if not any((e.src, w) in rel for w in g.parents(v, e.label)):
                    return False
        return True
    return ok


def _data_compat(q: Qgp, g: DataGraph) -> list:
    return sorted((n.id, d.id) for n in q.nodes for d in g.nodes
                  if n.label == d.label and satisfies(d.attrs, n.constraint))


def brute_max_relation(engine: str, pattern, graph) -> frozenset:
    """Maximum relation of ``engine`` by exhaustive search.

    ``engine`` is one of ``graph_sim``, ``qgp_sim``, ``cond_sim`` (pattern a
    Cgp, graph a DataGraph) or ``pom`` (both Qgps).  For ``cond_sim`` each
    predicate is itself decided by exhaustive search.
    """
    if engine == "pom":
        q1, q2 = pattern, graph
        compat = sorted((a.id, b.id) for a in q1.nodes for b in q2.nodes
                        if a.label == b.label and implies(a.constraint, b.constraint))

        def ok(rel, pair):
            u1, u2 = pair
            for e2 in q2.incoming(u2):
                if not any(e1.label == e2.label and (e1.src, e2.src) in rel for e1 in q1.incoming(u1)):
                    return False
            for e2 in q2.outgoing(u2):
                if not any(e1.label == e2.label and e1.cq >= e2.cq and (e1.dst, e2.dst) in rel
                           for e1 in q1.outgoing(u1)):
                    return False
            return True
        rel = _greatest(compat, ok)
        return rel if {b for _, b in rel} >= set(q2.node_ids) else frozenset()

    if engine not in ("graph_sim", "qgp_sim", "cond_sim"):
        raise ValueError(f"unknown engine {engine}")
    c = pattern if isinstance(pattern, Cgp) else Cgp(pattern)
    q, g = c.core, graph
    if len(q.nodes) > 4 or len(g.nodes) > 8:
        raise OracleTooLarge("instance too large for oracle")
    compat = _data_compat(q, g)
    if engine == "cond_sim":
        for pol, _, pred in c.predicates:
            sub = brute_max_relation("qgp_sim", pred.pattern, g)
            hits = {v for u, v in sub if u == pred.focus}
            compat = [(u, v) for u, v in compat
                      if u != pred.focus or ((v in hits) == (pol == "+"))]
    rel = _greatest(compat, _data_ok(q, g, engine != "graph_sim"))
    return _covered(rel, q.node_ids)


def strong_instance(seed: int, p: GenParams | None = None):
    """``(c1, c2, g)`` with ``c1`` derived to be strongly contained in ``c2``
    and ``g`` planted with one of them; ``None`` when derivation fails."""
    p = p or GenParams(nodes=(10, 30), pattern_nodes=(2, 6), predicates=(0, 3), seed=seed)
    p = replace(p, seed=seed)
    rng = p.rng()
    c2 = gen_cgp(p, rng, "w")
    c1 = derive_strong(c2, p, rng)
    if c1 is None:
        return None
    g = gen_graph(p, rng)
    target = positive_version(c1 if rng.random() < 0.6 else c2)
    g = plant(g, target, p, rng)
    for c in (c1, c2):
        if (len(c.core.nodes) > p.pattern_nodes[1]
                or len(c.positives) + len(c.negatives) > p.predicates[1]):
            return None
    if len(g.nodes) > max(60, 2 * p.nodes[1]):
        return None
    return c1, c2, g


# -- exhaustive refinement/elimination relations --------------------------

PATH_BUDGET = 20_000


def _steps(q1: Qgp, q2: Qgp, a: str, b: str, step_ok):
    """Transitions out of the pair (a, b): same-orientation edge pairs."""
    for e1 in q1.edges:
        for e2 in q2.edges:
            if e1.src == a and e2.src == b and step_ok(e1, e2):
                yield e1, e2, (e1.dst, e2.dst)
            if e1.dst == a and e2.dst == b and step_ok(e1, e2):
                yield e1, e2, (e1.src, e2.src)


def _path_closure(q1, q2, starts, step_ok, enter_ok):
    """Pairs and transitions on simple paths of the pair graph from ``starts``."""
    pairs, trans = set(), set()
    budget = [PATH_BUDGET]

    def walk(path):
        budget[0] -= 1
        if budget[0] < 0:
            raise OracleTooLarge("instance too large for oracle")
        a, b = path[-1]
        for e1, e2, nxt in _steps(q1, q2, a, b, step_ok):
            if not enter_ok(nxt):
                continue
            trans.add((e1, e2, path[-1], nxt))
            if nxt not in path:
                pairs.add(nxt)
                walk(path + [nxt])

    for s0 in sorted(starts):
        walk([s0])
    return pairs, trans


def _matches(n1, n2):
    return n1.label == n2.label and implies(n1.constraint, n2.constraint)


def _brute_r_minus(c1: Cgp, c2: Cgp, s) -> set:
    out = set()
    core = c2.core
    core_ids = set(core.node_ids)
    foci2 = {x.focus for _, _, x in c2.predicates}
    for p in c1.negatives:
        q = p.pattern
        anchors = {(a, w) for a, w in s if a == p.focus and w in core_ids}

        def step_ok(e1, e2):
            return (e1.label == e2.label and e1.cq >= e2.cq and _matches(q.node[e1.src], core.node[e2.src])
                    and _matches(q.node[e1.dst], core.node[e2.dst]))

        pairs, trans = _path_closure(q, core, anchors, step_ok,
                                     lambda nxt: nxt[0] != p.focus or nxt in anchors)
        pairs -= anchors

        def ok(rel, pair):
            y, z = pair
            if z in foci2:
                return False
            good = rel | anchors
            for f in core.edges:
                if f.src == z and not any(g.src == y and g.label == f.label and g.cq >= f.cq
                                          and (g.dst, f.dst) in good for g in q.edges):
                    return False
                if f.dst == z and not any(g.dst == y and g.label == f.label and (g.src, f.src) in good
                                          for g in q.edges):
                    return False
            return True

        keep = _greatest(sorted(pairs), ok)
        good = keep | anchors
        out |= {(e1.key, e2.key) for e1, e2, a, b in trans if a in good and b in good}
    return out


def _connected_at(edges, root) -> bool:
    reach, grow = {root}, True
    while grow:
        grow = False
        for e in edges:
            if (e.src in reach) != (e.dst in reach):
                reach |= {e.src, e.dst}
                grow = True
    return all(e.src in reach and e.dst in reach for e in edges)


def _brute_e_plus(c1: Cgp, c2: Cgp, s) -> set:
    from .containment import focus_equivalent

    out = set()
    for i, p1 in enumerate(c1.positives):
        q1 = p1.pattern
        all_edges = sorted(q1.edges)
        for p2 in c2.positives:
            q2, w = p2.pattern, p2.focus
            for x in q1.node_ids:
                if (x, w) not in s:
                    continue
                root = (x, w)

                def step_ok(e1, e2):
                    if e1.label != e2.label or e1.cq != e2.cq:
                        return False
                    for a, b in ((e1.src, e2.src), (e1.dst, e2.dst)):
                        if (a, b) not in s or q1.node[a].label != q2.node[b].label:
                            return False
                        if (a, b) != root and not (implies(q1.node[a].constraint, q2.node[b].constraint)
                                                   and implies(q2.node[b].constraint, q1.node[a].constraint)):
                            return False
                    return True

                valid = []
                for mask in range(1, 1 << len(all_edges)):
                    frag = [all_edges[k] for k in range(len(all_edges)) if mask >> k & 1]
                    if not any(x in (e.src, e.dst) for e in frag) or not _connected_at(frag, x):
                        continue
                    inner = {n for e in frag for n in (e.src, e.dst)} - {x}
                    if any((e.src in inner or e.dst in inner) and e not in frag for e in all_edges):
                        continue
                    sub = Qgp(q1.nodes, frozenset(frag))
                    _, trans = _path_closure(sub, q2, {root}, step_ok, lambda nxt: nxt[0] != x)
                    if {t[0] for t in trans} == set(frag):
                        valid.append(frozenset(frag))
                if not valid:
                    continue
                best = frozenset().union(*valid)
                assert best in valid, "valid fragments are closed under union"
                sub = Qgp(q1.nodes, best)
                _, trans = _path_closure(sub, q2, {root}, step_ok, lambda nxt: nxt[0] != x)
                counter = {t[1] for t in trans}
                if not _connected_at(counter, w):
                    continue
                f1 = Qgp(frozenset(q1.node[n] for n in {x} | {m for e in best for m in (e.src, e.dst)}), best)
                f2 = Qgp(frozenset(q2.node[n] for n in {w} | {m for e in counter for m in (e.src, e.dst)}),
                         frozenset(counter))
                if focus_equivalent(FocusedQgp(f1, x), FocusedQgp(f2, w)):
                    from .strongc import SubPredicate
                    out.add((SubPredicate(i, x, frozenset(e.key for e in best)), w))
    return out


def brute_rels(c1: Cgp, c2: Cgp, s):
    """Refinement/elimination relations by direct enumeration."""
    from .containment import focus_equivalent
    from .strongc import RefElimRelations

    if len(c1.pos_edges) + len(c1.neg_edges) > 8:
        raise OracleTooLarge("instance too large for oracle")
    s = frozenset(s)
    r_plus = {(e1.key, e2.key) for e1 in c1.pos_edges for e2 in c2.core.edges
              if e1.label == e2.label and (e1.src, e2.src) in s and (e1.dst, e2.dst) in s}
    e_minus = {(i, p2.focus) for i, p1 in enumerate(c1.negatives) for p2 in c2.negatives
               if (p1.focus, p2.focus) in s and focus_equivalent(p1, p2)}
    return RefElimRelations(frozenset(r_plus), frozenset(_brute_r_minus(c1, c2, s)),
                            frozenset(_brute_e_plus(c1, c2, s)), frozenset(e_minus))
