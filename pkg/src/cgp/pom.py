"""Pattern-only matching: does one QGP satisfy every constraint of another?

``pom(q1, q2)`` computes the maximum relation S between nodes of ``q1`` and
nodes of ``q2`` such that each pair agrees on labels, the constraint of the
q1 node implies the one of the q2 node, every q2 edge around a pair is
mirrored by a q1 edge of the same label (and, for outgoing edges, a CQ at
least as large) into related nodes, and every q2 node is related to
something.  ``q1`` then yields all matches of ``q2`` on any data graph.
"""
from __future__ import annotations

import random
from functools import lru_cache
from typing import Iterable

from .constraints import implies
from .model import PatternNode, Qgp

PatternMatchRelation = frozenset  # of (q1 node id, q2 node id)


@lru_cache(maxsize=65536)
def _implies(c1: tuple, c2: tuple) -> bool:
    return implies(c1, c2)


def node_matches(n1: PatternNode, n2: PatternNode) -> bool:
    return n1.label == n2.label and _implies(n1.constraint, n2.constraint)


def compatibility(q1: Qgp, q2: Qgp) -> set[tuple[str, str]]:
    return {(a.id, b.id) for a in q1.nodes for b in q2.nodes if node_matches(a, b)}


def _supported(q1: Qgp, q2: Qgp, s, u1: str, u2: str) -> bool:
    for e2 in q2.incoming(u2):
        if not any(e1.label == e2.label and (e1.src, e2.src) in s for e1 in q1.incoming(u1)):
            return False
    for e2 in q2.outgoing(u2):
        if not any(e1.label == e2.label and e1.cq >= e2.cq and (e1.dst, e2.dst) in s
                   for e1 in q1.outgoing(u1)):
            return False
    return True


def _fixpoint(q1: Qgp, q2: Qgp, s: set, rng: random.Random | None) -> set:
    # worklist over pairs: a removal only affects pairs whose nodes are adjacent
    pending = set(s)
    while pending:
        order = sorted(pending)
        if rng is not None:
            rng.shuffle(order)
        for pair in order:
            pending.discard(pair)
            if pair in s and not _supported(q1, q2, s, *pair):
                s.discard(pair)
                u1, u2 = pair
                n1 = q1.neighbors.get(u1, ())
                n2 = q2.neighbors.get(u2, ())
                pending |= {(a, b) for a in n1 for b in n2 if (a, b) in s}
    return s


def pom_naive(q1: Qgp, q2: Qgp) -> PatternMatchRelation:
    """Literal transcription of the nested do-while algorithm (reference only)."""
    s = compatibility(q1, q2)
    changed = True
    while changed:
        changed = False
        for u1, u2 in sorted(s):
            if (u1, u2) in s and not _supported(q1, q2, s, u1, u2):
                s.discard((u1, u2))
                changed = True
    return _finish(q2, s)


def _finish(q2: Qgp, s) -> PatternMatchRelation:
    covered = {u2 for _, u2 in s}
    if covered != set(q2.node_ids):
        return frozenset()
    return frozenset(s)


def pom(q1: Qgp, q2: Qgp, *, rng: random.Random | None = None) -> PatternMatchRelation:
    """Maximum pattern-only match relation of ``q1`` into ``q2``, or empty."""
    return _finish(q2, _fixpoint(q1, q2, compatibility(q1, q2), rng))


def pom_seeded(q1: Qgp, q2: Qgp, seed: Iterable[tuple[str, str]], *,
               rng: random.Random | None = None) -> PatternMatchRelation:
    """Same fixpoint as :func:`pom`, started from ``seed``."""
    seed = set(seed)
    bad = seed - compatibility(q1, q2)
    if bad:
        raise ValueError(f"invalid seed pair {sorted(bad)[0]}")
    return _finish(q2, _fixpoint(q1, q2, seed, rng))
