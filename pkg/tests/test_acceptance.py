"""Acceptance gate: one test per criterion, each reported in the terminal summary."""
import itertools
import random
import statistics
import time

from cgp.constraints import implies, satisfies
from cgp.containment import focus_equivalent, t_contained
from cgp.model import OPS, Atom, Cgp, FocusedQgp, PatternEdge, PatternNode, Qgp, positive_version
from cgp.pom import pom
from cgp.scmatch import sc_match
from cgp.simulation import EMPTY, cond_sim, qgp_sim
from cgp.strongc import SubPredicate, extract_rels, s_contained
from cgp.testkit import (GenParams, OracleTooLarge, brute_max_relation, brute_rels, derive_contained, gen_cgp,
                         gen_graph, plant, strong_instance)
from fixtures import academic, views


def test_criterion_1_academic_verdicts(criterion):
    with criterion(1, "academic fixture containment verdicts") as c:
        start = time.perf_counter()
        f = academic()
        got = t_contained(f[1], f[2])
        assert got is not None
        assert got.mapping.nodes == {"a1": {"a2"}, "b1": {"b2"}}
        for a, b in [(3, 4), (5, 1), (5, 3), (5, 4)]:
            assert t_contained(f[a], f[b]) is not None, (a, b)
        assert t_contained(f[4], f[3]) is None
        elapsed = time.perf_counter() - start
        c.note(f"{elapsed * 1000:.1f} ms")
        assert elapsed < 1.0


def test_criterion_2_view_strong_containment(criterion):
    with criterion(2, "view fixture strong containment, relations, focus equivalence"):
        f = views()
        for a, b in [(1, 2), (1, 3), (1, 4), (8, 10)]:
            assert s_contained(f[a], f[b]) is not None, (a, b)
        for a, b in [(1, 5), (7, 6)]:
            assert s_contained(f[a], f[b]) is None, (a, b)
        r = extract_rels(f[1], f[4], t_contained(f[1], f[4]).relation)
        assert r.r_plus == {
            (("a1", "b1", "supervised"), ("a4", "b4", "supervised")),
            (("a1", "b1", "supervised"), ("a4", "d4", "supervised")),
            (("b1", "c1", "member"), ("b4", "c4", "member")),
        }
        assert r.e_plus == {(SubPredicate(0, "b1", frozenset({("b1", "d1", "published")})), "d4")}
        q9, q10 = f[9].core, f[10].core
        assert focus_equivalent(FocusedQgp(q9, "a9"), FocusedQgp(q10, "a10"))
        assert not focus_equivalent(FocusedQgp(q9, "c9"), FocusedQgp(q10, "c10"))


def test_criterion_3_sc_match_exact(criterion):
    with criterion(3, "sc_match equals cond_sim") as c:
        start = time.perf_counter()
        checked = nonempty = seed = 0
        while checked < 500:
            inst = strong_instance(seed)
            seed += 1
            if inst is None:
                continue
            c1, c2, g = inst
            assert len(g.nodes) <= 60
            assert len(c1.core.nodes) <= 6 and len(c1.positives) + len(c1.negatives) <= 3
            sc = s_contained(c1, c2)
            if sc is None:
                continue
            r2 = cond_sim(c2, g)
            m2 = r2[1] if r2 else EMPTY
            r1 = cond_sim(c1, g)
            want = r1[1] if r1 else EMPTY
            got = sc_match(c1, c2, *sc, m2)
            assert got == want, seed
            checked += 1
            nonempty += bool(want)
        elapsed = time.perf_counter() - start
        c.note(f"{checked} instances, {nonempty} non-empty, {elapsed:.1f} s")
        assert elapsed <= 300


def _sound(c1, c2, g, mapping):
    r1 = cond_sim(c1, g)
    if r1 is None:
        return 0
    r2 = cond_sim(c2, g)
    assert r2 is not None
    m1, m2 = r1[1], r2[1]
    for u, images in mapping.nodes.items():
        sets = [m2.nodes[x] for x in images]
        assert m1.nodes[u] <= frozenset.intersection(*sets) <= frozenset().union(*sets)
    for e, images in mapping.edges.items():
        sets = [m2.edges[x] for x in images]
        assert m1.edges[e] <= frozenset.intersection(*sets) <= frozenset().union(*sets)
    return 1


def test_criterion_4_containment_sound(criterion):
    with criterion(4, "containment soundness (union and intersection)") as c:
        checked = witnessed = seed = 0
        while checked < 500:
            p = GenParams(nodes=(10, 30), pattern_nodes=(2, 5), predicates=(0, 3), seed=seed)
            seed += 1
            rng = p.rng()
            c2 = gen_cgp(p, rng)
            c1 = derive_contained(c2, p, rng)
            tc = t_contained(c1, c2)
            if tc is None:
                continue
            g = plant(gen_graph(p, rng), positive_version(c1 if rng.random() < 0.5 else c2), p, rng)
            witnessed += _sound(c1, c2, g, tc.mapping)
            checked += 1
        c.note(f"{checked} instances, {witnessed} with non-empty C1 matches")


SMALL = GenParams(nodes=(3, 7), pattern_nodes=(1, 3), labels=3, edge_labels=2, density=0.35,
                  predicates=(0, 2), predicate_size=(1, 1), attrs=("a",), values=(0, 3))


def test_criterion_5_determinism_and_uniqueness(criterion):
    with criterion(5, "order independence and exhaustive agreement") as c:
        counts = dict.fromkeys(("qgp_sim", "cond_sim", "pom"), 0)
        for seed in range(200):
            p = GenParams(nodes=(8, 25), pattern_nodes=(2, 5), density=0.3, seed=seed)
            rng = p.rng()
            cg = gen_cgp(p, rng)
            g = plant(gen_graph(p, rng), positive_version(cg), p, rng)
            base_q, base_c = qgp_sim(cg.core, g), cond_sim(cg, g)
            c1 = derive_contained(cg, p, rng)
            q1, q2 = positive_version(c1), positive_version(cg)
            base_p = pom(q1, q2)
            for k in range(3):
                assert qgp_sim(cg.core, g, rng=random.Random(k)) == base_q
                assert cond_sim(cg, g, rng=random.Random(k)) == base_c
                assert pom(q1, q2, rng=random.Random(k)) == base_p
            for name in counts:
                counts[name] += 1
        brute = dict.fromkeys(counts, 0)
        for seed in range(300):
            rng = random.Random(seed)
            p = GenParams(**{**SMALL.__dict__, "seed": seed})
            cg, g = gen_cgp(p, rng), gen_graph(p, rng)
            try:
                want_q = brute_max_relation("qgp_sim", cg.core, g)
                want_c = brute_max_relation("cond_sim", cg, g)
            except OracleTooLarge:
                pass
            else:
                assert qgp_sim(cg.core, g) == want_q, seed
                got = cond_sim(cg, g)
                assert (got[0] if got else frozenset()) == want_c, seed
                brute["qgp_sim"] += 1
                brute["cond_sim"] += 1
            q1 = gen_cgp(GenParams(**{**SMALL.__dict__, "seed": seed + 7919}), rng).core
            try:
                want_p = brute_max_relation("pom", q1, cg.core)
            except OracleTooLarge:
                continue
            assert pom(q1, cg.core) == want_p, seed
            brute["pom"] += 1
        c.note("shuffled " + ", ".join(f"{k}={v}" for k, v in counts.items()))
        c.note("exhaustive " + ", ".join(f"{k}={v}" for k, v in brute.items()))
        assert min(counts.values()) >= 200
        assert min(brute.values()) >= 100


def test_criterion_6_relations_match_enumeration(criterion):
    with criterion(6, "extract_rels equals exhaustive enumeration") as c:
        p = GenParams(nodes=(5, 10), pattern_nodes=(2, 5), predicates=(1, 3), predicate_size=(1, 3),
                      labels=2, edge_labels=1)
        checked = nontrivial = seed = 0
        while checked < 200:
            inst = strong_instance(seed, p)
            seed += 1
            assert seed < 5000, "generator too sparse"
            if inst is None:
                continue
            c1, c2, _ = inst
            tc = t_contained(c1, c2)
            if tc is None:
                continue
            try:
                want = brute_rels(c1, c2, tc.relation)
            except OracleTooLarge:
                continue
            got = extract_rels(c1, c2, tc.relation)
            assert got == want, seed
            checked += 1
            nontrivial += bool(got.r_minus or got.e_plus)
        c.note(f"{checked} instances, {nontrivial} with R- or E+ entries")


WINDOW = range(-1, 33)


def _brute_implies(a, b):
    attrs = sorted({x.attr for x in a} | {x.attr for x in b})
    for combo in itertools.product([None, *WINDOW], repeat=len(attrs)):
        vals = {k: v for k, v in zip(attrs, combo) if v is not None}
        if satisfies(vals, a) and not satisfies(vals, b):
            return False
    return True


def _conjunction(rng):
    return tuple(Atom(rng.choice("ab"), rng.choice(OPS), rng.randint(0, 31)) for _ in range(rng.randint(1, 3)))


def test_criterion_7_implication_oracle(criterion):
    with criterion(7, "constraint implication vs exhaustive check") as c:
        rng = random.Random(7)
        pairs = positive = 0
        while pairs < 1000:
            a = _conjunction(rng)
            b = _conjunction(rng) if rng.random() < 0.5 else a[: rng.randint(1, len(a))]
            want = _brute_implies(a, b)
            assert implies(a, b) == want, (a, b)
            pairs += 1
            positive += want
        c.note(f"{pairs} pairs, {positive} implied")
        assert positive >= 100


def _chain(n, prefix):
    labels = "ABC"
    nodes = [PatternNode(f"{prefix}{i}", labels[i % 3]) for i in range(n)]
    edges = [PatternEdge(f"{prefix}{i}", f"{prefix}{i + 1}", "x", 1 + i % 2) for i in range(n - 1)]
    pos = []
    for i in range(0, n, 4):
        f, a, b = nodes[i], PatternNode(f"{prefix}p{i}a", "B"), PatternNode(f"{prefix}p{i}b", "C")
        pos.append(FocusedQgp(Qgp(frozenset({f, a, b}), frozenset({PatternEdge(f.id, a.id, "w"),
                                                                   PatternEdge(a.id, b.id, "w")})), f.id))
    neg = []
    for i in range(2, n, 8):
        f, a = nodes[i], PatternNode(f"{prefix}n{i}a", "A")
        neg.append(FocusedQgp(Qgp(frozenset({f, a}), frozenset({PatternEdge(f.id, a.id, "v")})), f.id))
    return Cgp(Qgp(frozenset(nodes), frozenset(edges)), tuple(pos), tuple(neg))


def _cycle():
    nodes = [PatternNode(f"u{i}", "ABC"[i]) for i in range(3)]
    edges = [PatternEdge(f"u{i}", f"u{(i + 1) % 3}", "x", 2) for i in range(3)]
    pos, neg = [], []
    for i, f in enumerate(nodes):
        a, b = PatternNode(f"up{i}a", "B"), PatternNode(f"up{i}b", "C")
        pos.append(FocusedQgp(Qgp(frozenset({f, a, b}), frozenset({PatternEdge(f.id, a.id, "w"),
                                                                   PatternEdge(a.id, b.id, "w")})), f.id))
        a = PatternNode(f"un{i}a", "A")
        neg.append(FocusedQgp(Qgp(frozenset({f, a}), frozenset({PatternEdge(f.id, a.id, "v")})), f.id))
    return Cgp(Qgp(frozenset(nodes), frozenset(edges)), tuple(pos), tuple(neg))


def _median_time(fn, *args):
    times = []
    for _ in range(5):
        start = time.perf_counter()
        out = fn(*args)
        times.append(time.perf_counter() - start)
    return statistics.median(times), out


def test_criterion_8_complexity_smoke(criterion):
    with criterion(8, "doubling |C2| time ratios") as c:
        c1 = _cycle()
        small, large = _chain(96, "w"), _chain(192, "w")
        t_small, r1 = _median_time(t_contained, c1, small)
        t_large, r2 = _median_time(t_contained, c1, large)
        s_small, r3 = _median_time(s_contained, c1, small)
        s_large, r4 = _median_time(s_contained, c1, large)
        assert all(r is not None for r in (r1, r2, r3, r4))
        c.note(f"t_contained x{t_large / t_small:.2f}, s_contained x{s_large / s_small:.2f}")
        assert t_large / t_small <= 4.5
        assert s_large / s_small <= 9


def test_criterion_9_reflexivity(criterion):
    with criterion(9, "reflexivity of both containments") as c:
        for seed in range(500):
            p = GenParams(pattern_nodes=(1, 6), predicates=(0, 3), predicate_size=(1, 3), seed=seed)
            cg = gen_cgp(p)
            assert t_contained(cg, cg) is not None, seed
            assert s_contained(cg, cg) is not None, seed
        c.note("500 patterns")
