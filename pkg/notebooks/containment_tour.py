"""
Containment between conditional patterns
========================================

Two academic patterns: senior professors with two students, each with two
papers, and professors who supervised two students with at least one paper.
The first is contained in the second, so its answers can be looked up among
the second's.
"""
from pathlib import Path

from cgp import cond_sim, parse_graph, parse_pattern, s_contained, sc_match, serialize_match_result, t_contained

DATA = Path(__file__).resolve().parent.parent / "tests" / "data"

senior = parse_pattern((DATA / "academic_c1.cgp").read_text())
broad = parse_pattern((DATA / "academic_c2.cgp").read_text())
g = parse_graph((DATA / "academia.graph").read_text())

# containment gives, per core node, the nodes of the wider pattern it maps to
tc = t_contained(senior, broad)
print("lambda:", dict(tc.mapping.nodes))

# both patterns evaluated directly on the graph
for name, c in (("senior", senior), ("broad", broad)):
    print(name)
    print(serialize_match_result(cond_sim(c, g)[1], pretty=True))

# strong containment is stricter: here the article counts of the first pattern
# cannot be checked from the second pattern's result alone
print("strongly contained:", s_contained(senior, broad) is not None)

# a pair where it does hold: students with two projects, looked up in the
# result of the plain student/project pattern
narrow = parse_pattern((DATA / "academic_c3.cgp").read_text())
wide = parse_pattern((DATA / "academic_c4.cgp").read_text())
sc = s_contained(narrow, wide)
view = cond_sim(wide, g)[1]
answer = sc_match(narrow, wide, *sc, view)
print(serialize_match_result(answer, pretty=True))
assert answer == cond_sim(narrow, g)[1]
