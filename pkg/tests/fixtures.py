"""Hand-built patterns used across the suites."""
from cgp.model import Atom, Cgp, FocusedQgp, Qgp

AGE45 = [Atom("age", ">=", 45)]


def pred(nodes, edges, focus):
    return FocusedQgp(Qgp.build(nodes, edges), focus)


# -- supervision example: professors, students, articles, projects ----------

def academic():
    c1 = Cgp(Qgp.build([("a1", "Pr", AGE45), ("b1", "PhD")], [("a1", "b1", "supervised", 2)]),
             (pred([("b1", "PhD"), ("x1", "Article")], [("b1", "x1", "published", 2)], "b1"),))
    c2 = Cgp(Qgp.build([("a2", "Pr"), ("b2", "PhD")], [("a2", "b2", "supervised", 2)]),
             (pred([("b2", "PhD"), ("x2", "Article")], [("b2", "x2", "published", 1)], "b2"),))
    c3 = Cgp(Qgp.build([("a3", "Pr"), ("b3", "PhD")], [("a3", "b3", "supervised")]),
             (pred([("b3", "PhD"), ("x3", "Project")], [("b3", "x3", "member", 2)], "b3"),))
    c4 = Cgp(Qgp.build([("a4", "Pr"), ("b4", "PhD"), ("c4", "Project")],
                       [("a4", "b4", "supervised"), ("b4", "c4", "member")]))
    a5 = ("a5", "Pr", [Atom("age", ">=", 50), Atom("gender", "=", "female")])
    c5 = Cgp(Qgp.build([a5, ("b5", "PhD")], [("a5", "b5", "supervised", 2)]),
             (pred([("b5", "PhD"), ("x5", "Article")], [("b5", "x5", "published", 2)], "b5"),
              pred([("b5", "PhD"), ("y5", "Project")], [("b5", "y5", "member", 3)], "b5")))
    return {1: c1, 2: c2, 3: c3, 4: c4, 5: c5}


def views():
    sup_tree = lambda a, b, c, d: pred(
        [(a, "Pr", AGE45), (b, "PhD"), (c, "Project"), (d, "Article")],
        [(a, b, "supervised"), (b, c, "member"), (b, d, "published")], a)
    c1 = Cgp(Qgp.build([("a1", "Pr", AGE45)]), (sup_tree("a1", "b1", "c1", "d1"),))
    c2 = Cgp(Qgp.build([("a2", "Pr"), ("b2", "PhD"), ("c2", "Project"), ("d2", "Article")],
                       [("a2", "b2", "supervised"), ("b2", "c2", "member"), ("b2", "d2", "published")]))
    c3 = Cgp(Qgp.build([("a3", "Pr")]), (pred(
        [("a3", "Pr"), ("b3", "PhD"), ("c3", "Project"), ("d3", "Article")],
        [("a3", "b3", "supervised"), ("b3", "c3", "member"), ("b3", "d3", "published")], "a3"),))
    c4 = Cgp(Qgp.build([("a4", "Pr"), ("b4", "PhD"), ("c4", "Project"), ("d4", "PhD")],
                       [("a4", "b4", "supervised"), ("b4", "c4", "member"), ("a4", "d4", "supervised")]),
             (pred([("d4", "PhD"), ("e4", "Article")], [("d4", "e4", "published")], "d4"),))
    c5 = Cgp(Qgp.build([("a5", "Pr")]), (
        pred([("a5", "Pr"), ("b5", "PhD"), ("c5", "Project"), ("f5", "PhD"), ("d5", "Article")],
             [("a5", "b5", "supervised"), ("b5", "c5", "member"),
              ("a5", "f5", "supervised"), ("f5", "d5", "published")], "a5"),))
    core6 = Qgp.build([("a6", "Pr"), ("b6", "PhD")], [("a6", "b6", "supervised")])
    c6 = Cgp(core6, (), (pred([("b6", "PhD"), ("c6", "Project"), ("d6", "Article")],
                              [("b6", "c6", "member"), ("b6", "d6", "published")], "b6"),))
    core7 = Qgp.build([("a7", "Pr"), ("b7", "PhD")], [("a7", "b7", "supervised")])
    c7 = Cgp(core7, (), (pred([("b7", "PhD"), ("c7", "Project")], [("b7", "c7", "member")], "b7"),
                         pred([("b7", "PhD"), ("d7", "Article")], [("b7", "d7", "published")], "b7")))
    c8 = Cgp(Qgp.build([("b8", "PhD")]),
             (pred([("b8", "PhD"), ("a8", "Pr"), ("c8", "Project")],
                   [("a8", "b8", "supervised"), ("b8", "c8", "member")], "b8"),),
             (pred([("b8", "PhD"), ("d8", "Project", [Atom("budget", ">=", 100)])],
                   [("b8", "d8", "member")], "b8"),))
    c9 = Cgp(Qgp.build([("a9", "Pr", AGE45), ("b9", "PhD"), ("c9", "Project")],
                       [("a9", "b9", "supervised"), ("b9", "c9", "member")]))
    c10 = Cgp(Qgp.build([("a10", "Pr"), ("b10", "PhD"), ("c10", "Project")],
                        [("a10", "b10", "supervised"), ("b10", "c10", "member")]))
    return {1: c1, 2: c2, 3: c3, 4: c4, 5: c5, 6: c6, 7: c7, 8: c8, 9: c9, 10: c10}
