import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cgp.constraints import IncomparableValues, equivalent, implies, is_satisfiable, satisfies
from cgp.model import OPS, Atom

# Constants come from 0..31; every integer below 0 behaves like -1 and every
# integer above 31 like 32, so this window decides implication over all of Z.
WINDOW = range(-1, 33)
ATTRS = ("a", "b")


def A(attr, op, value):
    return Atom(attr, op, value)


def brute_implies(a, b):
    attrs = sorted({x.attr for x in a} | {x.attr for x in b})
    domain = [None, *WINDOW]
    for combo in itertools.product(domain, repeat=len(attrs)):
        vals = {k: v for k, v in zip(attrs, combo) if v is not None}
        if satisfies(vals, a) and not satisfies(vals, b):
            return False
    return True


def random_conjunction(rng, max_atoms=3):
    while True:
        atoms = tuple(A(rng.choice(ATTRS), rng.choice(OPS), rng.randint(0, 31))
                      for _ in range(rng.randint(1, max_atoms)))
        if is_satisfiable(atoms):
            return atoms


def test_satisfies_examples():
    assert satisfies({"age": 50}, [A("age", ">=", 45)])
    assert not satisfies({}, [A("age", ">=", 45)])
    assert not satisfies({"age": 20}, [A("age", "!=", 20)])


def test_satisfies_type_mismatch():
    with pytest.raises(IncomparableValues, match="incomparable values"):
        satisfies({"age": "old"}, [A("age", ">=", 45)])


def test_implies_examples():
    strong = [A("age", ">", 25), A("gender", "=", "female")]
    weak = [A("age", "!=", 20)]
    assert implies(strong, weak)
    assert not implies(weak, strong)


def test_unconstrained_attribute_is_not_implied():
    assert not implies([A("age", ">", 3)], [A("name", "!=", "x")])


@pytest.mark.parametrize("x", [
    [A("age", ">=", 45)],
    [A("age", ">", 3), A("age", "<", 9), A("age", "!=", 5)],
    [A("name", "=", "bob")],
    [A("w", ">", 1.5)],
])
def test_implies_reflexive(x):
    assert implies(x, x)


def test_equivalent_examples():
    assert equivalent([A("age", ">=", 45)], [A("age", ">=", 45)])
    assert equivalent([A("age", ">", 44)], [A("age", ">=", 45)])
    assert not equivalent([A("age", ">", 44.0)], [A("age", ">=", 45.0)])
    assert not equivalent([A("age", ">=", 45)], [A("age", ">=", 46)])


def test_integer_gap_equivalence_matches_enumeration():
    # over integers, age>44 and age>=45 admit the same values
    left = {x for x in WINDOW if satisfies({"age": x}, [A("age", ">", 44)])}
    right = {x for x in WINDOW if satisfies({"age": x}, [A("age", ">=", 45)])}
    assert left == right


def test_exclusions_can_empty_a_bounded_integer_range():
    assert not is_satisfiable([A("a", ">=", 3), A("a", "<=", 4), A("a", "!=", 3), A("a", "!=", 4)])
    assert is_satisfiable([A("a", ">=", 3), A("a", "!=", 3), A("a", "!=", 4)])
    assert not is_satisfiable([A("a", "=", 3), A("a", "=", 4)])


def test_decimal_open_bounds():
    assert implies([A("w", ">", 1.5)], [A("w", "!=", 1.5)])
    assert not implies([A("w", ">=", 1.5)], [A("w", ">", 1.5)])
    assert implies([A("w", ">=", 1.5), A("w", "!=", 1.5)], [A("w", ">", 1.5)])


def test_string_bounds():
    assert implies([A("s", "=", "b")], [A("s", ">", "a")])
    assert not implies([A("s", ">=", "a")], [A("s", "=", "a")])


def test_implies_matches_enumeration_seeded():
    rng = random.Random(7)
    for _ in range(300):
        a, b = random_conjunction(rng), random_conjunction(rng)
        assert implies(a, b) == brute_implies(a, b), (a, b)


atoms = st.builds(Atom, st.sampled_from(ATTRS), st.sampled_from(OPS), st.integers(0, 31))
conjunctions = st.lists(atoms, min_size=1, max_size=3).map(tuple).filter(is_satisfiable)


@settings(max_examples=150, deadline=None)
@given(conjunctions, conjunctions, conjunctions)
def test_implies_transitive(a, b, c):
    if implies(a, b) and implies(b, c):
        assert implies(a, c)


@settings(max_examples=150, deadline=None)
@given(conjunctions, conjunctions, st.integers(-1, 32), st.integers(-1, 32))
def test_satisfies_distributes_over_conjunction(a, b, x, y):
    vals = {"a": x, "b": y}
    assert satisfies(vals, a + b) == (satisfies(vals, a) and satisfies(vals, b))
