"""Attribute constraint satisfaction and implication.

Implication is decided per attribute on a normalized range: lower/upper
bound (each open or closed), plus a finite set of excluded values.  When
every constant on an attribute is an integer the attribute ranges over the
integers, so ``age > 44`` normalizes to ``age >= 45``; otherwise the domain
is treated as dense.  Strings compare byte-wise.
"""
from __future__ import annotations

import operator
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .model import Atom, Const, const_kind

_CMP = {
    ">=": operator.ge,
    "<=": operator.le,
    "=": operator.eq,
    "!=": operator.ne,
    ">": operator.gt,
    "<": operator.lt,
}


class IncomparableValues(TypeError):
    pass


def _family(c: Const) -> str:
    return "str" if const_kind(c) == "str" else "num"


def _key(c: Const):
    # byte-wise ordering for strings keeps verdicts platform independent
    return c.encode("utf-8") if isinstance(c, str) else c


def compare(left: Const, op: str, right: Const) -> bool:
    if _family(left) != _family(right):
        raise IncomparableValues(f"incomparable values: {left!r} {op} {right!r}")
    return _CMP[op](_key(left), _key(right))


def satisfies(values: Mapping[str, Const] | Iterable[tuple[str, Const]], formula: Iterable[Atom]) -> bool:
    """True iff every atom holds for the attribute value of the same name.

    An atom on an attribute missing from ``values`` is false.
    """
    vals = dict(values.items() if isinstance(values, Mapping) else values)
    for a in formula:
        if a.attr not in vals:
            return False
        if not compare(vals[a.attr], a.op, a.value):
            return False
    return True


def mixed_attributes(formula: Iterable[Atom]) -> list[str]:
    """Attributes compared against both strings and numbers."""
    fams = defaultdict(set)
    for a in formula:
        fams[a.attr].add(_family(a.value))
    return sorted(k for k, v in fams.items() if len(v) > 1)


@dataclass
class NormalizedConstraint:
    """Solution set of one attribute: an interval minus excluded points."""

    integer: bool
    lo: Const | None = None
    lo_closed: bool = True
    hi: Const | None = None
    hi_closed: bool = True
    excluded: set = field(default_factory=set)

    def add(self, op: str, c: Const) -> None:
        if op == "!=":
            self.excluded.add(c)
            return
        if self.integer:
            if op == ">":
                op, c = ">=", c + 1
            elif op == "<":
                op, c = "<=", c - 1
        if op in (">=", ">", "="):
            self._raise_lo(c, op != ">")
        if op in ("<=", "<", "="):
            self._lower_hi(c, op != "<")

    def _raise_lo(self, c, closed):
        k = _key(c)
        if self.lo is None or k > _key(self.lo) or (k == _key(self.lo) and not closed):
            self.lo, self.lo_closed = c, closed

    def _lower_hi(self, c, closed):
        k = _key(c)
        if self.hi is None or k < _key(self.hi) or (k == _key(self.hi) and not closed):
            self.hi, self.hi_closed = c, closed

    def tighten(self) -> bool:
        """Push closed bounds past excluded points; False when empty."""
        if self.integer:
            while self.lo is not None and self.lo in self.excluded and (self.hi is None or self.lo <= self.hi):
                self.lo += 1
            while self.hi is not None and self.hi in self.excluded and (self.lo is None or self.hi >= self.lo):
                self.hi -= 1
        else:
            if self.lo is not None and self.lo_closed and self.lo in self.excluded:
                self.lo_closed = False
            if self.hi is not None and self.hi_closed and self.hi in self.excluded:
                self.hi_closed = False
        return not self.empty

    @property
    def empty(self) -> bool:
        if self.lo is None or self.hi is None:
            return False
        lo, hi = _key(self.lo), _key(self.hi)
        if lo < hi:
            return False
        return not (lo == hi and self.lo_closed and self.hi_closed)

    def _inside(self, c) -> bool:
        k = _key(c)
        if self.lo is not None:
            lo = _key(self.lo)
            if k < lo or (k == lo and not self.lo_closed):
                return False
        if self.hi is not None:
            hi = _key(self.hi)
            if k > hi or (k == hi and not self.hi_closed):
                return False
        return True

    def entails(self, op: str, c: Const) -> bool:
        """Does every value of this (non-empty, tightened) set satisfy ``x op c``?"""
        k = _key(c)
        if op in (">=", ">"):
            if self.lo is None:
                return False
            lo = _key(self.lo)
            if op == ">=":
                return lo >= k
            return lo > k or (lo == k and not self.lo_closed)
        if op in ("<=", "<"):
            if self.hi is None:
                return False
            hi = _key(self.hi)
            if op == "<=":
                return hi <= k
            return hi < k or (hi == k and not self.hi_closed)
        if op == "=":
            return (self.lo is not None and self.hi is not None and _key(self.lo) == k == _key(self.hi)
                    and self.lo_closed and self.hi_closed)
        # "!="
        return c in self.excluded or not self._inside(c)


def _by_attr(formula: Iterable[Atom]) -> dict[str, list[Atom]]:
    out = defaultdict(list)
    for a in formula:
        out[a.attr].append(a)
    return out


def _normalize(atoms: list[Atom], integer: bool) -> NormalizedConstraint:
    n = NormalizedConstraint(integer=integer)
    for a in atoms:
        n.add(a.op, a.value)
    n.tighten()
    return n


def normalize(formula: Iterable[Atom]) -> dict[str, NormalizedConstraint] | None:
    """Per-attribute normal form, or ``None`` when unsatisfiable."""
    out = {}
    for attr, atoms in _by_attr(formula).items():
        integer = all(const_kind(a.value) == "int" for a in atoms)
        n = _normalize(atoms, integer)
        if n.empty:
            return None
        out[attr] = n
    return out


def is_satisfiable(formula: Iterable[Atom]) -> bool:
    return normalize(formula) is not None


def implies(stronger: Iterable[Atom], weaker: Iterable[Atom]) -> bool:
    """True iff every attribute assignment satisfying ``stronger`` satisfies ``weaker``."""
    stronger = tuple(stronger)
    if normalize(stronger) is None:
        return True
    strong = _by_attr(stronger)
    for attr, w_atoms in _by_attr(weaker).items():
        s_atoms = strong.get(attr)
        if not s_atoms:
            return False
        consts = [a.value for a in s_atoms + w_atoms]
        if len({_family(c) for c in consts}) > 1:
            return False
        integer = all(const_kind(c) == "int" for c in consts)
        sol = _normalize(s_atoms, integer)
        if sol.empty:
            return True
        if not all(sol.entails(a.op, a.value) for a in w_atoms):
            return False
    return True


def equivalent(a: Iterable[Atom], b: Iterable[Atom]) -> bool:
    a, b = tuple(a), tuple(b)
    return implies(a, b) and implies(b, a)
