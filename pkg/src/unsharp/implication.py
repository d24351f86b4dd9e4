"""Subset-valued implication x -> y = x' + L(x,y) and its laws."""

from __future__ import annotations

from typing import Union

from .algebra import EffectAlgebra
from .poset import Subset
from .reports import ClauseResult, PropertyReport

ElemOrSet = Union[int, Subset]


def _as_subset(E: EffectAlgebra, v: ElemOrSet) -> Subset:
    if isinstance(v, Subset):
        if v.n != E.n:
            raise ValueError("carrier mismatch")
        return v
    return Subset.single(E.n, v)


def implies(E: EffectAlgebra, x: int, y: int) -> Subset:
    "x -> y = x' + L(x,y); always defined since L(x,y) <= x."
    low = E.order.lower_cone(E.subset(x, y))
    return E.add_elem_set(E.comp[x], low)


def implies_sets(E: EffectAlgebra, a: ElemOrSet, b: ElemOrSet) -> Subset:
    """A -> B = A' + L(A u B), with elements read as singletons.

    An empty antecedent yields the empty set (the elementwise sum has
    nothing to range over).
    """
    sa, sb = _as_subset(E, a), _as_subset(E, b)
    low = E.order.lower_cone(sa | sb)
    return E.add_sets(E.set_complement(sa), low)


def odot_image(E: EffectAlgebra, x: int, a: Subset) -> Subset:
    'x (.) A elementwise; every element of A must dominate x-orthosupplement.'
    if a.n != E.n:
        raise ValueError("carrier mismatch")
    bits = 0
    for w in a:
        v = E.odot(x, w)
        if v is None:
            raise ValueError(
                f"product undefined: {E.labels[x]} (.) {E.labels[w]}"
            )
        bits |= 1 << v
    return Subset(bits, E.n)


class ImplicationTable:
    'The n x n grid of implication subsets of an algebra.'

    __slots__ = ("algebra", "entries")

    def __init__(self, algebra: EffectAlgebra, entries):
        self.algebra = algebra
        self.entries = entries

    def __getitem__(self, pair) -> Subset:
        x, y = pair
        return self.entries[x][y]


def implication_table(E: EffectAlgebra) -> ImplicationTable:
    entries = tuple(
        tuple(implies(E, x, y) for y in range(E.n)) for x in range(E.n)
    )
    return ImplicationTable(E, entries)


def element_implication_suite(E: EffectAlgebra) -> PropertyReport:
    """Twelve laws of element implication, one clause each.

    The meet clause only applies to lattices and is marked skipped
    elsewhere.  Witnesses are the lexicographically first offending
    tuples.
    """
    n, p = E.n, E.order
    comp = E.comp
    imp = [[implies(E, x, y) for y in range(n)] for x in range(n)]
    up_comp = [Subset(p.up[comp[x]], n) for x in range(n)]

    def first_pair(pred):
        return next(
            ((a, b) for a in range(n) for b in range(n) if not pred(a, b)), None
        )

    def first_triple(pred):
        return next(
            (
                (a, b, c)
                for a in range(n)
                for b in range(n)
                for c in range(n)
                if not pred(a, b, c)
            ),
            None,
        )

    clauses = []

    wit = first_pair(lambda a, b: imp[a][b].issubset(up_comp[a]))
    clauses.append(ClauseResult("bounded_by_complement_cone", wit is None, wit))

    wit = first_pair(lambda a, b: not p.leq(a, b) or imp[a][b] == up_comp[a])
    clauses.append(ClauseResult("constant_on_leq", wit is None, wit))

    wit = first_pair(
        lambda a, b: not p.leq(b, a)
        or imp[a][b] == p.interval(comp[a], E.sums[comp[a]][b])
    )
    clauses.append(ClauseResult("interval_on_geq", wit is None, wit))

    one_set = E.subset(E.one)
    wit = next(((b,) for b in range(n) if imp[E.zero][b] != one_set), None)
    clauses.append(ClauseResult("zero_antecedent", wit is None, wit))

    wit = next(
        ((a,) for a in range(n) if imp[a][E.zero] != E.subset(comp[a])), None
    )
    clauses.append(ClauseResult("zero_consequent", wit is None, wit))

    wit = next(
        (
            (b,)
            for b in range(n)
            if imp[E.one][b] != p.lower_cone(E.subset(b))
        ),
        None,
    )
    clauses.append(ClauseResult("one_antecedent", wit is None, wit))

    wit = first_pair(
        lambda a, b: p.lower_cone(imp[a][b]) == p.lower_cone(E.subset(comp[a]))
    )
    clauses.append(ClauseResult("lower_cone_collapse", wit is None, wit))

    wit = first_pair(
        lambda a, b: odot_image(E, a, imp[a][b]) == p.lower_cone(E.subset(a, b))
    )
    clauses.append(ClauseResult("product_recovers_cone", wit is None, wit))

    wit = first_triple(
        lambda a, b, c: not p.leq(b, c) or imp[a][b].issubset(imp[a][c])
    )
    clauses.append(ClauseResult("monotone_in_consequent", wit is None, wit))

    def complement_forms(a, b):
        low = p.lower_cone(E.subset(a, b))
        v1 = E.set_complement(odot_image(E, a, E.set_complement(low)))
        v2 = E.set_complement(
            odot_image(E, a, p.upper_cone(E.subset(comp[a], comp[b])))
        )
        return imp[a][b] == v1 and imp[a][b] == v2

    wit = first_pair(complement_forms)
    clauses.append(ClauseResult("product_complement_forms", wit is None, wit))

    def exchange(a, b, c):
        lhs = p.set_leq(imp[a][b], p.upper_cone(E.subset(comp[a], comp[c])))
        rhs = p.set_leq(imp[a][c], p.upper_cone(E.subset(comp[a], comp[b])))
        return lhs == rhs

    wit = first_triple(exchange)
    clauses.append(ClauseResult("consequent_exchange", wit is None, wit))

    if p.is_lattice():
        wit = first_pair(lambda a, b: imp[a][p.meet(a, b)] == imp[a][b])
        clauses.append(ClauseResult("meet_consequent_collapse", wit is None, wit))
    else:
        clauses.append(
            ClauseResult("meet_consequent_collapse", True, None, skipped=True,
                         detail="not a lattice")
        )
    return PropertyReport("element-implication", clauses)


def set_implication_suite(E: EffectAlgebra) -> PropertyReport:
    """Seven laws of implication with set arguments.

    The cone-antecedent clause checks all three pairwise equalities of
    the chained expressions against the closed form L(a') + L(a,b).
    """
    n, p = E.n, E.order
    comp = E.comp
    clauses = []

    wit = next(
        (
            (a,)
            for a in range(n)
            if implies_sets(E, implies(E, a, E.zero), E.zero) != E.subset(a)
        ),
        None,
    )
    clauses.append(ClauseResult("double_negation", wit is None, wit))

    wit = None
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if implies_sets(E, a, implies(E, b, c)) != implies(E, a, comp[b]):
                    wit = (a, b, c)
                    break
            if wit:
                break
        if wit:
            break
    clauses.append(ClauseResult("nested_consequent", wit is None, wit))

    wit = next(
        (
            (a, b)
            for a in range(n)
            for b in range(n)
            if implies_sets(E, a, p.upper_cone(E.subset(b))) != implies(E, a, b)
        ),
        None,
    )
    clauses.append(ClauseResult("cone_consequent", wit is None, wit))

    def cone_antecedent(a, b):
        ua = p.upper_cone(E.subset(a))
        first = implies_sets(E, ua, b)
        closed = E.add_sets(
            p.lower_cone(E.subset(comp[a])), p.lower_cone(E.subset(a, b))
        )
        return (
            first == implies_sets(E, ua, p.upper_cone(E.subset(b)))
            and first == implies_sets(E, p.upper_cone(E.subset(comp[a], comp[b])), comp[a])
            and first == closed
        )

    wit = next(
        ((a, b) for a in range(n) for b in range(n) if not cone_antecedent(a, b)),
        None,
    )
    clauses.append(ClauseResult("cone_antecedent", wit is None, wit))

    wit = next(
        (
            (a, b)
            for a in range(n)
            for b in range(n)
            if implies_sets(E, a, p.lower_cone(E.subset(a, b))) != E.subset(comp[a])
        ),
        None,
    )
    clauses.append(ClauseResult("own_lower_cone", wit is None, wit))

    def own_upper(a, b):
        lhs = implies_sets(E, a, p.upper_cone(E.subset(a, b)))
        rhs = E.add_elem_set(comp[a], p.lower_cone(E.subset(a)))
        return lhs == rhs

    wit = next(
        ((a, b) for a in range(n) for b in range(n) if not own_upper(a, b)), None
    )
    clauses.append(ClauseResult("own_upper_cone", wit is None, wit))

    wit = next(
        (
            (a, b)
            for a in range(n)
            for b in range(n)
            if p.upper_cone(implies_sets(E, a, p.upper_cone(E.subset(a, b))))
            != E.subset(E.one)
        ),
        None,
    )
    clauses.append(ClauseResult("tautology_cone", wit is None, wit))
    return PropertyReport("set-implication", clauses)
