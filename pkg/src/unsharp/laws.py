"""Contraposition and related global laws.

The unsharp contraposition law compares upper cones of implications,
U(x -> y) against U(y' -> x').  It holds for every comparable pair but can
fail on incomparable ones; on lattices it is equivalent to the identity
x' + (x ^ y) = y + (x' ^ y').
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .algebra import EffectAlgebra, MonotonicityResult, is_monotonous, validate_tables
from .implication import implies
from .poset import Subset
from .reports import ClauseResult, LawReport, LawViolation, PropertyReport


def contraposition_pair(E: EffectAlgebra, x: int, y: int):
    "U(x -> y) vs U(y' -> x'): returns (equal, lhs cone, rhs cone)."
    p = E.order
    lhs = p.upper_cone(implies(E, x, y))
    rhs = p.upper_cone(implies(E, E.comp[y], E.comp[x]))
    return lhs == rhs, lhs, rhs


def counterexample_search(E: EffectAlgebra) -> LawReport:
    """Every pair breaking contraposition, annotated comparable/incomparable."""
    report = LawReport("contraposition")
    for x in range(E.n):
        for y in range(E.n):
            equal, lhs, rhs = contraposition_pair(E, x, y)
            if not equal:
                cmp = E.order.comparable(x, y)
                report.failing_pairs.append(LawViolation(x, y, lhs, rhs, cmp))
                if cmp:
                    report.comparable_only_status = False
    return report


def check_comparable_contraposition(E: EffectAlgebra) -> PropertyReport:
    """Contraposition on comparable pairs, plus the meet-variant clause.

    The variant U(x -> y) = U((x^y)' -> x') is checked for every pair whose
    meet exists (all of them on a lattice).
    """
    p = E.order
    wit = next(
        (
            (x, y)
            for x in range(E.n)
            for y in range(E.n)
            if p.comparable(x, y) and not contraposition_pair(E, x, y)[0]
        ),
        None,
    )
    clauses = [ClauseResult("comparable_pairs", wit is None, wit)]

    wit = None
    checked = 0
    for x in range(E.n):
        for y in range(E.n):
            m = p.meet(x, y)
            if m is None:
                continue
            checked += 1
            lhs = p.upper_cone(implies(E, x, y))
            rhs = p.upper_cone(implies(E, E.comp[m], E.comp[x]))
            if lhs != rhs:
                wit = (x, y)
                break
        if wit:
            break
    clauses.append(
        ClauseResult("meet_variant", wit is None, wit, detail=f"{checked} pairs with meets")
    )
    return PropertyReport("comparable-contraposition", clauses)


def check_lattice_identity(E: EffectAlgebra) -> LawReport:
    """x' + (x ^ y) = y + (x' ^ y') on a lattice, pair by pair."""
    p = E.order
    if not p.is_lattice():
        raise ValueError("not a lattice")
    report = LawReport("identity1")
    for x in range(E.n):
        xc = E.comp[x]
        for y in range(E.n):
            lhs = E.sums[xc][p.meet(x, y)]
            rhs = E.sums[y][p.meet(xc, E.comp[y])]
            if lhs != rhs:
                cmp = p.comparable(x, y)
                report.failing_pairs.append(
                    LawViolation(x, y, E.subset(lhs), E.subset(rhs), cmp)
                )
                if cmp:
                    report.comparable_only_status = False
    return report


@dataclass
class IdentityEquivalence:
    contraposition_holds: bool
    identity_holds: bool

    @property
    def equivalent(self) -> bool:
        return self.contraposition_holds == self.identity_holds

    def __bool__(self):
        return self.equivalent


def identity_contraposition_equivalence(E: EffectAlgebra) -> IdentityEquivalence:
    """On a lattice, the identity and global contraposition stand or fall together.

    Both global truths are computed independently; callers assert they match.
    """
    contra = counterexample_search(E).holds_globally
    ident = check_lattice_identity(E).holds_globally
    return IdentityEquivalence(contra, ident)


def boolean_to_ea(k: int) -> EffectAlgebra:
    """The Boolean algebra on k atoms as an effect algebra.

    x + y is the union of disjoint atom sets; everything else is undefined.
    """
    if not 1 <= k <= 6:
        raise ValueError("atom count outside 1..6")
    n = 1 << k
    atoms = "pqrstu"[:k]

    def label(mask: int) -> str:
        if mask == 0:
            return "0"
        if mask == n - 1:
            return "1"
        return "".join(atoms[i] for i in range(k) if mask >> i & 1)

    labels = [label(m) for m in range(n)]
    sums = [
        [x | y if x & y == 0 else None for y in range(n)] for x in range(n)
    ]
    report = validate_tables(labels, sums, 0, n - 1, name=f"BOOL-{k}")
    assert report.ok, report.violations
    return report.algebra


@dataclass
class ConeAdjointness:
    """Cone-level adjointness status together with the monotonicity probe."""

    holds_globally: bool
    witness: Optional[tuple]
    monotonicity: MonotonicityResult


def check_cone_level_adjointness(E: EffectAlgebra) -> ConeAdjointness:
    """L(U(x,y') (.) y) <= UL(y,z) iff LU(x,y') <= U(y -> z), recorded only.

    The result is reported, never asserted: the law is tied to monotonicity,
    which not every algebra enjoys, so the probe result rides along.
    """
    from .implication import odot_image

    p = E.order
    n = E.n
    comp = E.comp
    wit = None
    for x in range(n):
        for y in range(n):
            uxy = Subset(p.up[x] & p.up[comp[y]], n)
            image_low = p.lower_cone(odot_image(E, y, uxy))
            low_uxy = p.lower_cone(uxy)
            for z in range(n):
                ul = p.upper_cone(Subset(p.down[y] & p.down[z], n))
                lhs = p.set_leq(image_low, ul)
                rhs = p.set_leq(low_uxy, p.upper_cone(implies(E, y, z)))
                if lhs != rhs:
                    wit = (x, y, z)
                    break
            if wit:
                break
        if wit:
            break
    return ConeAdjointness(wit is None, wit, is_monotonous(E))
