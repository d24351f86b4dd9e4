"""Deductive systems: subsets containing 1 and closed under implication.

D is deductive when 1 is a member and, whenever x is a member and the whole
subset x -> y lands inside D, y is a member too.  For proper systems this
is equivalent to D being disjoint from its elementwise orthosupplement,
which gives both a fast enumeration and an independent cross-check.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional

from .algebra import EffectAlgebra
from .implication import implies
from .poset import Subset

BRUTE_FORCE_LIMIT = 20


@dataclass
class DeductiveCheck:
    holds: bool
    witness: Optional[tuple] = None  # (x, y) breaking closure, or ("one",)

    def __bool__(self):
        return self.holds


@dataclass
class DeductiveSystem:
    members: Subset
    algebra: EffectAlgebra

    def __len__(self):
        return len(self.members)

    def __contains__(self, x):
        return x in self.members


def _imp_bits(E: EffectAlgebra) -> list[list[int]]:
    return [[implies(E, x, y).bits for y in range(E.n)] for x in range(E.n)]


def is_deductive_system(E: EffectAlgebra, d: Subset) -> DeductiveCheck:
    """Both defining conditions, checked directly with no shortcut."""
    if d.n != E.n:
        raise ValueError("carrier mismatch")
    if E.one not in d:
        return DeductiveCheck(False, ("one",))
    bits = d.bits
    for x in d:
        for y in range(E.n):
            if not (implies(E, x, y).bits & ~bits) and not (bits >> y & 1):
                return DeductiveCheck(False, (x, y))
    return DeductiveCheck(True)


def characterize(E: EffectAlgebra, d: Subset) -> bool:
    """Proper D containing 1 is deductive iff D and D' are disjoint."""
    if d.n != E.n:
        raise ValueError("carrier mismatch")
    if E.one not in d:
        raise ValueError("characterization needs 1 as a member")
    if d.bits == E.full_set().bits:
        raise ValueError("characterization needs a proper subset; E itself is always deductive")
    return E.set_complement(d).isdisjoint(d)


def characterization_agreement(E: EffectAlgebra) -> DeductiveCheck:
    """Sweep every proper subset containing 1 and compare the direct
    closure test with the disjointness criterion.  Returns the first
    disagreeing subset as witness, if any."""
    if E.n > BRUTE_FORCE_LIMIT:
        raise ValueError("carrier too large for the exhaustive sweep")
    one_bit = 1 << E.one
    full = (1 << E.n) - 1
    for mask in range(1 << E.n):
        if not mask & one_bit or mask == full:
            continue
        d = Subset(mask, E.n)
        if is_deductive_system(E, d).holds != characterize(E, d):
            return DeductiveCheck(False, tuple(d.indices()))
    return DeductiveCheck(True)


def _canonical_key(bits: int, n: int):
    return (bits.bit_count(), Subset(bits, n).indices())


def enumerate_ded(E: EffectAlgebra) -> list[DeductiveSystem]:
    """All deductive systems, sorted by size then membership pattern.

    Brute force over all 2^n subsets with the definitional check up to
    n = 20; built from the complement-pair structure beyond that.
    """
    n = E.n
    found: list[int] = []
    if n <= BRUTE_FORCE_LIMIT:
        imp = _imp_bits(E)
        one_bit = 1 << E.one
        for bits in range(1 << n):
            if not bits & one_bit:
                continue
            ok = True
            rest = bits
            while rest and ok:
                lsb = rest & -rest
                x = lsb.bit_length() - 1
                rest ^= lsb
                row = imp[x]
                for y in range(n):
                    if not (row[y] & ~bits) and not (bits >> y & 1):
                        ok = False
                        break
            if ok:
                found.append(bits)
    else:
        pairs = [
            (x, E.comp[x])
            for x in range(n)
            if x not in (E.zero, E.one) and E.comp[x] > x
        ]
        found = [(1 << n) - 1]
        base = 1 << E.one
        choices = [base]
        for x, xc in pairs:
            choices = [
                bits | extra for bits in choices for extra in (0, 1 << x, 1 << xc)
            ]
        found.extend(choices)
    found.sort(key=lambda bits: _canonical_key(bits, n))
    return [DeductiveSystem(Subset(bits, n), E) for bits in found]


def generate(E: EffectAlgebra, m: Subset) -> Subset:
    """Least deductive system containing M.

    M u {1} when M avoids 0 and is disjoint from M'; all of E otherwise.
    """
    if m.n != E.n:
        raise ValueError("carrier mismatch")
    if E.zero in m or not E.set_complement(m).isdisjoint(m):
        return E.full_set()
    return m.add(E.one)


def atoms(E: EffectAlgebra) -> list[DeductiveSystem]:
    """Minimal systems above {1}: exactly the {1,x} with x not in {0,1}, x' != x.

    Cross-checked against the covers of {1} in the enumerated lattice; an
    empty list means the hypothesis is unsatisfiable (e.g. two-element E).
    """
    n = E.n
    direct = sorted(
        (1 << E.one) | (1 << x)
        for x in range(n)
        if x not in (E.zero, E.one) and E.comp[x] != x
    )
    lat = ded_lattice(E)
    bottom = 1 << E.one
    members = [s.members.bits for s in lat.systems]
    covers = []
    for bits in members:
        if bits == bottom or bottom & ~bits:
            continue
        between = [
            o
            for o in members
            if o not in (bottom, bits) and not (bottom & ~o) and not (o & ~bits)
        ]
        if not between:
            covers.append(bits)
    if sorted(covers) != sorted(direct):
        raise RuntimeError("atom structure disagrees with the lattice covers")
    return [DeductiveSystem(Subset(bits, n), E) for bits in sorted(direct)]


@dataclass
class CompletenessReport:
    ok: bool
    exhaustive: bool
    families_checked: int
    witness: Optional[tuple] = None


@dataclass
class DedLattice:
    """The lattice of all deductive systems, ordered by inclusion."""

    algebra: EffectAlgebra
    systems: list[DeductiveSystem]
    index: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.index:
            self.index = {
                s.members.bits: i for i, s in enumerate(self.systems)
            }

    def leq(self, i: int, j: int) -> bool:
        return self.systems[i].members.issubset(self.systems[j].members)

    def meet(self, i: int, j: int) -> int:
        bits = self.systems[i].members.bits & self.systems[j].members.bits
        return self.index[bits]

    def join(self, i: int, j: int) -> int:
        union = self.systems[i].members | self.systems[j].members
        return self.index[generate(self.algebra, union).bits]

    def _family_bounds(self, family: list[int]) -> Optional[tuple[int, int]]:
        """Greatest lower / least upper bound of a family, or None if missing."""
        members = [s.members.bits for s in self.systems]
        lowers = [
            b for b in members if all(not (b & ~members[i]) for i in family)
        ]
        uppers = [
            b for b in members if all(not (members[i] & ~b) for i in family)
        ]
        inf = [b for b in lowers if all(not (o & ~b) for o in lowers)]
        sup = [b for b in uppers if all(not (b & ~o) for o in uppers)]
        if len(inf) != 1 or len(sup) != 1:
            return None
        return inf[0], sup[0]

    def check_completeness(self, samples: int = 400, seed: int = 0) -> CompletenessReport:
        """Every family of systems must have an inf and a sup in the lattice.

        Exhaustive over all families when there are at most 20 systems;
        otherwise all pairs plus seeded random families.
        """
        k = len(self.systems)
        families: list[list[int]]
        exhaustive = k <= BRUTE_FORCE_LIMIT
        if exhaustive:
            families = [
                [i for i in range(k) if mask >> i & 1] for mask in range(1 << k)
            ]
        else:
            families = [[], list(range(k))]
            families += [[i] for i in range(k)]
            families += [[i, j] for i in range(k) for j in range(i + 1, k)]
            rng = random.Random(seed)
            for _ in range(samples):
                size = rng.randrange(k + 1)
                families.append(sorted(rng.sample(range(k), size)))
        for family in families:
            if self._family_bounds(family) is None:
                return CompletenessReport(False, exhaustive, len(families), tuple(family))
        return CompletenessReport(True, exhaustive, len(families))


def ded_lattice(E: EffectAlgebra) -> DedLattice:
    return DedLattice(E, enumerate_ded(E))
