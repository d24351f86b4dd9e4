"""Strict unsharp residuated posets and the round trips to effect algebras.

The structure is (C, <=, (.), ->, ', 0, 1): a bounded poset with an antitone
involution, a strict partial product x (.) y (defined exactly when x' <= y),
and a subset-valued implication tied to the product by unsharp adjointness

    U(x,y') (.) y  subset-of  UL(y,z)   iff   U(x,y')  subset-of  U(y -> z).

Tables are validated condition by condition (C1..C5) so deliberately broken
candidates report exactly what they break.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Optional

from .algebra import EffectAlgebra, InvalidAlgebraError, validate_tables
from .implication import implies
from .poset import Involution, Poset, Subset
from .reports import ClauseResult, PropertyReport, ValidationReport, Violation


@dataclass
class UnsharpResiduatedPoset:
    """Product and implication tables over a bounded involutive poset."""

    poset: Poset
    inv: tuple[int, ...]
    products: tuple[tuple[Optional[int], ...], ...]
    imps: tuple[tuple[Subset, ...], ...]
    name: str = "C"
    validated: bool = False
    divisible: Optional[bool] = None

    @property
    def n(self) -> int:
        return self.poset.n

    @property
    def labels(self) -> tuple[str, ...]:
        return self.poset.labels

    def odot(self, x: int, y: int) -> Optional[int]:
        return self.products[x][y]

    def imp(self, x: int, y: int) -> Subset:
        return self.imps[x][y]

    def odot_image(self, a: Subset, y: int) -> Optional[Subset]:
        'A (.) y elementwise; None when any product is undefined.'
        bits = 0
        for u in a:
            v = self.products[u][y]
            if v is None:
                return None
            bits |= 1 << v
        return Subset(bits, self.n)


def from_effect_algebra(E: EffectAlgebra, validate: bool = True) -> UnsharpResiduatedPoset:
    """Derive product and implication tables from an effect algebra.

    x (.) y = (x' + y')' where defined, x -> y = x' + L(x,y).
    """
    n = E.n
    products = tuple(
        tuple(E.odot(x, y) for y in range(n)) for x in range(n)
    )
    imps = tuple(tuple(implies(E, x, y) for y in range(n)) for x in range(n))
    c = UnsharpResiduatedPoset(E.order, E.comp, products, imps, name=E.name)
    if validate:
        report = validate_surp(c)
        if not report.ok:
            raise ValueError(f"derived tables fail validation: {report.violations}")
        return report.algebra
    return c


def _cone_masks(p: Poset):
    'Upper-cone bitmask for every subset mask (small carriers only).'
    n = p.n
    full = (1 << n) - 1
    upp = [full] * (1 << n)
    low = [full] * (1 << n)
    for mask in range(1, 1 << n):
        lsb = mask & -mask
        x = lsb.bit_length() - 1
        upp[mask] = upp[mask ^ lsb] & p.up[x]
        low[mask] = low[mask ^ lsb] & p.down[x]
    return low, upp


def validate_surp(c: UnsharpResiduatedPoset) -> ValidationReport:
    """Check (C1)-(C4) and set the divisibility flag per (C5).

    A failed involution (C1) stops the run; the remaining conditions are
    each checked independently with one witness apiece, since a single
    mutation can break several at once.
    """
    from .poset import validate_involution

    p = c.poset
    n = p.n
    inv = c.inv
    prod = c.products
    violations: list[Violation] = []

    inv_report = validate_involution(p, Involution(tuple(inv)))
    if not inv_report.ok:
        bad = inv_report.failures()[0]
        violations.append(
            Violation("C1", bad.witness or (), f"involution {bad.clause} fails")
        )
        return ValidationReport(violations, None)

    def add(axiom, witness, message):
        violations.append(Violation(axiom, witness, message))

    # C2: strict partial commutative monoid, monotone, with recovery
    wit = next(
        (
            (x, y)
            for x in range(n)
            for y in range(n)
            if (prod[x][y] is not None) != p.leq(inv[x], y)
        ),
        None,
    )
    if wit:
        add("C2", wit, "strictness: product defined iff x' <= y")
    wit = next(
        (
            (x, y)
            for x in range(n)
            for y in range(n)
            if prod[x][y] != prod[y][x]
        ),
        None,
    )
    if wit:
        add("C2", wit, "product not commutative")
    wit = next(
        (
            (x,)
            for x in range(n)
            if prod[x][p.top] != x or prod[p.top][x] != x
        ),
        None,
    )
    if wit:
        add("C2", wit, "top is not a unit")
    wit = None
    for x in range(n):
        for y in range(n):
            pxy = prod[x][y]
            for z in range(n):
                pyz = prod[y][z]
                left = prod[pxy][z] if pxy is not None else None
                right = prod[x][pyz] if pyz is not None else None
                if left != right:
                    wit = (x, y, z)
                    break
            if wit:
                break
        if wit:
            break
    if wit:
        add("C2", wit, "product not associative")
    wit = next(
        (
            (x, y, z)
            for z in range(n)
            for x in range(n)
            for y in range(n)
            if p.leq(inv[z], x)
            and p.leq(x, y)
            and prod[x][z] is not None
            and prod[y][z] is not None
            and not p.leq(prod[x][z], prod[y][z])
        ),
        None,
    )
    if wit:
        add("C2", (wit[0], wit[1], wit[2]), "product not monotone")
    wit = None
    for x in range(n):
        for y in range(n):
            if not p.leq(x, y):
                continue
            inner = prod[y][inv[x]]
            if inner is None or prod[y][inv[inner]] != x:
                wit = (x, y)
                break
        if wit:
            break
    if wit:
        add("C2", wit, "recovery x = y (.) (y (.) x')' fails")

    # C3: unsharp adjointness, quantified over all triples
    small = n <= 14
    if small:
        low, upp = _cone_masks(p)
    wit = None
    for x in range(n):
        for y in range(n):
            umask = p.up[x] & p.up[inv[y]]
            image = c.odot_image(Subset(umask, n), y)
            for z in range(n):
                lyz = p.down[y] & p.down[z]
                ul = upp[lyz] if small else p.upper_cone(Subset(lyz, n)).bits
                lhs = image is not None and not (image.bits & ~ul)
                target = p.upper_cone(c.imps[y][z]).bits
                rhs = not (umask & ~target)
                if lhs != rhs:
                    wit = (x, y, z)
                    break
            if wit:
                break
        if wit:
            break
    if wit:
        add("C3", wit, "unsharp adjointness fails")

    # C4: x -> 0 = {x'}
    wit = next(
        (
            (x,)
            for x in range(n)
            if c.imps[x][p.bottom] != Subset.single(n, inv[x])
        ),
        None,
    )
    if wit:
        add("C4", wit, "implication to bottom is not the involute singleton")

    # C5: divisibility x (.) (x -> y) = L(x,y)
    divisible = True
    for x in range(n):
        for y in range(n):
            image = c.odot_image(c.imps[x][y], x)
            if image is None or image.bits != p.down[x] & p.down[y]:
                divisible = False
                break
        if not divisible:
            break

    if violations:
        return ValidationReport(violations, None)
    out = replace(c, validated=True, divisible=divisible)
    return ValidationReport([], out)


def check_dual_adjointness(c: UnsharpResiduatedPoset) -> PropertyReport:
    """The cone-order form of adjointness, checked against the subset form.

    For every triple: U(x,y') (.) y >= L(y,z) iff U(x,y') >= (y -> z),
    and each side must coincide with the corresponding subset-inclusion
    side of the primary condition.
    """
    p = c.poset
    n = p.n
    inv = c.inv
    adj_wit = match_wit = None
    for x in range(n):
        for y in range(n):
            ux = Subset(p.up[x] & p.up[inv[y]], n)
            image = c.odot_image(ux, y)
            for z in range(n):
                lyz = Subset(p.down[y] & p.down[z], n)
                incl_lhs = image is not None and image.issubset(p.upper_cone(lyz))
                incl_rhs = ux.issubset(p.upper_cone(c.imps[y][z]))
                cone_lhs = image is not None and p.set_leq(lyz, image)
                cone_rhs = p.set_leq(c.imps[y][z], ux)
                if cone_lhs != cone_rhs and adj_wit is None:
                    adj_wit = (x, y, z)
                if (incl_lhs != cone_lhs or incl_rhs != cone_rhs) and match_wit is None:
                    match_wit = (x, y, z)
            if adj_wit and match_wit:
                break
        if adj_wit and match_wit:
            break
    return PropertyReport(
        "dual-adjointness",
        [
            ClauseResult("cone_order_adjointness", adj_wit is None, adj_wit),
            ClauseResult("matches_subset_form", match_wit is None, match_wit),
        ],
    )


def to_effect_algebra(c: UnsharpResiduatedPoset) -> EffectAlgebra:
    """Recover the effect algebra via x + y = (x' (.) y')' for x <= y'.

    The construction always validates when `c` came from a valid algebra;
    a failure therefore indicates an invalid input and is raised with the
    offending report attached.
    """
    p = c.poset
    n = p.n
    inv = c.inv
    sums: list[list[Optional[int]]] = [[None] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            if p.leq(x, inv[y]):
                t = c.products[inv[x]][inv[y]]
                if t is None:
                    raise InvalidAlgebraError(
                        ValidationReport(
                            [Violation("C2", (inv[x], inv[y]), "strictness gap")]
                        )
                    )
                sums[x][y] = inv[t]
    report = validate_tables(p.labels, sums, p.bottom, p.top, name=c.name)
    if not report.ok:
        raise InvalidAlgebraError(report)
    E = report.algebra
    if E.order.up != p.up:
        raise InvalidAlgebraError(
            ValidationReport(
                [Violation("order", (), "derived order differs from the poset")]
            )
        )
    return E


@dataclass
class RoundtripResult:
    equal: bool
    diffs: list[tuple] = field(default_factory=list)

    def __bool__(self):
        return self.equal


def roundtrip_check(E: EffectAlgebra) -> RoundtripResult:
    'Algebra -> residuated tables -> algebra; compare sum tables entrywise.'
    back = to_effect_algebra(from_effect_algebra(E, validate=False))
    diffs = [
        (x, y, E.sums[x][y], back.sums[x][y])
        for x in range(E.n)
        for y in range(E.n)
        if E.sums[x][y] != back.sums[x][y]
    ]
    if E.labels != back.labels or E.zero != back.zero or E.one != back.one:
        diffs.append(("labels/bounds", E.labels, back.labels, (E.zero, E.one)))
    return RoundtripResult(not diffs, diffs)


def surp_roundtrip_check(c: UnsharpResiduatedPoset) -> RoundtripResult:
    """Empirical check of the reverse round trip: tables -> algebra -> tables.

    Not asserted as an invariant anywhere; callers decide what a mismatch
    means for their candidate.
    """
    back = from_effect_algebra(to_effect_algebra(c), validate=False)
    diffs = []
    for x in range(c.n):
        for y in range(c.n):
            if c.products[x][y] != back.products[x][y]:
                diffs.append(("product", x, y, c.products[x][y], back.products[x][y]))
            if c.imps[x][y] != back.imps[x][y]:
                diffs.append(("imp", x, y, c.imps[x][y], back.imps[x][y]))
    if c.poset.up != back.poset.up:
        diffs.append(("order", c.poset.up, back.poset.up))
    return RoundtripResult(not diffs, diffs)


def adjointness_exchange_equivalence(E: EffectAlgebra) -> PropertyReport:
    """Adjointness and the consequent-exchange law, evaluated independently.

    Both biconditionals are computed per triple and must agree pointwise
    (and each holds outright on a valid algebra).
    """
    c = from_effect_algebra(E, validate=False)
    p = E.order
    n = E.n
    comp = E.comp
    adj_wit = exch_wit = match_wit = None
    for a in range(n):
        for b in range(n):
            u_ab = Subset(p.up[a] & p.up[comp[b]], n)
            image = c.odot_image(u_ab, b)
            for cc in range(n):
                lbc = Subset(p.down[b] & p.down[cc], n)
                adj_lhs = image is not None and image.issubset(p.upper_cone(lbc))
                adj_rhs = u_ab.issubset(p.upper_cone(c.imps[b][cc]))
                adj = adj_lhs == adj_rhs
                ex_lhs = p.set_leq(
                    c.imps[a][b], p.upper_cone(E.subset(comp[a], comp[cc]))
                )
                ex_rhs = p.set_leq(
                    c.imps[a][cc], p.upper_cone(E.subset(comp[a], comp[b]))
                )
                exch = ex_lhs == ex_rhs
                if not adj and adj_wit is None:
                    adj_wit = (a, b, cc)
                if not exch and exch_wit is None:
                    exch_wit = (a, b, cc)
                if adj != exch and match_wit is None:
                    match_wit = (a, b, cc)
    return PropertyReport(
        "adjointness-exchange",
        [
            ClauseResult("adjointness_biconditional", adj_wit is None, adj_wit),
            ClauseResult("exchange_biconditional", exch_wit is None, exch_wit),
            ClauseResult("pointwise_match", match_wit is None, match_wit),
        ],
    )
