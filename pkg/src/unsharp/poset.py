"""Finite bounded posets with bit-set subsets, cones, and antitone involutions.

Carriers are {0, ..., n-1} with n <= 64 so every subset fits in one machine
word and cone arithmetic is a handful of AND/OR operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .reports import ClauseResult, PropertyReport

MAX_CARRIER = 64


def _check_same_carrier(n: int, s: "Subset"):
    if s.n != n:
        raise ValueError(f"carrier mismatch: subset over {s.n} elements, poset has {n}")


@dataclass(frozen=True)
class Subset:
    """An immutable subset of {0..n-1} stored as a bitmask."""

    bits: int
    n: int

    def __post_init__(self):
        if not 0 <= self.n <= MAX_CARRIER:
            raise ValueError(f"carrier size {self.n} outside 0..{MAX_CARRIER}")
        if self.bits < 0 or self.bits & ~((1 << self.n) - 1):
            raise ValueError("subset bits fall outside the carrier")

    @classmethod
    def empty(cls, n: int) -> "Subset":
        return cls(0, n)

    @classmethod
    def full(cls, n: int) -> "Subset":
        return cls((1 << n) - 1, n)

    @classmethod
    def of(cls, n: int, elements: Iterable[int]) -> "Subset":
        bits = 0
        for x in elements:
            if not 0 <= x < n:
                raise ValueError(f"element {x} outside carrier 0..{n - 1}")
            bits |= 1 << x
        return cls(bits, n)

    @classmethod
    def single(cls, n: int, x: int) -> "Subset":
        return cls.of(n, (x,))

    def __contains__(self, x: int) -> bool:
        return 0 <= x < self.n and bool(self.bits >> x & 1)

    def __iter__(self) -> Iterator[int]:
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def _coerced(self, other: "Subset") -> int:
        if self.n != other.n:
            raise ValueError("carrier mismatch between subsets")
        return other.bits

    def __or__(self, other: "Subset") -> "Subset":
        return Subset(self.bits | self._coerced(other), self.n)

    def __and__(self, other: "Subset") -> "Subset":
        return Subset(self.bits & self._coerced(other), self.n)

    def __sub__(self, other: "Subset") -> "Subset":
        return Subset(self.bits & ~self._coerced(other), self.n)

    def issubset(self, other: "Subset") -> bool:
        return not (self.bits & ~self._coerced(other))

    def isdisjoint(self, other: "Subset") -> bool:
        return not (self.bits & self._coerced(other))

    def indices(self) -> tuple[int, ...]:
        return tuple(self)

    def add(self, x: int) -> "Subset":
        if not 0 <= x < self.n:
            raise ValueError(f"element {x} outside carrier")
        return Subset(self.bits | 1 << x, self.n)


@dataclass(frozen=True)
class Involution:
    'A self-inverse permutation of the carrier, applied with __call__.'

    mapping: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    def image(self, s: Subset) -> Subset:
        if s.n != len(self.mapping):
            raise ValueError("carrier mismatch between subset and involution")
        bits = 0
        for x in s:
            bits |= 1 << self.mapping[x]
        return Subset(bits, s.n)


class Poset:
    """A bounded partial order, kept as up-set bitmasks (up[x] = {y : x <= y}).

    The constructor validates reflexivity, antisymmetry, transitivity and
    the existence of a bottom and a top; anything else raises ValueError.
    """

    __slots__ = ("n", "up", "down", "bottom", "top", "labels", "full_bits")

    def __init__(self, up: Sequence[int], labels: Optional[Sequence[str]] = None):
        n = len(up)
        if not 1 <= n <= MAX_CARRIER:
            raise ValueError(f"carrier size {n} outside 1..{MAX_CARRIER}")
        full = (1 << n) - 1
        up = tuple(int(m) for m in up)
        for x, mask in enumerate(up):
            if mask < 0 or mask & ~full:
                raise ValueError(f"up-mask of {x} falls outside the carrier")
            if not mask >> x & 1:
                raise ValueError(f"order not reflexive at {x}")
        for x in range(n):
            for y in range(x + 1, n):
                if up[x] >> y & 1 and up[y] >> x & 1:
                    raise ValueError(f"order not antisymmetric at ({x},{y})")
        for x in range(n):
            rest = up[x]
            while rest:
                low = rest & -rest
                y = low.bit_length() - 1
                rest ^= low
                if up[y] & ~up[x]:
                    raise ValueError(f"order not transitive at ({x},{y})")
        down = [0] * n
        for x in range(n):
            for y in range(n):
                if up[x] >> y & 1:
                    down[y] |= 1 << x
        bottoms = [x for x in range(n) if up[x] == full]
        tops = [y for y in range(n) if down[y] == full]
        if len(bottoms) != 1 or len(tops) != 1:
            raise ValueError("order is not bounded by a unique bottom and top")
        if labels is None:
            labels = tuple(f"e{x}" for x in range(n))
        else:
            labels = tuple(labels)
            if len(labels) != n:
                raise ValueError("label count differs from carrier size")
            if len(set(labels)) != n:
                raise ValueError("labels are not pairwise distinct")
        self.n = n
        self.up = up
        self.down = tuple(down)
        self.bottom = bottoms[0]
        self.top = tops[0]
        self.labels = labels
        self.full_bits = full

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence[bool]], labels=None) -> "Poset":
        up = []
        for x, row in enumerate(rows):
            if len(row) != len(rows):
                raise ValueError("order matrix is not square")
            up.append(sum(1 << y for y, v in enumerate(row) if v))
        return cls(up, labels)

    def leq(self, x: int, y: int) -> bool:
        return bool(self.up[x] >> y & 1)

    def comparable(self, x: int, y: int) -> bool:
        return bool((self.up[x] >> y | self.up[y] >> x) & 1)

    def matrix(self) -> list[list[bool]]:
        return [[bool(self.up[x] >> y & 1) for y in range(self.n)] for x in range(self.n)]

    # -- cones ---------------------------------------------------------

    def lower_cone(self, a: Subset) -> Subset:
        'L(A): everything below all of A; L(empty) is the whole carrier.'
        _check_same_carrier(self.n, a)
        bits = self.full_bits
        for y in a:
            bits &= self.down[y]
        return Subset(bits, self.n)

    def upper_cone(self, a: Subset) -> Subset:
        'U(A): everything above all of A; U(empty) is the whole carrier.'
        _check_same_carrier(self.n, a)
        bits = self.full_bits
        for y in a:
            bits &= self.up[y]
        return Subset(bits, self.n)

    def cone_pair(self, *elements: int) -> tuple[Subset, Subset]:
        s = Subset.of(self.n, elements)
        return self.lower_cone(s), self.upper_cone(s)

    def set_leq(self, a: Subset, b: Subset) -> bool:
        'Every element of A below every element of B; vacuous when either is empty.'
        _check_same_carrier(self.n, a)
        _check_same_carrier(self.n, b)
        return not (b.bits & ~self.upper_cone(a).bits)

    def interval(self, a: int, b: int) -> Subset:
        '[a,b] as a subset, possibly empty.'
        return Subset(self.up[a] & self.down[b], self.n)

    # -- lattice structure ----------------------------------------------

    def meet(self, x: int, y: int) -> Optional[int]:
        """Greatest common lower bound, or None when no greatest one exists."""
        common = self.down[x] & self.down[y]
        rest = common
        while rest:
            low = rest & -rest
            m = low.bit_length() - 1
            rest ^= low
            if not (common & ~self.down[m]):
                return m
        return None

    def join(self, x: int, y: int) -> Optional[int]:
        """Least common upper bound, or None when no least one exists."""
        common = self.up[x] & self.up[y]
        rest = common
        while rest:
            low = rest & -rest
            j = low.bit_length() - 1
            rest ^= low
            if not (common & ~self.up[j]):
                return j
        return None

    def is_lattice(self) -> bool:
        return all(
            self.meet(x, y) is not None and self.join(x, y) is not None
            for x in range(self.n)
            for y in range(x, self.n)
        )

    def hasse_edges(self) -> list[tuple[int, int]]:
        """Covering pairs (x, y): x < y with nothing strictly between."""
        edges = []
        for x in range(self.n):
            strict_up = self.up[x] & ~(1 << x)
            rest = strict_up
            while rest:
                low = rest & -rest
                y = low.bit_length() - 1
                rest ^= low
                between = strict_up & self.down[y] & ~(1 << y)
                if not between:
                    edges.append((x, y))
        return edges


def validate_involution(p: Poset, inv: Involution) -> PropertyReport:
    """Check that `inv` is an antitone involution swapping bottom and top.

    Every broken invariant gets its own clause with the first witness.
    """
    m = inv.mapping
    clauses = []
    if len(m) != p.n or sorted(m) != list(range(p.n)):
        dup = next((x for x in range(len(m)) if m.count(m[x]) > 1), None)
        clauses.append(ClauseResult("permutation", False, None if dup is None else (dup,),
                                    detail="mapping is not a permutation of the carrier"))
        return PropertyReport("involution", clauses)
    clauses.append(ClauseResult("permutation", True))

    wit = next(((x,) for x in range(p.n) if m[m[x]] != x), None)
    clauses.append(ClauseResult("involutive", wit is None, wit))

    wit = None
    for x in range(p.n):
        for y in range(p.n):
            if p.leq(x, y) and not p.leq(m[y], m[x]):
                wit = (x, y)
                break
        if wit:
            break
    clauses.append(ClauseResult("antitone", wit is None, wit))

    swaps = m[p.bottom] == p.top and m[p.top] == p.bottom
    wit = None if swaps else (p.bottom, p.top)
    clauses.append(ClauseResult("swaps_bounds", swaps, wit))
    return PropertyReport("involution", clauses)
