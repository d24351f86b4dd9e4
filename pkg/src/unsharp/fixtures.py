"""Bundled algebras: the two worked nine- and six-element examples, finite
Boolean algebras, and chains.  Names accepted everywhere a file is:
E9, E6, BOOL-1 .. BOOL-6, CHAIN-2 .. CHAIN-64.
"""

from __future__ import annotations

from .algebra import EffectAlgebra, validate_tables
from .dsl import emit_spec, load_algebra
from .laws import boolean_to_ea

E9_TEXT = """\
algebra E9
elements 0 a b c d e f g 1
zero 0
one 1
sum a b = e
sum a c = f
sum a g = 1
sum b b = d
sum b c = g
sum b d = f
sum b f = 1
sum c e = 1
sum d d = 1
"""

E6_TEXT = """\
algebra E6
elements 0 a a' b b' 1
zero 0
one 1
sum a a' = 1
sum b b' = 1
"""

BUNDLED = ("E9", "E6", "BOOL-1", "BOOL-2", "BOOL-3", "CHAIN-3", "CHAIN-4")


def _chain(n: int) -> EffectAlgebra:
    if not 2 <= n <= 64:
        raise ValueError("chain size out of range (2..64)")
    labels = ("0",) + tuple(f"a{i}" for i in range(1, n - 1)) + ("1",)
    sums = [[i + j if i + j <= n - 1 else None for j in range(n)] for i in range(n)]
    report = validate_tables(labels, sums, 0, n - 1, name=f"CHAIN-{n}")
    assert report.ok, report.violations
    return report.algebra


def fixture(name: str) -> EffectAlgebra:
    if name == "E9":
        return load_algebra(E9_TEXT)
    if name == "E6":
        return load_algebra(E6_TEXT)
    if name.startswith("BOOL-"):
        try:
            k = int(name[5:])
        except ValueError:
            raise ValueError(f"bad fixture name {name!r}") from None
        return boolean_to_ea(k)
    if name.startswith("CHAIN-"):
        try:
            n = int(name[6:])
        except ValueError:
            raise ValueError(f"bad fixture name {name!r}") from None
        return _chain(n)
    raise ValueError(f"unknown fixture {name!r}")


def fixture_text(name: str) -> str:
    if name == "E9":
        return E9_TEXT
    if name == "E6":
        return E6_TEXT
    return emit_spec(fixture(name))
