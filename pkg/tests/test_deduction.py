import pytest

from unsharp import (
    Subset,
    atoms,
    characterization_agreement,
    characterize,
    ded_lattice,
    enumerate_ded,
    fixture,
    generate,
    is_deductive_system,
)

from conftest import idx


def members(E, *labs):
    return E.subset(*(idx(E, lab) for lab in labs))


def test_e9_counts_and_atoms(e9):
    systems = enumerate_ded(e9)
    assert len(systems) == 28
    rendered = {e9.render(d.members) for d in atoms(e9)}
    assert rendered == {"{a,1}", "{b,1}", "{c,1}", "{e,1}", "{f,1}", "{g,1}"}


def test_e6_counts(e6):
    assert len(enumerate_ded(e6)) == 10
    assert len(atoms(e6)) == 4


def test_self_complementary_element_cannot_join(e9):
    # {1,d} fails closure: d -> 0 = {d} lies inside, yet 0 is missing
    res = is_deductive_system(e9, members(e9, "d", "1"))
    assert not res.holds
    assert res.witness == (idx(e9, "d"), e9.zero)


def test_one_is_mandatory(e9):
    res = is_deductive_system(e9, members(e9, "a", "b"))
    assert not res.holds and res.witness == ("one",)


def test_characterization_preconditions(e9):
    with pytest.raises(ValueError):
        characterize(e9, members(e9, "a"))
    with pytest.raises(ValueError):
        characterize(e9, e9.full_set())


def test_characterization_agrees_with_brute_force(fixture_algebras):
    for E in fixture_algebras:
        res = characterization_agreement(E)
        assert res.holds, (E.name, res.witness)


def test_generate(e9):
    assert generate(e9, members(e9, "a", "g")) == e9.full_set()
    assert generate(e9, members(e9, "0")) == e9.full_set()
    assert generate(e9, members(e9, "a")) == members(e9, "a", "1")
    assert generate(e9, members(e9, "a", "b", "c")) == members(e9, "a", "b", "c", "1")
    assert generate(e9, Subset.empty(9)) == members(e9, "1")
    # every generated set really is a deductive system
    for labs in (("a",), ("a", "b"), ("e", "c"), ()):
        assert is_deductive_system(e9, generate(e9, members(e9, *labs))).holds


def test_all_enumerated_really_are_systems(e9, e6):
    for E in (e9, e6):
        systems = enumerate_ded(E)
        assert len({d.members.bits for d in systems}) == len(systems)
        for d in systems:
            assert is_deductive_system(E, d.members).holds
        # and nothing outside the list sneaks through (full sweep)
        count = sum(
            is_deductive_system(E, Subset(mask, E.n)).holds
            for mask in range(1 << E.n)
        )
        assert count == len(systems)


def test_lattice_meets_and_joins(e9):
    lat = ded_lattice(e9)
    systems = lat.systems
    pos = {d.members.bits: i for i, d in enumerate(systems)}
    ag = members(e9, "a", "1")
    bf = members(e9, "b", "1")
    i, j = pos[ag.bits], pos[bf.bits]
    met = systems[lat.meet(i, j)]
    assert met.members == members(e9, "1")
    joined = systems[lat.join(i, j)]
    assert joined.members == members(e9, "a", "b", "1")
    assert lat.leq(pos[members(e9, "1").bits], i)


def test_completeness_exhaustive_on_e6(e6):
    rep = ded_lattice(e6).check_completeness()
    assert rep.ok and rep.exhaustive
    assert rep.families_checked == 1 << 10


def test_completeness_sampled_on_e9(e9):
    rep = ded_lattice(e9).check_completeness(samples=200, seed=1)
    assert rep.ok and not rep.exhaustive
