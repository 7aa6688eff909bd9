import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from equinum import (
    Concept,
    NumberHandle,
    NumberRegistry,
    Universe,
    chain_phi,
    converse_phi,
    exists_phi,
    identity_phi,
    is_number,
    is_valid_projection,
    number_of,
    one,
    zero,
)
from equinum.cardinal import (
    EmptyUniverseError,
    ForeignConceptError,
    projects_onto_itself,
    projects_onto_nothing,
)

SYMBOLS = [f"o{i}" for i in range(8)]


@pytest.fixture
def reg():
    return NumberRegistry(Universe.build(SYMBOLS))


def c(reg, name, members):
    return reg.universe.concept(name, members)


def test_empty_concept_is_zero(reg):
    assert number_of(Concept("E"), reg) == NumberHandle(0)


def test_singletons_share_a_number(reg):
    assert number_of(c(reg, "F", ["o0"]), reg) == number_of(c(reg, "G", ["o1"]), reg)


def test_different_sizes_differ(reg):
    f, g = c(reg, "F", ["o0", "o1"]), c(reg, "G", ["o2"])
    assert exists_phi(f, g, brute_force=True)[0] is False
    assert number_of(f, reg) != number_of(g, reg)


def test_number_of_is_idempotent(reg):
    f = c(reg, "F", ["o0", "o3"])
    assert number_of(f, reg) == number_of(f, reg) == NumberHandle(2)
    assert reg.members[2] == {"F"}


def test_name_reuse_with_other_extension_rejected(reg):
    number_of(c(reg, "F", ["o0"]), reg)
    with pytest.raises(ValueError):
        number_of(c(reg, "F", ["o1"]), reg)


def test_foreign_concept_rejected(reg):
    other = Universe.build(["zz"])
    with pytest.raises(ForeignConceptError):
        number_of(other.concept("F", ["zz"]), reg)


def test_is_number(reg):
    assert not is_number(NumberHandle(7), reg)
    number_of(c(reg, "F", ["o0"]), reg)
    assert is_number(NumberHandle(1), reg)


@given(st.lists(st.frozensets(st.sampled_from(SYMBOLS)), max_size=15))
def test_registered_concepts_are_numbers(extensions):
    reg = NumberRegistry(Universe.build(SYMBOLS))
    for i, ext in enumerate(extensions):
        h = number_of(reg.universe.concept(f"C{i}", ext), reg)
        assert is_number(h, reg)


def test_zero(reg):
    assert zero(reg) == number_of(Concept("E"), reg)
    assert zero(reg) != number_of(c(reg, "F", ["o0"]), reg)
    assert identity_phi(Concept("E")).forward.pairs == frozenset()


def test_one(reg):
    assert one(reg) == number_of(c(reg, "F", ["o4"]), reg)
    assert one(reg) != zero(reg)
    a = reg.universe["o0"]
    single = Concept("S", {a})
    assert is_valid_projection(identity_phi(single), single, single)


def test_one_needs_an_object():
    with pytest.raises(EmptyUniverseError):
        one(NumberRegistry(Universe.build([])))


def test_object_level_readings(reg):
    u = reg.universe
    loop = u.relation([("o0", "o0"), ("o1", "o2")])
    assert projects_onto_itself(u["o0"], loop)
    assert not projects_onto_itself(u["o1"], loop)
    assert projects_onto_nothing(u["o5"], loop)
    assert not projects_onto_nothing(u["o2"], loop)


def test_zero_and_one_classes_are_exact(reg):
    u = reg.universe
    for k in range(3):
        for members in itertools.combinations(SYMBOLS, k):
            number_of(u.concept("c_" + "_".join(members), members), reg)
    z, o = zero(reg), one(reg)
    assert all(len(x) == 0 for x in reg.concepts(z))
    assert all(len(x) == 1 for x in reg.concepts(o))
    assert len(reg.concepts(o)) == len(SYMBOLS) + 1  # + the registry's own witness


@pytest.mark.parametrize("seed", range(20))
def test_registration_order_invariant(seed):
    rng = random.Random(seed)
    u = Universe.build(SYMBOLS)
    concepts = [u.concept(f"C{i}", rng.sample(SYMBOLS, rng.randint(0, 6))) for i in range(25)]
    r1, r2 = NumberRegistry(u), NumberRegistry(u)
    for x in concepts:
        number_of(x, r1)
    shuffled = concepts[:]
    rng.shuffle(shuffled)
    for x in shuffled:
        number_of(x, r2)
    assert r1.members == r2.members
    # classes partition the registered names
    names = [n for ms in r1.members.values() for n in ms]
    assert sorted(names) == sorted(x.name for x in concepts)
    assert all(r1.members.values())


def test_hume_exhaustive_small():
    syms = SYMBOLS[:5]
    u = Universe.build(syms)
    reg = NumberRegistry(u)
    cs = [
        u.concept("c" + "".join(m), m)
        for k in range(6)
        for m in itertools.combinations(syms, k)
    ]
    for f, g in itertools.product(cs, cs):
        assert (number_of(f, reg) == number_of(g, reg)) == exists_phi(f, g, brute_force=True)[0]


def _random_phi(rng, f, g):
    fs, gs = f.objects(), list(g.objects())
    a, b = gs[:], list(fs)
    rng.shuffle(a)
    rng.shuffle(b)
    from equinum import Correspondence, DirectedRelation

    return Correspondence(DirectedRelation(zip(fs, a)), DirectedRelation(zip(gs, b)))


@settings(max_examples=100)
@given(st.integers(0, 6), st.randoms(use_true_random=False))
def test_equivalence_law_witnesses(n, rng):
    u = Universe.build([f"{p}{i}" for p in "fgh" for i in range(n)])
    f, g, h = (u.concept(p.upper(), [f"{p}{i}" for i in range(n)]) for p in "fgh")
    phi1, phi2 = _random_phi(rng, f, g), _random_phi(rng, g, h)
    assert is_valid_projection(identity_phi(f), f, f)
    assert is_valid_projection(converse_phi(phi1), g, f)
    assert is_valid_projection(chain_phi(phi1, phi2), f, h)
