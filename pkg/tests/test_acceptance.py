"""Exit criteria. Each test carries an ``acceptance`` marker; the conftest
prints one PASS/FAIL line per criterion after the run."""

import io
import itertools
import json
import math
import random
import time

import pytest

from equinum import (
    Concept,
    Correspondence,
    DeficiencySet,
    DirectedRelation,
    NumberRegistry,
    Universe,
    Witness,
    chain_phi,
    converse_phi,
    count_bijections,
    count_phi,
    enumerate_phi,
    equivalence_report,
    exists_phi,
    exists_phi_within,
    find_nonreciprocal_phi,
    identity_phi,
    is_valid_projection,
    number_of,
    one,
    parse_universe,
    reverse,
    serialize,
    zero,
)
from equinum.cli import run_cli
from equinum.equivalence import canonical_pair

import oracles
from docgen import random_document


@pytest.mark.acceptance(1, "definitional agreement for |F|,|G| <= 5 (0 discrepancies, < 10 s)")
def test_definitional_agreement():
    start = time.perf_counter()
    report = equivalence_report(5)
    elapsed = time.perf_counter() - start
    assert len(report.cells) == 36
    assert report.discrepancies == []
    for cell in report.cells:
        assert set(cell.verdicts.values()) == {cell.size_f == cell.size_g}
    assert elapsed < 10.0, f"took {elapsed:.2f} s"


@pytest.mark.acceptance(2, "multiplicity: (n!)^2 correspondences and n! bijections for n <= 4")
def test_multiplicity():
    expected_phi = [1, 1, 4, 36, 576]
    expected_bij = [1, 1, 2, 6, 24]
    for n in range(5):
        f, g = canonical_pair(n, n)
        assert math.factorial(n) ** 2 == expected_phi[n] == count_phi(f, g)
        assert len(list(enumerate_phi(f, g))) == expected_phi[n]
        assert math.factorial(n) == expected_bij[n] == count_bijections(f, g)
    # enumeration oracle independent of the package search, for n <= 3
    for n in range(4):
        f, g = canonical_pair(n, n)
        assert oracles.count_correspondences(f, g) == expected_phi[n]
        assert oracles.count_bijections(f, g) == expected_bij[n]


@pytest.mark.acceptance(3, "non-reciprocal correspondence exists for n in {2,3,4}, absent for {0,1}")
def test_nonreciprocity():
    for n in (2, 3, 4):
        f, g = canonical_pair(n, n)
        phi = find_nonreciprocal_phi(f, g)
        assert phi is not None
        assert is_valid_projection(phi, f, g)
        assert phi.backward != reverse(phi.forward)
    for n in (0, 1):
        assert find_nonreciprocal_phi(*canonical_pair(n, n)) is None


@pytest.mark.acceptance(4, "Hume's principle on 1000 random registered pairs (sizes <= 6)")
def test_hume_principle():
    rng = random.Random(20261019)
    symbols = [f"o{i}" for i in range(12)]
    u = Universe.build(symbols)
    reg = NumberRegistry(u)
    mismatches = 0
    for k in range(1000):
        f = u.concept(f"F{k}", rng.sample(symbols, rng.randint(0, 6)))
        g = u.concept(f"G{k}", rng.sample(symbols, rng.randint(0, 6)))
        same_number = number_of(f, reg) == number_of(g, reg)
        mismatches += same_number != exists_phi(f, g, brute_force=True)[0]
    assert mismatches == 0


@pytest.mark.acceptance(5, "zero and one")
def test_zero_and_one():
    u = Universe.build(["a", "b"])
    reg = NumberRegistry(u)
    assert zero(reg) == number_of(Concept("empty"), reg)
    assert one(reg) == number_of(u.concept("single", ["b"]), reg)
    single = u.concept("A", ["a"])
    loop = u.correspondence([("a", "a")], [("a", "a")])
    assert is_valid_projection(loop, single, single)
    assert zero(reg) != one(reg)


def _check_within(f, g, allowed_pairs):
    allowed = DirectedRelation(allowed_pairs)
    ok, cert = exists_phi_within(f, g, allowed)
    if ok != oracles.exists_within(f, g, allowed_pairs):
        return False
    if isinstance(cert, Witness):
        return (
            is_valid_projection(cert.correspondence, f, g)
            and cert.forward.pairs <= allowed.pairs
            and reverse(cert.backward).pairs <= allowed.pairs
        )
    if isinstance(cert, DeficiencySet):
        return oracles.hall_violated(cert.objects, allowed_pairs, cert.side)
    return len(f) != len(g)


@pytest.mark.acceptance(6, "restricted mode agrees with brute force (exhaustive <= 4, 500 random <= 7, < 60 s)")
def test_restricted_mode_oracle():
    start = time.perf_counter()
    disagreements = 0
    checked = 0
    for p, q in itertools.product(range(5), repeat=2):
        f, g = canonical_pair(p, q)
        grid = list(itertools.product(f.objects(), g.objects()))
        for mask in range(1 << len(grid)):
            pairs = frozenset(grid[i] for i in range(len(grid)) if mask >> i & 1)
            disagreements += not _check_within(f, g, pairs)
            checked += 1
    rng = random.Random(7)
    for _ in range(500):
        p = rng.randint(0, 7)
        q = p if rng.random() < 0.8 else rng.randint(0, 7)
        f, g = canonical_pair(p, q)
        density = rng.uniform(0.1, 0.6)
        pairs = frozenset(
            (s, t) for s in f.objects() for t in g.objects() if rng.random() < density
        )
        disagreements += not _check_within(f, g, pairs)
        checked += 1
    elapsed = time.perf_counter() - start
    assert disagreements == 0
    assert checked == sum(2 ** (p * q) for p in range(5) for q in range(5)) + 500
    assert elapsed < 60.0, f"took {elapsed:.2f} s"


def _random_valid_phi(rng, f, g):
    fs, gs = list(f.objects()), list(g.objects())
    return Correspondence(
        DirectedRelation(zip(fs, rng.sample(gs, len(gs)))),
        DirectedRelation(zip(gs, rng.sample(fs, len(fs)))),
    )


@pytest.mark.acceptance(7, "reflexivity/symmetry/transitivity witnesses on 500 random pairs")
def test_equivalence_laws():
    rng = random.Random(11)
    failures = 0
    for _ in range(500):
        n = rng.randint(0, 6)
        pool = [f"o{i}" for i in range(3 * n + 2)]
        u = Universe.build(pool)
        f, g, h = (u.concept(name, rng.sample(pool, n)) for name in "FGH")
        phi1, phi2 = _random_valid_phi(rng, f, g), _random_valid_phi(rng, g, h)
        assert is_valid_projection(phi1, f, g) and is_valid_projection(phi2, g, h)
        failures += not is_valid_projection(identity_phi(f), f, f)
        failures += not is_valid_projection(converse_phi(phi1), g, f)
        failures += not is_valid_projection(chain_phi(phi1, phi2), f, h)
    assert failures == 0


BAD_DOCUMENTS = [
    "concept F = { z }",
    "object a\nconcept F = { a z }",
    "object a a",
    "object a\nconcept F = { a }\nconcept F = { a }",
    "object a\nrelation R = { (a,b) }",
    "object a\nconcept F { a }",
    "object a\nrelation R = { (a a) }",
    "object a\nconcept F = { a",
    "thing a",
    "object a$",
]


@pytest.mark.acceptance(8, "DSL round-trip on 200 documents; errors located with exit code 2")
def test_dsl_round_trip(tmp_path):
    rng = random.Random(8)
    for _ in range(200):
        text = random_document(rng)
        u1 = parse_universe(text).universe
        u2 = parse_universe(serialize(u1)).universe
        assert u1 == u2
    for i, text in enumerate(BAD_DOCUMENTS):
        path = tmp_path / f"bad{i}.txt"
        path.write_text(text)
        out = io.StringIO()
        code = run_cli(["fmt", str(path)], stdout=out, stderr=io.StringIO())
        assert code == 2
        [diag] = json.loads(out.getvalue())["diagnostics"]
        assert diag["line"] >= 1 and diag["column"] >= 1 and diag["kind"] in ("syntax", "semantic")
