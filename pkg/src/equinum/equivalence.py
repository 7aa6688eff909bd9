"""Cross-checking the projection, binding and bijection definitions of sameness of number."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from .equinumerosity import check_cap, count_phi, enumerate_phi, injections
from .laws import is_valid_binding, is_valid_projection
from .model import Concept, Correspondence, DirectedRelation, ObjectId, reverse

DEFINITIONS = ("projection", "binding", "bijection", "cardinality")


def _bijections(f: Concept, g: Concept):
    for b in injections(f, g):
        if b.targets() == g.extension:
            yield b


def bijection_exists(f: Concept, g: Concept) -> bool:
    """A single relation that is functional, exclusive, total on ``f`` and
    whose converse is total on ``g``."""
    return next(_bijections(f, g), None) is not None


def count_bijections(f: Concept, g: Concept, cap: Optional[int] = None) -> int:
    check_cap(f, g, cap)
    return sum(1 for _ in _bijections(f, g))


def find_nonreciprocal_phi(f: Concept, g: Concept) -> Optional[Correspondence]:
    """The first valid correspondence, in enumeration order, whose backward
    relation is not the converse of its forward one.

    That is the ordinal pairing forward and, backward, the ordinal pairing with
    its last two targets swapped. ``None`` when sizes differ or are below two.
    """
    n = len(f)
    if n != len(g) or n < 2:
        return None
    fs, gs = f.objects(), g.objects()
    forward = DirectedRelation(zip(fs, gs))
    back_targets = fs[:-2] + (fs[-1], fs[-2])
    phi = Correspondence(forward, DirectedRelation(zip(gs, back_targets)))
    assert is_valid_projection(phi, f, g) and not phi.is_reciprocal()
    return phi


def _exists_by_search(f, g, valid) -> bool:
    # independent search over both directions, each candidate checked by the facade
    backwards = list(injections(g, f))
    for forward in injections(f, g):
        for backward in backwards:
            if valid(Correspondence(forward, backward), f, g):
                return True
    return False


VERDICTS = {
    "projection": lambda f, g: _exists_by_search(f, g, is_valid_projection),
    "binding": lambda f, g: _exists_by_search(f, g, is_valid_binding),
    "bijection": bijection_exists,
    "cardinality": lambda f, g: len(f) == len(g),
}


def canonical_pair(size_f: int, size_g: int) -> Tuple[Concept, Concept]:
    """Disjoint fresh concepts ``F = {f0..}`` and ``G = {g0..}``."""
    fs = [ObjectId(f"f{i}", i) for i in range(size_f)]
    gs = [ObjectId(f"g{i}", size_f + i) for i in range(size_g)]
    return Concept("F", frozenset(fs)), Concept("G", frozenset(gs))


def random_pair_generator(seed: int) -> Callable[[int, int], Tuple[Concept, Concept]]:
    """Concepts of the requested sizes drawn from a shared, shuffled pool, so
    they may overlap."""
    rng = random.Random(seed)

    def make(size_f, size_g):
        pool = [ObjectId(f"o{i}", i) for i in range(size_f + size_g)]
        return (
            Concept("F", frozenset(rng.sample(pool, size_f))),
            Concept("G", frozenset(rng.sample(pool, size_g))),
        )

    return make


@dataclass
class Cell:
    size_f: int
    size_g: int
    verdicts: Dict[str, bool]

    @property
    def agrees(self) -> bool:
        return len(set(self.verdicts.values())) == 1


@dataclass
class Discrepancy:
    size_f: int
    size_g: int
    kind: str
    detail: Dict[str, object]


@dataclass
class EquivalenceReport:
    max_size: int
    cells: List[Cell] = field(default_factory=list)
    discrepancies: List[Discrepancy] = field(default_factory=list)
    phi_counts: List[int] = field(default_factory=list)
    bijection_counts: List[int] = field(default_factory=list)
    reciprocal_counts: List[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.discrepancies


def equivalence_report(
    max_size: int,
    make_pair: Callable[[int, int], Tuple[Concept, Concept]] = canonical_pair,
    cap: Optional[int] = None,
) -> EquivalenceReport:
    """Evaluate all four definitions for every pair of sizes up to ``max_size``.

    Counts per size come from full enumeration, each enumerated correspondence
    revalidated, and are compared with the closed forms.
    """
    if max_size < 0:
        raise ValueError("max_size must be non-negative")
    probe = Concept("probe", frozenset(ObjectId(f"p{i}", i) for i in range(max_size)))
    check_cap(probe, probe, cap)

    report = EquivalenceReport(max_size)
    for i in range(max_size + 1):
        for j in range(max_size + 1):
            f, g = make_pair(i, j)
            if (len(f), len(g)) != (i, j):
                report.discrepancies.append(
                    Discrepancy(i, j, "generator", {"size_f": len(f), "size_g": len(g)})
                )
            verdicts = {name: VERDICTS[name](f, g) for name in DEFINITIONS}
            cell = Cell(i, j, verdicts)
            report.cells.append(cell)
            if not cell.agrees:
                # the definitions in the minority are the offending ones
                majority = sum(verdicts.values()) * 2 > len(verdicts)
                offending = [k for k, v in verdicts.items() if v != majority]
                report.discrepancies.append(
                    Discrepancy(i, j, "verdict", {"definitions": offending, "verdicts": dict(verdicts)})
                )

    for n in range(max_size + 1):
        f, g = make_pair(n, n)
        phis = reciprocal = 0
        for phi in enumerate_phi(f, g, cap=cap):
            if not (is_valid_projection(phi, f, g) and is_valid_binding(phi, f, g)):
                report.discrepancies.append(
                    Discrepancy(n, n, "invalid-enumerated", {"phi": phi})
                )
            phis += 1
            reciprocal += phi.backward == reverse(phi.forward)
        bijections = count_bijections(f, g, cap=cap)
        report.phi_counts.append(phis)
        report.bijection_counts.append(bijections)
        report.reciprocal_counts.append(reciprocal)
        if phis != count_phi(f, g):
            report.discrepancies.append(
                Discrepancy(n, n, "phi-count", {"enumerated": phis, "closed_form": count_phi(f, g)})
            )
        if reciprocal != bijections:
            report.discrepancies.append(
                Discrepancy(n, n, "reciprocal-count", {"reciprocal": reciprocal, "bijections": bijections})
            )
    return report
