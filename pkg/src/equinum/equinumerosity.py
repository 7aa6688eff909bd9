"""Deciding, enumerating, counting and certifying correspondences between concepts."""

from __future__ import annotations

import math
from typing import Iterator, Optional, Tuple

from .laws import is_valid_projection
from .matching import HopcroftKarp, max_matching  # noqa: F401  (re-export)
from .model import (
    CardinalityMismatch,
    Certificate,
    Concept,
    Correspondence,
    DeficiencySet,
    DirectedRelation,
    EquinumError,
    Witness,
    reverse,
)

DEFAULT_ENUM_CAP = 6


class CapExceededError(EquinumError):
    """A concept is larger than the configured enumeration cap."""


class MalformedRestrictionError(EquinumError, ValueError):
    pass


def check_cap(f: Concept, g: Concept, cap: Optional[int]) -> None:
    cap = DEFAULT_ENUM_CAP if cap is None else cap
    if len(f) > cap or len(g) > cap:
        raise CapExceededError(
            f"concept sizes {len(f)} and {len(g)} exceed the enumeration cap {cap}"
        )


def injections(source: Concept, target: Concept) -> Iterator[DirectedRelation]:
    """Every total injective mapping from ``source`` into ``target``.

    Backtracking over sources in ordinal order, trying targets in ordinal
    order, so the stream is lexicographic in the sorted pair lists.
    """
    sources = source.objects()
    targets = target.objects()
    if len(sources) > len(targets):
        return
    chosen = []
    used = set()

    def extend(i):
        if i == len(sources):
            yield DirectedRelation(zip(sources, chosen))
            return
        for t in targets:
            if t in used:
                continue
            used.add(t)
            chosen.append(t)
            yield from extend(i + 1)
            chosen.pop()
            used.discard(t)

    yield from extend(0)


def _validated(phi: Correspondence, f: Concept, g: Concept) -> Witness:
    if not is_valid_projection(phi, f, g):
        raise AssertionError(f"constructed witness failed validation: {phi}")
    return Witness.of(phi)


def _search_phi(f: Concept, g: Concept) -> Optional[Correspondence]:
    forward = next(injections(f, g), None)
    if forward is None:
        return None
    backward = next(injections(g, f), None)
    if backward is None:
        return None
    return Correspondence(forward, backward)


def exists_phi(f: Concept, g: Concept, brute_force: bool = False) -> Tuple[bool, Certificate]:
    """Decide whether some valid correspondence links ``f`` and ``g``.

    The default path compares sizes and pairs members by ordinal. With
    ``brute_force`` the injections are searched for instead.
    """
    if brute_force:
        phi = _search_phi(f, g)
        if phi is None:
            return False, CardinalityMismatch(len(f), len(g))
        return True, _validated(phi, f, g)
    if len(f) != len(g):
        return False, CardinalityMismatch(len(f), len(g))
    forward = DirectedRelation(zip(f.objects(), g.objects()))
    return True, _validated(Correspondence(forward, reverse(forward)), f, g)


def enumerate_phi(f: Concept, g: Concept, cap: Optional[int] = None) -> Iterator[Correspondence]:
    """Every valid correspondence exactly once, ordered by (forward, backward)."""
    check_cap(f, g, cap)
    return _enumerate(f, g)


def _enumerate(f, g):
    backwards = list(injections(g, f))
    if not backwards:
        return
    for forward in injections(f, g):
        for backward in backwards:
            yield Correspondence(forward, backward)


def count_phi(f: Concept, g: Concept) -> int:
    if len(f) != len(g):
        return 0
    return math.factorial(len(f)) ** 2


def exists_phi_within(
    f: Concept, g: Concept, allowed: DirectedRelation
) -> Tuple[bool, Certificate]:
    """Like :func:`exists_phi`, but forward pairs must come from ``allowed`` and
    backward pairs from its converse. The two directions are matched
    independently.

    A failure is certified by a Hall violator: a set of objects on the blocking
    side whose allowed partners are fewer than its members.
    """
    for s, t in allowed.sorted_pairs():
        if s not in f.extension or t not in g.extension:
            raise MalformedRestrictionError(
                f"allowed pair ({s!r}, {t!r}) is not in {f.name} x {g.name}"
            )
    if len(f) != len(g):
        return False, CardinalityMismatch(len(f), len(g))

    fw = HopcroftKarp(f.extension, g.extension, allowed)
    forward = fw.run()
    if len(forward) < len(f):
        return False, DeficiencySet("F", fw.deficiency())
    bw = HopcroftKarp(g.extension, f.extension, reverse(allowed))
    backward = bw.run()
    if len(backward) < len(g):
        return False, DeficiencySet("G", bw.deficiency())
    return True, _validated(Correspondence(forward, backward), f, g)
