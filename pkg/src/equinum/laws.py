"""Decidable relational laws for projection/reflection and for binding.

Both vocabularies obey laws of the same logical shape, so a single kernel
(:func:`_is_valid_correspondence`) backs the two public facades
:func:`is_valid_projection` and :func:`is_valid_binding`.
"""

from __future__ import annotations

from .model import Concept, Correspondence, DirectedRelation


def is_functional(r: DirectedRelation) -> bool:
    """No source is related to two distinct targets."""
    seen = {}
    for s, t in r.pairs:
        if seen.setdefault(s, t) != t:
            return False
    return True


def is_exclusive(r: DirectedRelation) -> bool:
    """No target receives two distinct sources."""
    seen = {}
    for s, t in r.pairs:
        if seen.setdefault(t, s) != s:
            return False
    return True


def is_total_on(r: DirectedRelation, c: Concept) -> bool:
    return c.extension <= r.sources()


def is_injective_mapping(r: DirectedRelation, source: Concept, target: Concept) -> bool:
    """``r`` is a total, functional, exclusive mapping from ``source`` into ``target``."""
    return (
        is_functional(r)
        and is_exclusive(r)
        and is_total_on(r, source)
        and r.sources() <= source.extension
        and r.targets() <= target.extension
    )


def _is_valid_correspondence(phi: Correspondence, f: Concept, g: Concept) -> bool:
    # backward is deliberately not compared with reverse(forward)
    return is_injective_mapping(phi.forward, f, g) and is_injective_mapping(
        phi.backward, g, f
    )


def is_valid_projection(phi: Correspondence, f: Concept, g: Concept) -> bool:
    """Every F-object projects exclusively onto some G-object, and every
    G-object exclusively onto some F-object, through independent relations."""
    return _is_valid_correspondence(phi, f, g)


def is_valid_binding(phi: Correspondence, f: Concept, g: Concept) -> bool:
    """The stringTo/stringFrom reading of :func:`is_valid_projection`."""
    return _is_valid_correspondence(phi, f, g)


def law_violations(r: DirectedRelation):
    """Pairs of pairs that break functionality or exclusivity, in ordinal order.

    Returns a list of ``(law, first_pair, second_pair)`` tuples; empty when
    ``r`` is both functional and exclusive.
    """
    out = []
    by_source, by_target = {}, {}
    for s, t in r.sorted_pairs():
        if s in by_source:
            out.append(("functional", by_source[s], (s, t)))
        else:
            by_source[s] = (s, t)
        if t in by_target:
            out.append(("exclusive", by_target[t], (s, t)))
        else:
            by_target[t] = (s, t)
    return out
