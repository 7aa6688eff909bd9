"""Numbers as equivalence classes of concepts under equinumerosity."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Optional

from .equinumerosity import exists_phi
from .laws import is_valid_projection
from .model import (
    Concept,
    Correspondence,
    DirectedRelation,
    EquinumError,
    ObjectId,
    Universe,
    compose,
    reverse,
)


class EmptyUniverseError(EquinumError):
    pass


class ForeignConceptError(EquinumError, ValueError):
    """A concept's objects are not declared by the registry's universe."""


@dataclass(frozen=True, order=True)
class NumberHandle:
    class_id: int


class NumberRegistry:
    """Partition of registered concepts into equinumerosity classes.

    Membership of a new concept is decided by :func:`exists_phi` against one
    representative per class. The class identifier is the shared size.
    Registration mutates the registry and must be serialized by the caller.
    """

    def __init__(self, universe: Universe):
        self.universe = universe
        self.members: Dict[int, set] = {}
        self._representatives: Dict[int, Concept] = {}
        self._registered: Dict[str, Concept] = {}

    def __contains__(self, name):
        return name in self._registered

    def class_of(self, name: str) -> Optional[NumberHandle]:
        for class_id, names in self.members.items():
            if name in names:
                return NumberHandle(class_id)
        return None

    def register(self, f: Concept) -> NumberHandle:
        try:
            self.universe.check(f)
        except EquinumError as exc:
            raise ForeignConceptError(f"concept {f.name!r}: {exc}") from None
        known = self._registered.get(f.name)
        if known is not None:
            if known != f:
                raise ValueError(f"concept name {f.name!r} already registered with another extension")
            return self.class_of(f.name)
        for class_id, rep in self._representatives.items():
            if exists_phi(f, rep)[0]:
                break
        else:
            class_id = len(f)
            self._representatives[class_id] = f
            self.members[class_id] = set()
        self.members[class_id].add(f.name)
        self._registered[f.name] = f
        return NumberHandle(class_id)

    def concepts(self, handle: NumberHandle):
        return [self._registered[n] for n in sorted(self.members.get(handle.class_id, ()))]


def number_of(f: Concept, reg: NumberRegistry) -> NumberHandle:
    return reg.register(f)


def is_number(n: NumberHandle, reg: NumberRegistry) -> bool:
    """True iff some registered concept has ``n`` as its number."""
    return bool(reg.members.get(n.class_id))


def identity_phi(f: Concept) -> Correspondence:
    """Reflexivity witness: every object of ``f`` projects onto itself."""
    ident = DirectedRelation((x, x) for x in f.extension)
    return Correspondence(ident, ident)


def converse_phi(phi: Correspondence) -> Correspondence:
    """Symmetry witness: a valid F-to-G correspondence read as G-to-F."""
    return Correspondence(phi.backward, phi.forward)


def chain_phi(first: Correspondence, second: Correspondence) -> Correspondence:
    """Transitivity witness from F~G and G~H: compose the forward maps F->G->H
    and the backward maps H->G->F."""
    return Correspondence(
        compose(first.forward, second.forward), compose(second.backward, first.backward)
    )


ZERO_NAME = "zero"
ONE_NAME = "one"


def zero(reg: NumberRegistry) -> NumberHandle:
    empty = Concept(ZERO_NAME, frozenset())
    # the canonical relation of the empty concept projects nothing
    assert identity_phi(empty).forward == DirectedRelation()
    return number_of(empty, reg)


def one(reg: NumberRegistry) -> NumberHandle:
    if not reg.universe.objects:
        raise EmptyUniverseError("the universe declares no object to witness one")
    a = reg.universe.objects[0]
    single = Concept(ONE_NAME, frozenset([a]))
    if not is_valid_projection(identity_phi(single), single, single):
        raise AssertionError("self-loop correspondence over a singleton is invalid")
    return number_of(single, reg)


def projects_onto_itself(obj: ObjectId, r: DirectedRelation) -> bool:
    """Object-level reading of one: ``obj`` projects onto itself and onto
    nothing else, and nothing else projects onto it."""
    touching = {(s, t) for s, t in r.pairs if s == obj or t == obj}
    return touching == {(obj, obj)}


def projects_onto_nothing(obj: ObjectId, r: DirectedRelation) -> bool:
    """Object-level reading of zero: no projection from ``obj``, hence no reflection."""
    return not r.image(obj) and not reverse(r).image(obj)
