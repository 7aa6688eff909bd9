"""Immutable value types: objects, universes, concepts, relations, correspondences
and the certificates returned by the decision procedures.

Objects are interned by a :class:`Universe` and carry their declaration ordinal,
so every ordering in the package (enumeration, serialization, reports) is by
ordinal and therefore deterministic.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Optional, Tuple, Union


class EquinumError(Exception):
    """Base class for all errors raised by this package."""


class UndeclaredObjectError(EquinumError, ValueError):
    """A value references an object that its universe does not declare."""


class DuplicateNameError(EquinumError, ValueError):
    pass


@functools.total_ordering
@dataclass(frozen=True)
class ObjectId:
    symbol: str
    ordinal: int

    def __lt__(self, other):
        if not isinstance(other, ObjectId):
            return NotImplemented
        return (self.ordinal, self.symbol) < (other.ordinal, other.symbol)

    def __repr__(self):
        return self.symbol


Pair = Tuple[ObjectId, ObjectId]


@dataclass(frozen=True)
class Concept:
    name: str
    extension: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "extension", frozenset(self.extension))

    def __len__(self):
        return len(self.extension)

    def __iter__(self) -> Iterator[ObjectId]:
        return iter(sorted(self.extension))

    def __contains__(self, obj):
        return obj in self.extension

    def objects(self) -> Tuple[ObjectId, ...]:
        """Members in ordinal order."""
        return tuple(sorted(self.extension))


@dataclass(frozen=True)
class DirectedRelation:
    """A finite set of ordered ``(source, target)`` pairs."""

    pairs: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "pairs", frozenset(self.pairs))

    def __len__(self):
        return len(self.pairs)

    def __iter__(self) -> Iterator[Pair]:
        return iter(self.sorted_pairs())

    def __contains__(self, pair):
        return pair in self.pairs

    def sorted_pairs(self) -> Tuple[Pair, ...]:
        return tuple(sorted(self.pairs))

    def sources(self) -> frozenset:
        return frozenset(s for s, _ in self.pairs)

    def targets(self) -> frozenset:
        return frozenset(t for _, t in self.pairs)

    def objects(self) -> frozenset:
        return self.sources() | self.targets()

    def image(self, obj: ObjectId) -> frozenset:
        return frozenset(t for s, t in self.pairs if s == obj)


@dataclass(frozen=True)
class Correspondence:
    """A forward relation (F to G) and an independently stored backward one (G to F).

    Nothing links the two directions; whether they form a valid correspondence
    is decided by :func:`equinum.laws.is_valid_projection`.
    """

    forward: DirectedRelation = field(default_factory=DirectedRelation)
    backward: DirectedRelation = field(default_factory=DirectedRelation)

    def objects(self) -> frozenset:
        return self.forward.objects() | self.backward.objects()

    def is_reciprocal(self) -> bool:
        return self.backward == reverse(self.forward)


def reverse(r: DirectedRelation) -> DirectedRelation:
    return DirectedRelation((t, s) for s, t in r.pairs)


def compose(r: DirectedRelation, s: DirectedRelation) -> DirectedRelation:
    """Relational composition: ``(x, z)`` whenever ``(x, y) in r`` and ``(y, z) in s``."""
    by_source = {}
    for y, z in s.pairs:
        by_source.setdefault(y, []).append(z)
    return DirectedRelation(
        (x, z) for x, y in r.pairs for z in by_source.get(y, ())
    )


# Certificates


@dataclass(frozen=True)
class Witness:
    forward: DirectedRelation
    backward: DirectedRelation

    @classmethod
    def of(cls, phi: Correspondence) -> "Witness":
        return cls(phi.forward, phi.backward)

    @property
    def correspondence(self) -> Correspondence:
        return Correspondence(self.forward, self.backward)


@dataclass(frozen=True)
class CardinalityMismatch:
    size_f: int
    size_g: int


@dataclass(frozen=True)
class DeficiencySet:
    """Objects on one side (``"F"`` or ``"G"``) with fewer allowed partners than members."""

    side: str
    objects: frozenset

    def __post_init__(self):
        if self.side not in ("F", "G"):
            raise ValueError(f"side must be 'F' or 'G', got {self.side!r}")
        object.__setattr__(self, "objects", frozenset(self.objects))


Certificate = Union[Witness, CardinalityMismatch, DeficiencySet]


@dataclass(frozen=True, eq=True)
class Universe:
    """Declared objects plus named concepts and relations over them.

    Construction validates that every referenced object is declared. Use
    :meth:`build` to create one from plain symbols.
    """

    objects: Tuple[ObjectId, ...] = ()
    concepts: Mapping[str, Concept] = field(default_factory=dict)
    relations: Mapping[str, DirectedRelation] = field(default_factory=dict)
    name: Optional[str] = None

    def __post_init__(self):
        objects = tuple(self.objects)
        symbols = [o.symbol for o in objects]
        if len(set(symbols)) != len(symbols):
            raise DuplicateNameError("duplicate object symbol in universe")
        for i, obj in enumerate(objects):
            if obj.ordinal != i:
                raise ValueError(
                    f"object {obj.symbol!r} has ordinal {obj.ordinal}, expected {i}"
                )
        object.__setattr__(self, "objects", objects)
        object.__setattr__(self, "_by_symbol", {o.symbol: o for o in objects})
        concepts = dict(self.concepts)
        relations = dict(self.relations)
        for key, c in concepts.items():
            if key != c.name:
                raise ValueError(f"concept registered as {key!r} is named {c.name!r}")
            self.check(c)
        for r in relations.values():
            self.check(r)
        object.__setattr__(self, "concepts", MappingProxyType(concepts))
        object.__setattr__(self, "relations", MappingProxyType(relations))

    def __eq__(self, other):
        if not isinstance(other, Universe):
            return NotImplemented
        return (
            self.name == other.name
            and self.objects == other.objects
            and dict(self.concepts) == dict(other.concepts)
            and dict(self.relations) == dict(other.relations)
        )

    __hash__ = None

    @classmethod
    def build(cls, symbols: Iterable[str], concepts=None, relations=None, name=None):
        """Create a universe from symbols.

        ``concepts`` maps names to iterables of symbols, ``relations`` maps names
        to iterables of ``(source, target)`` symbol pairs.
        """
        objects = tuple(ObjectId(s, i) for i, s in enumerate(symbols))
        u = cls(objects, name=name)
        cs = {n: u.concept(n, m) for n, m in (concepts or {}).items()}
        rs = {n: u.relation(p) for n, p in (relations or {}).items()}
        return cls(objects, cs, rs, name=name)

    def __getitem__(self, symbol: str) -> ObjectId:
        try:
            return self._by_symbol[symbol]
        except KeyError:
            raise UndeclaredObjectError(f"undeclared object {symbol!r}") from None

    def declares(self, obj: ObjectId) -> bool:
        return self._by_symbol.get(obj.symbol) == obj

    def check(self, value):
        """Raise :class:`UndeclaredObjectError` unless every object in ``value`` is declared."""
        if isinstance(value, ObjectId):
            found = [value]
        elif isinstance(value, Concept):
            found = value.extension
        elif isinstance(value, (DirectedRelation, Correspondence)):
            found = value.objects()
        else:
            raise TypeError(f"cannot check {type(value).__name__}")
        for obj in sorted(found):
            if not self.declares(obj):
                raise UndeclaredObjectError(f"object {obj.symbol!r} is not declared")
        return value

    def concept(self, name: str, symbols: Iterable[str]) -> Concept:
        return Concept(name, frozenset(self[s] for s in symbols))

    def relation(self, pairs: Iterable[Tuple[str, str]]) -> DirectedRelation:
        return DirectedRelation((self[s], self[t]) for s, t in pairs)

    def correspondence(self, forward, backward) -> Correspondence:
        return Correspondence(self.relation(forward), self.relation(backward))

    def with_concept(self, concept: Concept) -> "Universe":
        if concept.name in self.concepts:
            raise DuplicateNameError(f"concept {concept.name!r} already declared")
        return Universe(
            self.objects, {**self.concepts, concept.name: concept}, self.relations, self.name
        )

    def with_relation(self, name: str, relation: DirectedRelation) -> "Universe":
        if name in self.relations:
            raise DuplicateNameError(f"relation {name!r} already declared")
        return Universe(
            self.objects, self.concepts, {**self.relations, name: relation}, self.name
        )
