"""Finite-model engine for sameness of number via independent exclusive mappings."""

from .cardinal import (
    NumberHandle,
    NumberRegistry,
    chain_phi,
    converse_phi,
    identity_phi,
    is_number,
    number_of,
    one,
    zero,
)
from .dsl import DslError, UniverseDocument, parse_universe, serialize
from .equinumerosity import (
    CapExceededError,
    MalformedRestrictionError,
    count_phi,
    enumerate_phi,
    exists_phi,
    exists_phi_within,
    max_matching,
)
from .equivalence import (
    EquivalenceReport,
    bijection_exists,
    count_bijections,
    equivalence_report,
    find_nonreciprocal_phi,
)
from .laws import (
    is_exclusive,
    is_functional,
    is_injective_mapping,
    is_total_on,
    is_valid_binding,
    is_valid_projection,
)
from .model import (
    CardinalityMismatch,
    Concept,
    Correspondence,
    DeficiencySet,
    DirectedRelation,
    EquinumError,
    ObjectId,
    UndeclaredObjectError,
    Universe,
    Witness,
    compose,
    reverse,
)

__version__ = "0.1.0"
