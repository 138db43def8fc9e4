"""Finite posets, bounded distributive lattices, and finite Priestley
duality, with the order-relation functor and its image characterization."""

from .errors import (
    AntisymmetryViolation,
    CapExceeded,
    DegenerateBounds,
    EmptyPosetError,
    InternalError,
    NotALattice,
    NotDistributive,
    NotHomomorphism,
    NotOrderPreserving,
    OrdlatError,
    ParseError,
    Unbounded,
)
from .poset import (
    IsoWitness,
    Poset,
    antichain,
    canonical_form,
    canonical_key,
    chain,
    cube,
    disjoint_union,
    down_sets,
    enumerate_posets,
    is_connected,
    is_isomorphic,
    order_dimension,
    poset_new,
    product,
    width,
)
from .lattice import (
    DistLattice,
    LatticeHom,
    enumerate_homs,
    hom_new,
    identity_hom,
    join_irreducibles,
    lattice_from_poset,
    make_lattice,
)
from .duality import (
    PrimeIdeal,
    SpectrumMap,
    clopen_downset_lattice,
    e_hom,
    is_filter,
    is_ideal,
    is_prime_ideal,
    prime_ideals,
    spec,
    spec_hom,
    unit_lattice,
    unit_space,
)
from .relation import (
    FactorWitness,
    FixedPointReport,
    cube_shift_check,
    dimension_report,
    factor_by_two,
    find_fixed_points,
    relation_downset_iso,
    relation_hom,
    relation_image_witness,
    relation_lattice,
    relation_poset,
    relation_prime_ideals,
    verify_relation_primes,
)

__all__ = [name for name in dir() if not name.startswith("_")]
