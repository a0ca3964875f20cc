from zdgraph.algebra.semiring import (
    AxiomReport,
    FiniteSemiring,
    InvalidResult,
    MalformedTable,
    NonAssociative,
    OrderMismatch,
    is_additively_cancellative,
    is_commutative,
    is_entire,
    is_ring,
    nilpotent_index,
    validate,
)
from zdgraph.algebra.isomorphism import IsoWitness, are_isomorphic, canonical_form, find_isomorphism
from zdgraph.algebra.builders import (
    RingPresentation,
    boolean_semiring,
    catalog_ring,
    chain,
    direct_product,
    galois_field,
    modular_ring,
    presented_ring,
    t2,
)
from zdgraph.algebra.ambients import (
    ClosureOverflow,
    DimTooLarge,
    bool_matrix_ambient,
    generated_closure,
    lattice_matrix_ambient,
)
