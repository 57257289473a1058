"""Tableau model for the irreducible representations of G2.

Vector tableaux labelled by the weights of the 7-dimensional representation,
their relation spaces closed under the Lie algebra, the resulting quotients,
and the oracles (Weyl, Freudenthal, branching to the long-root A2) used to
certify them.
"""

from .action import (
    GeneratorLabel,
    apply_generator,
    generator_matrix,
    invariant_form_matrix,
    orthogonal_invariant,
)
from .branching import (
    BranchTable,
    BranchingCheck,
    branch_multiplicity,
    branch_table,
    hw_tableaux_counts,
    repaired_multiplicity,
    restrict_character,
    verify_branching,
)
from .formal import FormalSum, MixedShapes
from .linalg import DEFAULT_MODULUS, SECOND_MODULUS, PrimeField, RationalField, make_field
from .relations import (
    CONSISTENT_FAMILIES,
    FAMILIES,
    Certificate,
    CertificateMissing,
    RelationBasis,
    basis_certificate,
    lie_closure,
    quotient_dimension,
    quotient_model,
    relation_basis,
    relation_rank,
    straighten,
    weight_graded_dims,
)
from .reptheory import (
    HighestWeight,
    character_counts,
    dim_gl,
    dim_gl3,
    freudenthal,
    weight_multiplicities,
    weyl_dim_g2,
    weyl_dim_g2_closed,
)
from .tableau import (
    Shape,
    Tableau,
    enumerate_fillings,
    enumerate_g2,
    enumerate_semistandard,
    is_g2_tableau,
    is_semistandard,
    weight_of,
)
from .weights import (
    G2,
    Entry,
    VClass,
    Weight,
    compare,
    entry_weight,
    inner,
    negate_entry,
    simple_reflection,
    to_fundamental,
    vclass,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
