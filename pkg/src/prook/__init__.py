"""prook: exact computations in the planar rook monoid and the tensor
representations it centralizes.

The package provides, over exact rational and Laurent-polynomial arithmetic:

* the planar rook monoid (diagrams, composition, enumeration) and its
  algebra with the matrix-unit calculus;
* the subset modules of the algebra with irreducibility and semisimplicity
  certificates;
* the action of the Lie superalgebra gl(1|1) on tensor powers of its
  2-dimensional module, highest-weight vectors, the explicit irreducible
  decomposition, and the commuting diagram action with a full centralizer
  certificate;
* the same picture for the quantum enveloping algebra over Laurent
  polynomials in q, specialized to rational points for rank computations;
* the dictionary between colored permutation diagrams and planar rook
  diagrams, with the matrix-unit product correspondence checked by direct
  expansion.

Every check is exact: no floating point appears anywhere.
"""

from .diagrams import (
    InvalidDiagramError,
    PlanarRookDiagram,
    RookDiagram,
    Subset,
    apply_to_subset,
    canonical_planar,
    compose,
    enumerate_planar,
    identity_diagram,
    empty_diagram,
    make_diagram,
    subdiagrams,
)
from .gl11 import (
    Generator,
    TensorVector,
    WeightLabel,
    commutant_dimension,
    decomposition_table,
    diagram_action_matrix,
    generator_matrix,
    highest_weight_vector,
    tensor_basis,
    tensor_basis_inverse,
    verify_centralizer,
    verify_commuting_action,
    verify_faithful_action,
    verify_tensor_basis,
    verify_weight_pairs,
)
from .hecke import (
    ColoredPermDiagram,
    InvalidLabelError,
    SignSequence,
    colored_from_labels,
    compose_colored,
    from_planar_rook,
    to_planar_rook,
    verify_bijection,
    verify_isomorphism,
)
from .limits import BoundExceededError
from .linalg import (
    SingularMatrixError,
    SparseMatrix,
    SparseVector,
    invert,
    nullspace_dimension,
    rank,
)
from .reports import VerificationReport
from .rings import LaurentPoly, Rational, eval_laurent, q_integer, rational
from .rookalgebra import (
    AlgebraElement,
    SubsetVector,
    matrix_unit,
    module_action_matrix,
    verify_irreducibility,
    verify_matrix_unit_rule,
    verify_semisimplicity,
)
from .uq import (
    QGenerator,
    q_commutant_dimension,
    q_diagram_action_matrix,
    q_generator_matrix,
    q_highest_weight_vector,
    verify_q_centralizer,
    verify_q_weight_pairs,
    verify_quantum_relations,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement",
    "BoundExceededError",
    "ColoredPermDiagram",
    "Generator",
    "InvalidDiagramError",
    "InvalidLabelError",
    "LaurentPoly",
    "PlanarRookDiagram",
    "QGenerator",
    "Rational",
    "RookDiagram",
    "SignSequence",
    "SingularMatrixError",
    "SparseMatrix",
    "SparseVector",
    "Subset",
    "SubsetVector",
    "TensorVector",
    "VerificationReport",
    "WeightLabel",
    "apply_to_subset",
    "canonical_planar",
    "colored_from_labels",
    "commutant_dimension",
    "compose",
    "compose_colored",
    "decomposition_table",
    "diagram_action_matrix",
    "empty_diagram",
    "enumerate_planar",
    "eval_laurent",
    "from_planar_rook",
    "generator_matrix",
    "highest_weight_vector",
    "identity_diagram",
    "invert",
    "make_diagram",
    "matrix_unit",
    "module_action_matrix",
    "nullspace_dimension",
    "q_commutant_dimension",
    "q_diagram_action_matrix",
    "q_generator_matrix",
    "q_highest_weight_vector",
    "q_integer",
    "rank",
    "rational",
    "subdiagrams",
    "tensor_basis",
    "tensor_basis_inverse",
    "to_planar_rook",
    "verify_bijection",
    "verify_centralizer",
    "verify_commuting_action",
    "verify_faithful_action",
    "verify_irreducibility",
    "verify_isomorphism",
    "verify_matrix_unit_rule",
    "verify_q_centralizer",
    "verify_q_weight_pairs",
    "verify_quantum_relations",
    "verify_semisimplicity",
    "verify_tensor_basis",
    "verify_weight_pairs",
]
