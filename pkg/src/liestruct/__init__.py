"""liestruct: exact structure theory of finite-dimensional Lie algebras.

Everything is computed over Q with fractions.Fraction, so every reported
identity (kernel dimensions, idempotent equations, automorphism checks)
holds exactly rather than within a tolerance.
"""

__version__ = "0.1.0"

from .errors import (
    JacobiError,
    LiestructError,
    NotAnIdealError,
    PreconditionError,
    SeparatingElementError,
    SpecParseError,
    TruncationError,
)
from .linalg import Matrix, Subspace, kernel_basis, row_reduce, solve
from .poly import char_poly, factor_small, jordan_chevalley, min_poly, squarefree_part
from .lie import LieAlgebra, build, from_dict, to_dict
from .endo import (
    EndoSpace,
    centroid,
    derivations,
    inner_derivations,
    j_space,
    module_commutant,
    split_centroid,
)
from .decompose import (
    ComplexStructure,
    DecompositionReport,
    IdempotentSet,
    centroid_radical,
    complex_structure,
    indecompose,
    primitive_idempotents,
)
from .construct import (
    CommutativeAlgebra,
    casimir_adjoint,
    casimir_coefficient_action,
    classical,
    commutative_derivations,
    current_algebra,
    direct_sum,
    example_algebra,
    point_functions,
    quadratic_extension,
    tensor_vector,
    truncated_poly,
)
from .sections import (
    JetAlgebra,
    XDerivation,
    centroid_of_sections_check,
    current_der_decomposition,
    indecomposability_of_sections_check,
    jet_algebra,
    jet_reparametrization_automorphism,
    leibniz_expand,
    multinomial_sum,
    s_part_of_sections_check,
    section_center_check,
    section_commutator_check,
    symbol_check,
    x_derivations,
)
from .cli import parse_algebra

__all__ = [
    "__version__",
    "LiestructError",
    "JacobiError",
    "NotAnIdealError",
    "PreconditionError",
    "SeparatingElementError",
    "TruncationError",
    "SpecParseError",
    "Matrix",
    "Subspace",
    "row_reduce",
    "kernel_basis",
    "solve",
    "char_poly",
    "min_poly",
    "squarefree_part",
    "factor_small",
    "jordan_chevalley",
    "LieAlgebra",
    "build",
    "from_dict",
    "to_dict",
    "EndoSpace",
    "derivations",
    "inner_derivations",
    "centroid",
    "j_space",
    "module_commutant",
    "split_centroid",
    "IdempotentSet",
    "DecompositionReport",
    "ComplexStructure",
    "centroid_radical",
    "primitive_idempotents",
    "indecompose",
    "complex_structure",
    "CommutativeAlgebra",
    "classical",
    "example_algebra",
    "direct_sum",
    "truncated_poly",
    "point_functions",
    "quadratic_extension",
    "current_algebra",
    "tensor_vector",
    "casimir_adjoint",
    "casimir_coefficient_action",
    "commutative_derivations",
    "JetAlgebra",
    "XDerivation",
    "jet_algebra",
    "section_center_check",
    "section_commutator_check",
    "x_derivations",
    "symbol_check",
    "current_der_decomposition",
    "centroid_of_sections_check",
    "indecomposability_of_sections_check",
    "s_part_of_sections_check",
    "multinomial_sum",
    "leibniz_expand",
    "jet_reparametrization_automorphism",
    "parse_algebra",
]
