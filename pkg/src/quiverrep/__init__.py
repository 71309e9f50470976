"""Exact computer algebra for quiver representations.

Quivers, dimension vectors and Weyl reflection machinery; representations
over the rationals or prime fields with Hom/Ext computation; universal
extension functors and their inverses; plus file formats, bundled fixtures
and a verification pipeline exposed through the ``quiverrep`` CLI.
"""

from .linalg import GF, QQ, Field, Matrix, kernel_basis, rank, rref, solve_linear
from .quiver import (
    Arrow,
    Quiver,
    apply_word,
    euler_form,
    is_positive_real_root,
    reflection_candidates,
    reflection_word_for_root,
    simple_reflection,
    sym_form,
)
from .reps import (
    ConsistencyError,
    ExtCocycleBasis,
    HomBasis,
    Representation,
    SubQuotient,
    UndecidedError,
    direct_sum,
    end_dim,
    ext_cocycle_basis,
    ext_dim_formula,
    hom_basis,
    hom_dim,
    image_sum_quotient,
    is_indecomposable_fp,
    kernel_intersection,
    power,
)
from .functors import (
    FunctorResult,
    MembershipReport,
    PreconditionError,
    membership,
    predicted_end_dim,
    reflected_dim,
    sigma,
    sigma_bar,
    sigma_bar_inv,
    sigma_inv,
    sigma_under,
    sigma_under_inv,
)
from .fileformat import ParseError, format_quiver, format_representation, parse_quiver, parse_representation
from .verify import FixtureSet, VerifyReport, verify_counterexample

__all__ = [
    "GF",
    "QQ",
    "Field",
    "Matrix",
    "kernel_basis",
    "rank",
    "rref",
    "solve_linear",
    "Arrow",
    "Quiver",
    "apply_word",
    "euler_form",
    "is_positive_real_root",
    "reflection_candidates",
    "reflection_word_for_root",
    "simple_reflection",
    "sym_form",
    "ConsistencyError",
    "ExtCocycleBasis",
    "HomBasis",
    "Representation",
    "SubQuotient",
    "UndecidedError",
    "direct_sum",
    "end_dim",
    "ext_cocycle_basis",
    "ext_dim_formula",
    "hom_basis",
    "hom_dim",
    "image_sum_quotient",
    "is_indecomposable_fp",
    "kernel_intersection",
    "power",
    "FunctorResult",
    "MembershipReport",
    "PreconditionError",
    "membership",
    "predicted_end_dim",
    "reflected_dim",
    "sigma",
    "sigma_bar",
    "sigma_bar_inv",
    "sigma_inv",
    "sigma_under",
    "sigma_under_inv",
    "ParseError",
    "format_quiver",
    "format_representation",
    "parse_quiver",
    "parse_representation",
    "FixtureSet",
    "VerifyReport",
    "verify_counterexample",
]
