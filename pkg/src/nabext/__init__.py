"""Exact computations for non-abelian extensions of Lie algebras.

Extensions of g by h are classified by non-abelian 2-cocycles (χ, ψ) up to
an action of linear maps β: g -> h.  The same data are Maurer-Cartan elements
of the dg Lie algebra ``L = C_>(g⊕h, h)`` up to gauge equivalence; this
package implements both sides in exact rational arithmetic so that each can
check the other.
"""

from .exactla import AffineSolution, Matrix, mat_nullspace, mat_rank, solve_affine
from .lie import (
    LieAlgebra, LinearMap, ModuleStructure, SplitAlgebra, ValidationReport,
    adjoint_module, center, direct_sum, is_derivation, module_check, trivial_module,
    validate_lie,
)
from .cochains import (
    BigradedCochain, Cochain, bigrade_decompose, bracket_cochain, ce_differential,
    eval_cochain, nr_bracket, nr_insertion,
)
from .dgla import (
    DgLaContext, GaugeElement, LElement, build_context, differential, exp_ad,
    gauge_act, gauge_g, mc_defect, twist,
)
from .extensions import (
    ExtensionBracket, JacobiatorReport, NonAbelianCocycle, WitnessResult,
    build_extension, check_equivalent_with_witness, cocycle_equiv_apply, cocycle_to_mc,
    extension_to_cocycle, find_witness, is_nonabelian_cocycle, jacobiator_components,
    mc_to_cocycle,
)
from .abelian import CohomologyResult, ce_cohomology, classify_abelian, verify_tangent

__all__ = [
    "AffineSolution",
    "Matrix",
    "mat_nullspace",
    "mat_rank",
    "solve_affine",
    "LieAlgebra",
    "LinearMap",
    "ModuleStructure",
    "SplitAlgebra",
    "ValidationReport",
    "adjoint_module",
    "center",
    "direct_sum",
    "is_derivation",
    "module_check",
    "trivial_module",
    "validate_lie",
    "BigradedCochain",
    "Cochain",
    "bigrade_decompose",
    "bracket_cochain",
    "ce_differential",
    "eval_cochain",
    "nr_bracket",
    "nr_insertion",
    "DgLaContext",
    "GaugeElement",
    "LElement",
    "build_context",
    "differential",
    "exp_ad",
    "gauge_act",
    "gauge_g",
    "mc_defect",
    "twist",
    "ExtensionBracket",
    "JacobiatorReport",
    "NonAbelianCocycle",
    "WitnessResult",
    "build_extension",
    "check_equivalent_with_witness",
    "cocycle_equiv_apply",
    "cocycle_to_mc",
    "extension_to_cocycle",
    "find_witness",
    "is_nonabelian_cocycle",
    "jacobiator_components",
    "mc_to_cocycle",
    "CohomologyResult",
    "ce_cohomology",
    "classify_abelian",
    "verify_tangent",
]

__version__ = "0.1.0"
