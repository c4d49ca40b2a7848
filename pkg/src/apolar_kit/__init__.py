"""Exact-arithmetic apolarity toolkit.

Sparse rational polynomial arithmetic, Groebner bases, apolarity actions
and Hankel/catalecticant linear algebra, plus the scheme-level procedures
built from them: natural apolar schemes, schemes evinced by generalized
additive decompositions, Hilbert functions, regularity and redundancy
checks.  Everything is computed over the rationals with no floating point.
"""

from .polyring import (
    DIVIDED,
    FAMILY_DUAL,
    FAMILY_PRIMAL,
    GREVLEX,
    GRLEX,
    LEX,
    ApolarKitError,
    LinearForm,
    MonomialOrder,
    Polynomial,
    STANDARD,
    divides_linear,
    dehomogenize,
    elimination_order,
    format_poly,
    from_divided_powers,
    homogenize_poly,
    parse_linear_form,
    parse_poly,
    substitute_linear,
    to_divided_powers,
)
from .groebner import (
    GroebnerBasis,
    HilbertSequence,
    Ideal,
    buchberger,
    fat_point_ideal,
    hilbert_sequence,
    homogenize_ideal,
    ideal_contains,
    ideal_equals,
    ideal_membership,
    ideal_quotient,
    intersect,
    normal_form,
    point_ideal,
    radical_membership,
    saturate,
)
from .apolarity import (
    Catalecticant,
    GradedVectorSpace,
    HankelMatrix,
    apolar_hilbert_function,
    catalecticant,
    catalecticant_rank,
    contraction_apply,
    derivation_apply,
    derivative_space,
    dual_hyperplane_basis,
    global_annihilator,
    hankel_entry,
    hankel_matrix,
    inverse_system_slice,
    local_annihilator,
    truncation_degree,
)
from .schemes import (
    GAD,
    GadSummand,
    RedundancyCertificate,
    Scheme,
    fat_containment_profile,
    gad_scheme,
    gad_validate,
    is_apolar,
    lowmultiplicity_check,
    natural_apolar_scheme,
    redundancy_certificate,
    regularity_report,
    short_scheme_criterion,
    subscheme_apolarity_sweep,
    tangential_shorten,
)

__version__ = "0.1.0"
