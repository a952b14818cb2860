"""sextor: finite categories with closed ideals of null morphisms.

Relative kernels and cokernels, the category Ses(C) of short exact
sequences, pretorsion theories, and mechanical checks of the comonad on
Ses and its coalgebras.
"""
from .category import (
    FinCategory,
    FinFunctor,
    NatTrans,
    all_functors,
    all_nat_trans,
    build_chain,
    build_pointed_sets,
    compose_functors,
    constant_functor,
    identity_functor,
    identity_nat,
    validate_category,
    validate_functor,
    validate_nat,
)
from .comonad import (
    EXACT,
    STRICT,
    CoalgebraStructure,
    ModeViolation,
    MorphismMode,
    NotBihereditary,
    build_coalgebra,
    check_adjoint_quintuple,
    check_coalgebra,
    check_coalgebra_2cell,
    check_coalgebra_morphism,
    check_coassociator,
    check_comonad,
    check_compositor,
    check_counit_triangles,
    check_delta_structure,
    classify_coalgebra,
    classify_morphism,
    comultiplication_functor,
    counit_functor,
    extract_pretorsion,
    omega_on_functor,
    omega_on_nat,
    search_generalized,
)
from .exactness import (
    NoCokernel,
    NoKernel,
    NotExact,
    cokernel,
    exact_data,
    is_cokernel_of,
    is_exact,
    is_kernel_of,
    is_semiexact,
    is_short_exact,
    kernel,
    replacement,
)
from .fileformat import ParseError, parse, read, to_json, to_text
from .ideal import Ideal, ideal_from_objects, is_closed, is_ideal, null_objects
from .pretorsion import (
    check_pretorsion,
    chain_characterization,
    enumerate_pretorsion,
    is_bihereditary,
    is_rectangular,
    theory_ideal,
    torsion_assignment,
)
from .report import Report
from .ses import build_ses, canonical_pretorsion, check_ses

__version__ = "0.1.0"
