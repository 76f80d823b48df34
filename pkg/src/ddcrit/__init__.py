"""Exact-arithmetic toolkit for the (isolated) differential data criterion
over finite fields, with the Artin-Schreier-Witt utilities that connect it to
ramification data."""

from .cartier import LaurentForm, Quadruple, cartier, ddc_check, dlog_truncated, is_exact
from .construct import construct_small, construct_trace, d9_witnesses
from .criterion import (
    Certificate,
    ResidueData,
    binomial_det,
    certify,
    isolation_check,
    power_sum_check,
    reconstruct_f,
    residue_data,
    verify_certificate_json,
)
from .errors import DdcritError
from .gf import (
    FieldElement,
    FieldSpec,
    make_field,
    ord_mod,
    pth_root,
    root_of_unity,
    trace_to_prime,
)
from .planner import (
    RadiiReport,
    lifting_radii,
    profiles_for_group,
    quadruple_for_step,
    quadruples_for_group,
)
from .poly import (
    LaurentPoly,
    Poly,
    RationalFunction,
    elementary_symmetric,
    mu_m_orbit_reps,
    roots_in_splitting_field,
)
from .search import GroupSearchResult, NotFound, brute_search, search_group
from .witt import (
    JumpProfile,
    WittVector,
    different_degree,
    frobenius,
    gamma_congruence,
    kgb_vanishes,
    reduce_jumps,
    standard_form,
    upper_breaks,
    witt_add,
    witt_neg,
    witt_sum_polys,
    wp,
)

__version__ = "0.1.0"
