"""Sum-free set calculus over ternary vector spaces F_3^n."""

from .canon import GroupElement, canonical_form_bits, gl_order, is_lexmin_bits
from .core import (
    ParseError,
    TernarySet,
    TernaryVector,
    difference_set,
    format_set_text,
    is_aperiodic,
    is_maximal_sum_free,
    is_sum_free,
    k_fold_sumset,
    negate,
    parse_set_text,
    sumset,
    sym_group,
)
from .halves import check_half_fact, enumerate_halves, is_half
from .kneser import (
    HypothesisError,
    StabilizerWitness,
    difference_cover_check,
    find_stabilizer_witness,
    full_sumset_check,
    kneser_check,
)
from .primitive import (
    CertificateError,
    CheckResult,
    ClassificationReport,
    PrimitiveCertificate,
    check_lemma,
    classify_set,
    enumerate_primitive,
    is_subprimitive,
    recognize_primitive,
    validate_certificate,
)
from .search import (
    EnumerationReport,
    VerificationVerdict,
    canonical_form,
    check_proposition,
    compute_t,
    enumerate_maximal_sumfree,
    lev_construction,
    stabilizer_order,
    verify_main_theorem,
)
from .subspaces import (
    AffineSubspace,
    LinearSubspace,
    affine_hull,
    affine_subspace,
    cone,
    empty_subspace,
    enumerate_affine_subspaces,
    enumerate_hyperplanes,
    full_space,
    linear_subspace,
    quotient_map,
)
from .suite import SuiteReport, run_suite

__all__ = [
    "AffineSubspace",
    "CertificateError",
    "CheckResult",
    "ClassificationReport",
    "EnumerationReport",
    "GroupElement",
    "HypothesisError",
    "LinearSubspace",
    "ParseError",
    "PrimitiveCertificate",
    "StabilizerWitness",
    "SuiteReport",
    "TernarySet",
    "TernaryVector",
    "VerificationVerdict",
    "affine_hull",
    "affine_subspace",
    "canonical_form",
    "canonical_form_bits",
    "check_half_fact",
    "check_lemma",
    "check_proposition",
    "classify_set",
    "compute_t",
    "cone",
    "difference_cover_check",
    "difference_set",
    "empty_subspace",
    "enumerate_affine_subspaces",
    "enumerate_halves",
    "enumerate_hyperplanes",
    "enumerate_maximal_sumfree",
    "enumerate_primitive",
    "find_stabilizer_witness",
    "format_set_text",
    "full_space",
    "full_sumset_check",
    "gl_order",
    "is_aperiodic",
    "is_half",
    "is_lexmin_bits",
    "is_maximal_sum_free",
    "is_subprimitive",
    "is_sum_free",
    "k_fold_sumset",
    "kneser_check",
    "lev_construction",
    "linear_subspace",
    "negate",
    "parse_set_text",
    "quotient_map",
    "recognize_primitive",
    "run_suite",
    "stabilizer_order",
    "sumset",
    "sym_group",
    "validate_certificate",
    "verify_main_theorem",
]
