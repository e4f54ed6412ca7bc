"""Algebraicity of 2x2 integral matrices over subgroups of PSL2(Z).

Given h_1..h_s and g in PSL2(Z), decide whether g satisfies a nontrivial
equation w(x) = 1 with coefficients in H = <h_1..h_s> and compute finitely
many equations that normally generate the ideal of all of them.
"""

__version__ = "0.1.0"

from .enumeration import CrossCheckResult, EnumerationResult, cross_check, enumerate_kernel
from .equations import (
    EqWord,
    HContext,
    HEquation,
    evaluate,
    format_eq_word,
    parse_eq_word,
    reduce_equation,
    render_equation,
    substitute,
)
from .freewords import (
    FreeWord,
    NotInKernel,
    format_free_word,
    free_reduce,
    invert_word,
    matrix_to_free_word,
    parse_free_word,
    pq_to_matrix,
    rewrite_kernel,
)
from .pipeline import (
    AnalysisReport,
    VERDICT_ALGEBRAIC,
    VERDICT_TRANSCENDENTAL,
    VerificationResult,
    analyze,
    verify,
)
from .psl2 import IDENTITY, MAT_A, MAT_B, MAT_P, MAT_Q, NotUnimodular, ProjMat2, order
from .schreier import IndexCapExceeded, SchreierGraph, build_schreier, coset_of, subgroup_generators
from .stallings import (
    FoldingLog,
    PresentationOnGenerators,
    StallingsAutomaton,
    build_flower,
    fold,
    stallings_membership,
    subgroup_presentation,
)
from .words import (
    ABWord,
    C2xC3,
    abelianize,
    decompose,
    eval_ab,
    format_ab_word,
    parse_ab_word,
    quotient_subgroup,
    reduce_ab,
)

__all__ = [
    "ABWord",
    "AnalysisReport",
    "C2xC3",
    "CrossCheckResult",
    "EnumerationResult",
    "EqWord",
    "FoldingLog",
    "FreeWord",
    "HContext",
    "HEquation",
    "IDENTITY",
    "IndexCapExceeded",
    "MAT_A",
    "MAT_B",
    "MAT_P",
    "MAT_Q",
    "NotInKernel",
    "NotUnimodular",
    "PresentationOnGenerators",
    "ProjMat2",
    "SchreierGraph",
    "StallingsAutomaton",
    "VERDICT_ALGEBRAIC",
    "VERDICT_TRANSCENDENTAL",
    "VerificationResult",
    "abelianize",
    "analyze",
    "build_flower",
    "build_schreier",
    "coset_of",
    "cross_check",
    "decompose",
    "enumerate_kernel",
    "eval_ab",
    "evaluate",
    "fold",
    "format_ab_word",
    "format_eq_word",
    "format_free_word",
    "free_reduce",
    "invert_word",
    "matrix_to_free_word",
    "order",
    "parse_ab_word",
    "parse_eq_word",
    "parse_free_word",
    "pq_to_matrix",
    "quotient_subgroup",
    "reduce_ab",
    "reduce_equation",
    "render_equation",
    "rewrite_kernel",
    "stallings_membership",
    "subgroup_generators",
    "subgroup_presentation",
    "substitute",
    "verify",
]
