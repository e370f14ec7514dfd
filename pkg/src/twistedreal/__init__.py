"""Exact symbolic verification of twisted reality conditions.

Two families of examples are covered, both with exact arithmetic:

* the quantum-cone triple over the q-deformed disc, where q stays a formal
  symbol and all identities are Laurent-polynomial identities;
* finite-dimensional matrix triples over Gaussian rationals, with conformal
  twisting, twisted fluctuations and iterated twists.
"""

from ._kernels import available_backends, backend as kernel_backend
from .conformal import (
    AntiLinearOp,
    ConformalFactor,
    FiniteTriple,
    OneForm,
    QMatrix,
    TwistedTriple,
    alpha_prime,
    build_twisted,
    check_alpha_prime_central,
    compose_fluctuations,
    fluctuate,
    fluctuation_closure_check,
    jmj,
    k_prime,
    ko_dimension,
    kron,
    one_form,
    parse_fixture,
    retwist,
    verify_twisted,
)
from .graded_triple import (
    ConeTriple,
    GradedTripleSpec,
    HVector,
    basis_enumerate,
    check_axiom,
    verify_cone,
)
from .ncalg import (
    ConeGens,
    DiscElement,
    DiscMonomial,
    cone_relation_check,
    d_minus,
    d_plus,
    degree_components,
    is_in_cone,
    normal_form,
    skew_derivative,
)
from .report import AxiomReport, SignSummary, SuiteReport, Witness
from .scalar import GaussRational, QLaurent, conj, field_arith, q_pow
from .syntax import parse_element, parse_gauss, parse_scalar, parse_word

__version__ = "0.1.0"

__all__ = [
    "AntiLinearOp",
    "AxiomReport",
    "ConeGens",
    "ConeTriple",
    "ConformalFactor",
    "DiscElement",
    "DiscMonomial",
    "FiniteTriple",
    "GaussRational",
    "GradedTripleSpec",
    "HVector",
    "OneForm",
    "QLaurent",
    "QMatrix",
    "SignSummary",
    "SuiteReport",
    "TwistedTriple",
    "Witness",
    "alpha_prime",
    "available_backends",
    "basis_enumerate",
    "build_twisted",
    "check_alpha_prime_central",
    "check_axiom",
    "compose_fluctuations",
    "cone_relation_check",
    "conj",
    "d_minus",
    "d_plus",
    "degree_components",
    "field_arith",
    "fluctuate",
    "fluctuation_closure_check",
    "is_in_cone",
    "jmj",
    "k_prime",
    "kernel_backend",
    "ko_dimension",
    "kron",
    "normal_form",
    "one_form",
    "parse_element",
    "parse_fixture",
    "parse_gauss",
    "parse_scalar",
    "parse_word",
    "q_pow",
    "retwist",
    "skew_derivative",
    "verify_cone",
    "verify_twisted",
]
