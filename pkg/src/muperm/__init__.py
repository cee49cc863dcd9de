"""Exact mu-permanents P_mu(A) = sum over sigma of prod a_{i,sigma(i)} mu^inv(sigma)."""

from .algebra import GaussianRational, MuPoly, MultiQPoly, Rational, parse_rational
from .compute import choose_method, mu_permanent
from .conjectures import (
    Verdict,
    check_fischer,
    check_lieb,
    check_monotone,
    check_nonnegative,
    check_soules,
    epsilon_threshold,
    restricted_sum,
    run_campaign,
)
from .core import (
    multivariable_qdet,
    mu_permanent_laplace,
    mu_permanent_naive,
    q_complementary,
    specialize,
)
from .matrices import Permutation, SquareMatrix, SupportGraph, generate, support_graph
from .schur import averaging_identity, check_gamma_psd, gamma_mu, pi_mu, schur_power
from .structured import (
    PreconditionError,
    mu_permanent_star,
    mu_permanent_tree,
    mu_permanent_tridiagonal,
    relabel_tree,
    validate_labeling,
)

__all__ = [
    "GaussianRational", "MuPoly", "MultiQPoly", "Rational", "parse_rational",
    "choose_method", "mu_permanent",
    "Verdict", "check_fischer", "check_lieb", "check_monotone", "check_nonnegative", "check_soules",
    "epsilon_threshold", "restricted_sum", "run_campaign",
    "multivariable_qdet", "mu_permanent_laplace", "mu_permanent_naive", "q_complementary", "specialize",
    "Permutation", "SquareMatrix", "SupportGraph", "generate", "support_graph",
    "averaging_identity", "check_gamma_psd", "gamma_mu", "pi_mu", "schur_power",
    "PreconditionError", "mu_permanent_star", "mu_permanent_tree", "mu_permanent_tridiagonal",
    "relabel_tree", "validate_labeling",
]
