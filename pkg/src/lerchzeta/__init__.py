"""Verified evaluation of Lerch zeta functions, Dirichlet L-values, and
their wide-moment identities.

Every numeric result is a ComplexApprox: a value paired with a
conservative absolute error bound, produced by explicitly bounded
series, Euler-Maclaurin continuation, or quadrature.
"""

from .approx import ComplexApprox
from .bernoulli import BernoulliTable, bernoulli_number, bernoulli_poly
from .characters import (
    DirichletCharacter,
    UnitGroup,
    conductor,
    enumerate_characters,
    gauss_sum,
    induce,
    nu_weight,
    pointwise_product,
    principal_character,
    quadratic_character,
    unit_group,
)
from .lerch import (
    LerchArgument,
    LerchPole,
    RouteDisagreement,
    RouteUnavailable,
    applicable_routes,
    central_coefficient_profile,
    functional_equation_check,
    hurwitz_em,
    lerch_eval,
    lerch_hurwitz_comb,
    lerch_integral,
    lerch_series,
    lerch_taylor,
    zeta_value,
)
from .lvalues import (
    TwistedHurwitzArg,
    TwistedPeriodicArg,
    birch_stevens_lhs,
    birch_stevens_residual,
    birch_stevens_rhs,
    dirichlet_l,
    twisted_hurwitz_l,
    twisted_periodic_l,
)
from .moments import (
    ExpansionReport,
    WideMomentSpec,
    double_average_moment,
    fit_expansion_coefficients,
    gauss_twisted_moment,
    hurwitz_moment,
    mobius_decomposition,
    moment_t_value,
    predicted_main,
    primitive_restriction,
    wide_moment_brute,
    wide_moment_fourier,
)
from .nonvanishing import NonvanishingReport, cauchy_schwarz_bound, count_nonvanishing
from .numtheory import divisors, factorize, is_prime, mobius, primes_up_to, primitive_totient, totient
from .precision import PrecisionConfig, make_config
from .reports import MomentReport, RunConfig

__version__ = "0.1.0"
__all__ = [
    "BernoulliTable",
    "ComplexApprox",
    "DirichletCharacter",
    "ExpansionReport",
    "LerchArgument",
    "LerchPole",
    "MomentReport",
    "NonvanishingReport",
    "PrecisionConfig",
    "RouteDisagreement",
    "RouteUnavailable",
    "RunConfig",
    "TwistedHurwitzArg",
    "TwistedPeriodicArg",
    "UnitGroup",
    "WideMomentSpec",
    "applicable_routes",
    "bernoulli_number",
    "bernoulli_poly",
    "birch_stevens_lhs",
    "birch_stevens_residual",
    "birch_stevens_rhs",
    "cauchy_schwarz_bound",
    "central_coefficient_profile",
    "conductor",
    "count_nonvanishing",
    "dirichlet_l",
    "divisors",
    "double_average_moment",
    "enumerate_characters",
    "factorize",
    "fit_expansion_coefficients",
    "functional_equation_check",
    "gauss_sum",
    "gauss_twisted_moment",
    "hurwitz_em",
    "hurwitz_moment",
    "induce",
    "is_prime",
    "lerch_eval",
    "lerch_hurwitz_comb",
    "lerch_integral",
    "lerch_series",
    "lerch_taylor",
    "make_config",
    "mobius",
    "mobius_decomposition",
    "moment_t_value",
    "nu_weight",
    "pointwise_product",
    "predicted_main",
    "primes_up_to",
    "primitive_restriction",
    "primitive_totient",
    "principal_character",
    "quadratic_character",
    "totient",
    "twisted_hurwitz_l",
    "twisted_periodic_l",
    "unit_group",
    "wide_moment_brute",
    "wide_moment_fourier",
    "zeta_value",
]
