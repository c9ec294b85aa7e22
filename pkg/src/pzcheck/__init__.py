"""pzcheck: computational falsification of claimed prime-zeta identities.

Exact Dirichlet-series coefficient algebra, rigorous-bound evaluation of
zeta(s) and the prime zeta function P(s), nested-radical evaluation with
tail acceleration, and cyclotomic polynomial heights — everything needed
to check the claimed identities and watch them fail.
"""

from .arith import (
    BERNOULLI_MAX,
    FactoredInteger,
    PrimeTable,
    Rational,
    bernoulli,
    factorize,
    mobius,
    primes_upto,
    sieve,
)
# NB: the cyclotomic() op stays namespaced (pzcheck.cyclotomic.cyclotomic)
# so the function does not shadow its submodule in the package namespace.
from .cyclotomic import IntPolynomial, height
from .dirichlet import (
    DirichletSeries,
    claim_lhs_series,
    claim_rhs_series,
    convolve,
    dilate,
    first_mismatch,
    invert,
    linear_combine,
    prime_zeta_series,
    unit_series,
    zeta_series,
)
from .radical import (
    Claim4Result,
    NegativeRadicandError,
    RadicalTrace,
    TailMode,
    claim4_check,
    convergence_report,
    domain_scan,
    eval_nested,
    tail_fixed_point,
)
from .zeta import (
    EvalResult,
    FitResult,
    PrecisionError,
    ProbeRow,
    claim_lhs,
    claim_rhs,
    euler_even_zeta,
    fit_log_quadratic,
    prime_zeta,
    prime_zeta_direct,
    singularity_probe,
    zeta_real,
)

__version__ = "0.1.0"

__all__ = [
    "BERNOULLI_MAX",
    "Claim4Result",
    "DirichletSeries",
    "EvalResult",
    "FactoredInteger",
    "FitResult",
    "IntPolynomial",
    "NegativeRadicandError",
    "PrecisionError",
    "PrimeTable",
    "ProbeRow",
    "RadicalTrace",
    "Rational",
    "TailMode",
    "bernoulli",
    "claim4_check",
    "claim_lhs",
    "claim_lhs_series",
    "claim_rhs",
    "claim_rhs_series",
    "convergence_report",
    "convolve",
    "dilate",
    "domain_scan",
    "euler_even_zeta",
    "eval_nested",
    "factorize",
    "first_mismatch",
    "fit_log_quadratic",
    "height",
    "invert",
    "linear_combine",
    "mobius",
    "prime_zeta",
    "prime_zeta_direct",
    "prime_zeta_series",
    "primes_upto",
    "sieve",
    "singularity_probe",
    "tail_fixed_point",
    "unit_series",
    "zeta_real",
    "zeta_series",
]
