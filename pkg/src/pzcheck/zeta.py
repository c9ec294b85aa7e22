"""Floating-point evaluation of zeta(s), the prime zeta function P(s),
and both sides of the identity under test, with explicit truncation
error bounds.

zeta values come from Euler-Maclaurin summation at cutoff M:

    zeta(s) = sum_{n=1}^{M} n^{-s} + M^{1-s}/(s-1) - M^{-s}/2
            + sum_{j=1}^{J} B_{2j}/(2j)! * (s)_{2j-1} * M^{-s-2j+1} + R

where (s)_m is the rising factorial s(s+1)...(s+m-1).  For real s > 1
the remainder satisfies |R| <= |B_{2J+2}/(2J+2)!| * (s)_{2J+1} *
M^{-s-2J-1} (first omitted term), which is the bound we report.  Note
the sign of the M^{-s}/2 term: with the sum running through n = M the
correction is subtracted; folding it into a sum through M-1 flips it
to the + form some references print.

P(s) uses the Mobius-weighted log-zeta series

    P(s) = sum_{k>=1} mu(k)/k * log zeta(ks),

truncated at K with the geometric tail bound that follows from
zeta(x) - 1 < 2^(2-x) for x >= 2:

    sum_{k>K} |log zeta(ks)|/k  <=  4 * 2^(-(K+1)s) / ((K+1)(1 - 2^(-s))).

Every EvalResult's error_bound covers truncation only — what the
formulas above cut off — not double rounding; working precision is
~16 significant digits and all downstream comparisons in this package
sit many orders of magnitude above it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import fsum, log
from typing import NamedTuple

import numpy as np

from .arith import bernoulli, factorize, mobius, primes_upto, sieve

# Euler-Maclaurin correction order J.  With M >= 20 the first omitted
# term is already below 1e-20 for every s >= 1.01.
_EM_ORDER = 8

# Hard ceiling on the cutoff M.  M grows like 10/(s-1), so this admits
# s - 1 >= 5e-7; closer approaches to the pole are a precision error.
_MAX_M = 20_000_000

# Smallest tolerance the public zeta_real will accept.
MIN_TOL = 1e-14

# Reject s at or below this in claim evaluations; the singularity probe
# owns the near-pole region.
_POLE_GUARD = 1.0 + 1e-8

_TWO_PI = 2.0 * math.pi


class PrecisionError(ValueError):
    """Requested accuracy is not achievable at working precision."""


@dataclass(frozen=True)
class EvalResult:
    """A numeric value plus an upper bound on its truncation error.

    error_bound is derived from the tail estimate of whichever series
    was truncated; it does not include double-precision rounding.
    """

    value: float
    error_bound: float

    def __post_init__(self):
        if not math.isfinite(self.value):
            raise ValueError(f"non-finite value {self.value!r}")
        if not (math.isfinite(self.error_bound) and self.error_bound >= 0.0):
            raise ValueError(f"bad error bound {self.error_bound!r}")


@lru_cache(maxsize=1)
def _em_coefficients() -> tuple[float, ...]:
    # B_{2j}/(2j)! for j = 1..J, exact rationals rounded once.
    return tuple(
        float(bernoulli(2 * j) / math.factorial(2 * j))
        for j in range(1, _EM_ORDER + 1)
    )


@lru_cache(maxsize=1)
def _em_remainder_coefficient() -> float:
    return abs(float(bernoulli(2 * _EM_ORDER + 2) / math.factorial(2 * _EM_ORDER + 2)))


def _em_remainder_bound(s: float, m: int) -> float:
    rising = 1.0
    for i in range(2 * _EM_ORDER + 1):
        rising *= s + i
    return _em_remainder_coefficient() * rising * float(m) ** (-s - 2 * _EM_ORDER - 1)


@lru_cache(maxsize=4096)
def _euler_maclaurin(s: float, tol: float) -> EvalResult:
    """zeta(s) for real s > 1 with remainder bound <= tol.

    Internal path shared by the public wrapper, prime_zeta, and the
    singularity probe; no pole guard, tolerances clamped to 5e-17.
    M starts at max(20, ceil(10/(s-1))) and doubles until the remainder
    bound clears tol, so the probe's M automatically scales like 1/eps.
    """
    if not s > 1.0:
        raise ValueError(f"zeta evaluation needs s > 1, got {s}")
    tol = max(tol, 5e-17)
    m = max(20, math.ceil(10.0 / (s - 1.0)))
    while m <= _MAX_M and _em_remainder_bound(s, m) > tol:
        m *= 2
    if m > _MAX_M:
        raise PrecisionError(
            f"Euler-Maclaurin cutoff beyond {_MAX_M} terms at s={s}; "
            "too close to the pole for working precision"
        )
    value = fsum(n ** -s for n in range(1, m + 1))
    mf = float(m)
    value += mf ** (1.0 - s) / (s - 1.0) - 0.5 * mf ** -s
    power = mf ** (-s - 1.0)  # M^{-s-2j+1} at j=1
    rising = s  # (s)_{2j-1} at j=1
    for t, coeff in enumerate(_em_coefficients()):
        value += coeff * rising * power
        power /= mf * mf
        rising *= (s + 2 * t + 1) * (s + 2 * t + 2)
    return EvalResult(value=value, error_bound=_em_remainder_bound(s, m))


def zeta_real(s: float, tol: float = 1e-12) -> EvalResult:
    """zeta(s) for real s > 1 + 1e-8 with truncation error <= tol.

    The pole region s <= 1 + 1e-8 is rejected here; singularity_probe
    owns it (same summation core, adaptive M, per-row error reporting).
    """
    if not s > _POLE_GUARD:
        raise ValueError(
            f"zeta_real needs s > {_POLE_GUARD}; use singularity_probe near the pole"
        )
    if not tol > 0.0:
        raise ValueError(f"tol must be positive, got {tol}")
    if tol < MIN_TOL:
        raise PrecisionError(f"tol {tol} below working-precision floor {MIN_TOL}")
    return _euler_maclaurin(s, tol)


def euler_even_zeta(k: int) -> EvalResult:
    """zeta(2k) by Euler's closed form, error bound rounding-only.

    zeta(2k) = (-1)^(k-1) (2 pi)^(2k) B_{2k} / (2 (2k)!), with the
    rational part kept exact and rounded once; the only float work is
    the power of 2*pi, so the bound is a few ulps.
    """
    if not 1 <= k <= 32:
        raise ValueError(f"euler_even_zeta needs 1 <= k <= 32, got {k}")
    rational = Fraction((-1) ** (k - 1), 2) * bernoulli(2 * k) / math.factorial(2 * k)
    value = float(rational) * _TWO_PI ** (2 * k)
    return EvalResult(value=value, error_bound=abs(value) * (2 * k + 4) * 2.0 ** -52)


@lru_cache(maxsize=1)
def _mobius_small() -> tuple[int, ...]:
    # mu(k) for k up to the largest truncation index K; K*s > 60 with
    # s > 1 keeps K below 64.
    table = sieve(64)
    return (0,) + tuple(mobius(factorize(k, table)) for k in range(1, 65))


def _pz_tail_bound(k: int, s: float) -> float:
    # sum_{j>k} |log zeta(js)|/j with log zeta(x) <= zeta(x)-1 < 4*2^-x
    # for x >= 2 (true for js >= 2s > 2), summed geometrically.
    return 4.0 * 2.0 ** (-(k + 1) * s) / ((k + 1) * (1.0 - 2.0 ** -s))


def prime_zeta(s: float, tol: float = 1e-12) -> EvalResult:
    """P(s) = sum over primes of p^{-s} via the Mobius log-zeta series.

    Truncates at the first K where the geometric tail bound drops under
    tol/2 or K*s exceeds 60 (there 2^{-Ks} is below 1e-18 and the tail
    bound is far under any accepted tol).  Each log zeta(ks) is an
    Euler-Maclaurin evaluation at tolerance tol/(4K); the reported bound
    is the tail bound plus the propagated per-term evaluation errors.
    """
    if not s > 1.0:
        raise ValueError(f"prime_zeta needs s > 1, got {s}")
    if not tol > 0.0:
        raise ValueError(f"tol must be positive, got {tol}")
    if tol < 1e-15:
        raise PrecisionError(f"tol {tol} below working-precision floor 1e-15")

    k_stop = 1
    while (k_stop + 1) * s <= 60.0 and _pz_tail_bound(k_stop, s) > tol / 2.0:
        k_stop += 1
    inner_tol = max(tol / (4.0 * k_stop), 1e-16)

    mu = _mobius_small()
    terms = []
    eval_error = 0.0
    for k in range(1, k_stop + 1):
        if mu[k] == 0:
            continue
        zk = _euler_maclaurin(k * s, inner_tol)
        terms.append(mu[k] / k * log(zk.value))
        # |d log z| <= e / (z - e); z > 1 and e <= ~1e-14 keep this sane
        eval_error += zk.error_bound / (k * (zk.value - zk.error_bound))
    return EvalResult(
        value=fsum(terms),
        error_bound=_pz_tail_bound(k_stop, s) + eval_error,
    )


@lru_cache(maxsize=4)
def _prime_list(limit: int) -> tuple[int, ...]:
    return primes_upto(limit)


def prime_zeta_direct(s: float, prime_limit: int) -> EvalResult:
    """P(s) by direct summation over primes up to prime_limit.

    Tail bound: the primes above the limit are a subset of the integers,
    so sum_{p > L} p^{-s} <= integral_L^inf x^{-s} dx = L^{1-s}/(s-1).
    Deliberately independent of prime_zeta's series route — this is the
    cross-validation oracle, so it shares no truncation logic with it.
    """
    if not s > 1.0:
        raise ValueError(f"prime_zeta_direct needs s > 1, got {s}")
    if prime_limit < 2:
        raise ValueError(f"prime_limit must be >= 2, got {prime_limit}")
    value = fsum(p ** -s for p in _prime_list(prime_limit))
    return EvalResult(
        value=value, error_bound=float(prime_limit) ** (1.0 - s) / (s - 1.0)
    )


def _lhs_unguarded(s: float, tol: float) -> EvalResult:
    z = _euler_maclaurin(s, tol / 2.0)
    bound = 2.0 * z.error_bound / (z.value * (z.value - z.error_bound))
    return EvalResult(value=2.0 / z.value, error_bound=bound)


def _rhs_unguarded(s: float, tol: float) -> EvalResult:
    p1 = prime_zeta(s, tol / 8.0)
    p2 = prime_zeta(2.0 * s, tol / 8.0)
    value = 2.0 - 2.0 * p1.value + p1.value * p1.value - p2.value
    bound = (2.0 + 2.0 * abs(p1.value) + p1.error_bound) * p1.error_bound
    bound += p2.error_bound
    return EvalResult(value=value, error_bound=bound)


def claim_lhs(s: float, tol: float = 1e-12) -> EvalResult:
    """Left side of the identity under test: 2/zeta(s)."""
    if not s > _POLE_GUARD:
        raise ValueError(f"claim_lhs needs s > {_POLE_GUARD}")
    return _lhs_unguarded(s, tol)


def claim_rhs(s: float, tol: float = 1e-12) -> EvalResult:
    """Right side of the identity under test: 2 - 2P(s) + P(s)^2 - P(2s).

    First-order error propagation: the P(s)^2 term contributes
    (2|P| + e) * e, the linear terms 2e, the dilated term its own bound.
    """
    if not s > _POLE_GUARD:
        raise ValueError(f"claim_rhs needs s > {_POLE_GUARD}")
    return _rhs_unguarded(s, tol)


class ProbeRow(NamedTuple):
    """One singularity-probe sample at s = 1 + eps.

    lhs/rhs are None when the row failed (note holds the reason); note
    is also set, with values kept, when an error bound overtakes the
    value it bounds.
    """

    eps: float
    lhs: EvalResult | None
    rhs: EvalResult | None
    note: str = ""


def singularity_probe(epsilons: list[float], tol: float = 1e-12) -> list[ProbeRow]:
    """Evaluate both sides at s = 1 + eps along a descending eps grid.

    The zeta core scales its cutoff M like 1/eps automatically; rows
    whose eps is too small for working precision come back with a note
    instead of raising, so one bad row does not spoil the table.
    Expected behavior (asserted by callers, not here): lhs ~ 2*eps
    decreases to 0, rhs grows like a quadratic in log(eps).
    """
    eps_list = list(epsilons)
    if not eps_list:
        raise ValueError("empty epsilon grid")
    for eps in eps_list:
        if not 0.0 < eps <= 0.5:
            raise ValueError(f"probe eps must lie in (0, 0.5], got {eps}")
    if any(b >= a for a, b in zip(eps_list, eps_list[1:])):
        raise ValueError("probe eps grid must be strictly descending")

    rows = []
    for eps in eps_list:
        s = 1.0 + eps
        try:
            lhs = _lhs_unguarded(s, tol)
            rhs = _rhs_unguarded(s, tol)
        except PrecisionError as exc:
            rows.append(ProbeRow(eps=eps, lhs=None, rhs=None, note=str(exc)))
            continue
        note = ""
        if lhs.error_bound > abs(lhs.value) or rhs.error_bound > abs(rhs.value):
            note = "error bound exceeds value magnitude"
        rows.append(ProbeRow(eps=eps, lhs=lhs, rhs=rhs, note=note))
    return rows


class FitResult(NamedTuple):
    leading: float
    linear: float
    constant: float
    rel_residual: float


def fit_log_quadratic(rows: list[ProbeRow]) -> FitResult:
    """Least-squares fit of rhs against (log eps)^2, log eps, 1.

    Probes the claimed a*(log(s-1))^2 + b*log(s-1) + O(1) blow-up shape;
    a divergent-but-logarithmic rhs shows up as a positive leading
    coefficient with a small relative residual.  Failed rows are
    skipped; fewer than three good rows is a domain error.
    """
    good = [(r.eps, r.rhs.value) for r in rows if r.rhs is not None]
    if len(good) < 3:
        raise ValueError(f"need >= 3 successful probe rows to fit, got {len(good)}")
    logs = np.log([e for e, _ in good])
    y = np.array([v for _, v in good])
    design = np.column_stack([logs * logs, logs, np.ones_like(logs)])
    coef, *_ = np.linalg.lstsq(design, y, rcond=None)
    residual = design @ coef - y
    rel = float(np.linalg.norm(residual) / np.linalg.norm(y))
    return FitResult(
        leading=float(coef[0]),
        linear=float(coef[1]),
        constant=float(coef[2]),
        rel_residual=rel,
    )
