"""Closed-form rate / coherence / row-count calculators.

Asymptotic expressions are evaluated with their hidden constant set to 1 and
labeled "indicator" in CLI output: they guide parameter planning and are
never used as pass/fail certificates.
"""

from __future__ import annotations

import math

from .errors import DomainError


def q_ary_entropy(q: int, delta: float) -> float:
    """h_q(delta), with h_q(0) = 0 and h_q(1) = log_q(q-1) by continuity."""
    if q < 2:
        raise DomainError(f"alphabet size must be >= 2, got {q}")
    if not (0.0 <= delta <= 1.0):
        raise DomainError(f"delta must lie in [0, 1], got {delta}")
    lq = math.log(q)
    out = delta * math.log(q - 1) / lq if q > 2 else 0.0
    if 0.0 < delta:
        out -= delta * math.log(delta) / lq
    if delta < 1.0:
        out -= (1.0 - delta) * math.log(1.0 - delta) / lq
    return out


def gv_rate(q: int, delta: float) -> float:
    """Achievable rate 1 - h_q(delta) at relative distance delta."""
    if not (0.0 <= delta < 1.0 - 1.0 / q):
        raise DomainError(f"need 0 <= delta < 1 - 1/q, got {delta}")
    return 1.0 - q_ary_entropy(q, delta)


def gv_critical_expansion(q: int, epsilon: float) -> float:
    """Two-term series for 1 - h_q(1 - (1+eps)/q) at small eps."""
    lq = math.log(q)
    return (epsilon**2 / (2 * (q - 1) * lq)
            - epsilon**3 * (q - 2) / (6 * (q - 1) ** 2 * lq))


def mrrw_rate_bound(q: int, delta: float) -> float:
    """Linear-programming impossibility ceiling on rate at distance delta."""
    if not (0.0 <= delta <= 1.0 - 1.0 / q):
        raise DomainError(f"need 0 <= delta <= 1 - 1/q, got {delta}")
    arg = (q - 1 - (q - 2) * delta
           - 2.0 * math.sqrt((q - 1) * delta * (1.0 - delta))) / q
    arg = min(max(arg, 0.0), 1.0)  # clamp endpoint rounding only
    return q_ary_entropy(q, arg)


def coherence_lower_indicator(n: int, N: int) -> float:
    """Order-of-magnitude floor on squared coherence of an N-point code in C^n."""
    if not (N > n >= 2):
        raise DomainError(f"need N > n >= 2, got n={n}, N={N}")
    ln_n = math.log(N)
    if ln_n >= n:
        raise DomainError("need log N < n")
    return ln_n / (n * math.log(n / ln_n))


def row_bound_indicators(
    L: int, N: int, r: int | None = None, n_prime: int | None = None
) -> dict[str, float]:
    """Row-count planning expressions, each with constant 1, side by side."""
    if L < 2:
        raise DomainError("need L >= 2")
    out = {
        "disjunct_upper": L**2 * math.log(N),
        "disjunct_lower": L**2 * math.log(N) / math.log(L),
        "rip_rows": L**2 * math.log(N),
    }
    if r is not None and n_prime is not None:
        out["design_rows"] = n_prime**2 * N ** (1.0 / r) / r
    return out


def rip_rows_indicator(L: int, N: int, q: int, alpha: float) -> float:
    """Rows needed for an RIP-2 matrix from a spherical code embedding."""
    if alpha <= 0:
        raise DomainError("need alpha > 0")
    return L**2 * math.log(N) * q / alpha**2
