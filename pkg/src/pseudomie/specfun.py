"""Polynomial confluent hypergeometric and Laguerre evaluation.

The truncating series 1F1(-n, sigma, x) and the associated Laguerre
polynomials are evaluated through the three-term recurrence in the degree,
which is stable for moderate x where the alternating factorial sum loses
digits.  Gamma-function ratios go through log-gamma so normalization
constants never form an overflowing Gamma directly.
"""

from __future__ import annotations

import math

import numpy as np


def _laguerre_recurrence(n: int, p: float, x):
    """L_n^p(x) by upward recurrence in n; no domain checks (internal)."""
    x = np.asarray(x, dtype=float)
    prev = np.ones_like(x)
    if n == 0:
        return prev
    cur = 1.0 + p - x
    for k in range(2, n + 1):
        prev, cur = cur, ((2.0 * k - 1.0 + p - x) * cur - (k - 1.0 + p) * prev) / k
    return cur


def laguerre(n: int, p: float, x):
    """Associated Laguerre polynomial L_n^p(x).

    Accepts scalar or array x.  Requires p > -1 so that the x^p e^-x
    orthogonality weight is integrable.
    """
    if n < 0 or n != int(n):
        raise ValueError(f"degree must be a nonnegative integer, got {n}")
    if not p > -1.0:
        raise ValueError(f"Laguerre parameter must exceed -1, got {p}")
    out = _laguerre_recurrence(int(n), p, x)
    return float(out) if np.isscalar(x) else out


def confluent_1f1_neg_int(n: int, sigma: float, x):
    """The degree-n polynomial 1F1(-n, sigma, x).

    Evaluated as n!/(sigma)_n * L_n^{sigma-1}(x); the Pochhammer prefactor
    is an exact finite product, and the recurrence supplies the polynomial.
    sigma may not be one of 0, -1, ..., -(n-1), which would zero a series
    denominator.
    """
    if n < 0 or n != int(n):
        raise ValueError(f"degree must be a nonnegative integer, got {n}")
    n = int(n)
    if sigma == int(sigma) and -(n - 1) <= sigma <= 0:
        raise ValueError(
            f"sigma={sigma} is a nonpositive integer in the series denominators"
        )
    prefactor = 1.0
    for k in range(n):
        prefactor *= (k + 1.0) / (sigma + k)
    out = prefactor * _laguerre_recurrence(n, sigma - 1.0, x)
    return float(out) if np.isscalar(x) else out


def log_gamma_ratio(num, den) -> float:
    """log of prod Gamma(num_i) / prod Gamma(den_j) without forming Gammas.

    All arguments must be positive; safe for arguments far beyond the
    overflow point of Gamma itself.
    """
    total = 0.0
    for v in num:
        if not v > 0.0:
            raise ValueError(f"gamma argument must be positive, got {v}")
        total += math.lgamma(v)
    for v in den:
        if not v > 0.0:
            raise ValueError(f"gamma argument must be positive, got {v}")
        total -= math.lgamma(v)
    return total
