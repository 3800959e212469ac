"""Exact integer and rational building blocks: binomials and Bernoulli numbers.

Everything here is computed over arbitrary-precision integers and
``fractions.Fraction``; no floating point enters at any stage.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

__all__ = ["binomial", "bernoulli"]


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k), with C(n, k) = 0 for k < 0 or k > n.

    The out-of-range convention keeps sum bounds simple at call sites.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


_BERNOULLI: list[Fraction] = [Fraction(1)]


def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n as an exact Fraction, convention B_1 = -1/2.

    Computed by the defining recursion sum_{j=0}^{m} C(m+1, j) B_j = 0
    (m >= 1) and memoized up to the largest index requested.  Only even
    indices are consumed downstream, where both B_1 conventions agree.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    while len(_BERNOULLI) <= n:
        m = len(_BERNOULLI)
        acc = sum(
            (Fraction(comb(m + 1, j)) * _BERNOULLI[j] for j in range(m)),
            Fraction(0),
        )
        _BERNOULLI.append(-acc / (m + 1))
    return _BERNOULLI[n]
