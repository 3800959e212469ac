"""Central factorial coefficients of the first kind and related identities.

The central factorial polynomial is

    x^[n] = x * prod_{i=1}^{n-1} (x + n/2 - i) = sum_k t(n, k) x^k,

and its monomial coefficients t(n, k) are the central factorial
coefficients of the first kind.  The classical "central differentials of
nothing" are the rescaling D^k 0^[n] = k! * t(n, k).

For odd arguments the t(*, *) are tied to the Norlund numbers by

    t(2m+1, 2n+1) = 2^{2(n-m)} C(2m, 2n) D^(2m+1)_{2m-2n},

which this module verifies exactly, and they give an alternative route to
the odd residue constants f_{2m+1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .norlund import d_norlund
from .zexpr import ZetaExpr

__all__ = [
    "central_t",
    "IdentityCheck",
    "verify_central_norlund_identity",
    "f_odd_central",
]


@lru_cache(maxsize=None)
def _central_poly(n: int) -> tuple[Fraction, ...]:
    """Ascending monomial coefficients of x^[n], by exact expansion."""
    coeffs = [Fraction(0), Fraction(1)]  # the polynomial x
    for i in range(1, n):
        shift = Fraction(n, 2) - i
        # multiply by (x + shift)
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for p, c in enumerate(coeffs):
            nxt[p + 1] += c
            nxt[p] += c * shift
        coeffs = nxt
    return tuple(coeffs)


def central_t(n: int, k: int) -> Fraction:
    """Coefficient t(n, k) of x^k in x^[n]; 0 outside 1 <= k <= n or when
    n - k is odd."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if k < 0:
        raise ValueError("k must be >= 0")
    if k > n:
        return Fraction(0)
    return _central_poly(n)[k]


@dataclass(frozen=True)
class IdentityCheck:
    m: int
    n: int
    lhs: Fraction
    rhs: Fraction

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs


def verify_central_norlund_identity(
    m_max: int, superscript: str = "corrected"
) -> list[IdentityCheck]:
    """Check t(2m+1, 2n+1) = 2^{2(n-m)} C(2m, 2n) D^(M)_{2m-2n} exactly
    for all 0 <= n <= m <= m_max.

    ``superscript`` selects the upper index M of the Norlund number:
    "corrected" uses M = 2m+1 (which holds identically); "printed" uses
    M = m as it appears in the source relation, which already fails at
    (m, n) = (1, 0).  Failures are reported, never raised.
    """
    if m_max < 1:
        raise ValueError("m_max must be >= 1")
    if superscript not in ("corrected", "printed"):
        raise ValueError("superscript must be 'corrected' or 'printed'")
    out = []
    for m in range(m_max + 1):
        for n in range(m + 1):
            lhs = central_t(2 * m + 1, 2 * n + 1)
            upper = 2 * m + 1 if superscript == "corrected" else m
            if upper < 1:
                continue
            rhs = (
                Fraction(4) ** (n - m)
                * comb(2 * m, 2 * n)
                * d_norlund(upper, m - n)
            )
            out.append(IdentityCheck(m, n, lhs, rhs))
    return out


@lru_cache(maxsize=None)
def f_odd_central(m: int) -> ZetaExpr:
    """f_{2m+1} from central differentials of nothing.

    f_{2m+1} = (-1)^m sum_{n=0}^{m} (-1)^n 2^{2(m-n)}
               * D^{2n+1} 0^[2m+1] / ((2m)! (2n+1) pi^{2n+1}) * A_n,

    with A_0 = log 2 and A_n = (1 - 2^{-2n}) zeta(2n+1) for n >= 1, and
    D^{2n+1} 0^[2m+1] = (2n+1)! t(2m+1, 2n+1).  The n = 0 (log 2) term
    carries the same prefactor pattern as the zeta terms; this fixes the
    overall normalization, pinned once against f_1 and f_3 and then held
    fixed for all m.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    expr = ZetaExpr.zero()
    for n in range(m + 1):
        diff_nothing = factorial(2 * n + 1) * central_t(2 * m + 1, 2 * n + 1)
        coeff = (
            Fraction((-1) ** (m + n) * 4 ** (m - n))
            * diff_nothing
            / (factorial(2 * m) * (2 * n + 1))
        )
        if n == 0:
            atom = ZetaExpr.log2(1)
        else:
            atom = ZetaExpr.zeta(2 * n + 1, 1 - Fraction(4) ** (-n))
        expr = expr + (coeff * atom).mul_pi(-(2 * n + 1))
    return expr
