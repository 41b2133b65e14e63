"""Exact integer combinatorics.

Everything here works on Python ints, which are arbitrary precision, so no
value is ever rounded. Rationals use :class:`fractions.Fraction`, whose
comparisons cross-multiply integers.
"""

from fractions import Fraction
from math import comb

ExactRatio = Fraction


def binom(a: int, k: int) -> int:
    """Generalized binomial coefficient a(a-1)...(a-k+1)/k!.

    Returns 0 for k < 0. A negative upper index is allowed and uses
    binom(-a, k) = (-1)^k binom(a+k-1, k).
    """
    if k < 0:
        return 0
    if a >= 0:
        return comb(a, k)
    value = comb(k - a - 1, k)
    return -value if k & 1 else value


def ceil_div(n: int, d: int) -> int:
    if d <= 0:
        raise ValueError(f"divisor must be positive, got {d}")
    return -(-n // d)


def magic_lhs(n: int, d: int, k: int) -> int:
    return sum((-1) ** (k - j) * binom(d - j, k - j) * binom(n, j) for j in range(k + 1))


def magic2_lhs(n: int, d: int, k: int) -> int:
    return sum(
        (-1) ** (k - l) * binom(n + l - 1, l) * binom(d, k - l) for l in range(k + 1)
    )


def identity_magic(n: int, d: int, k: int) -> bool:
    """Check sum_j (-1)^(k-j) C(d-j,k-j) C(n,j) == C(n-d+k-1,k) for 0 <= k <= d <= n."""
    if not 0 <= k <= d <= n:
        raise ValueError(f"need 0 <= k <= d <= n, got n={n}, d={d}, k={k}")
    return magic_lhs(n, d, k) == binom(n - d + k - 1, k)


def identity_magic2(n: int, d: int, k: int) -> bool:
    """Check sum_l (-1)^(k-l) C(n+l-1,l) C(d,k-l) == C(n-d+k-1,k) for n, d, k >= 0."""
    if min(n, d, k) < 0:
        raise ValueError(f"need n, d, k >= 0, got n={n}, d={d}, k={k}")
    return magic2_lhs(n, d, k) == binom(n - d + k - 1, k)
