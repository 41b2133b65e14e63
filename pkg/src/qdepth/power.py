"""Closed forms for the polarized powers of the maximal graded ideal.

Throughout, n is the number of variables, t the power, and
m = ceil(n / (t + 1)). The polarization I_t of m^t lives in n*t variables,
and A = n*t - n is the number of added variables.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import accumulate
from typing import Iterator

from qdepth.combinatorics import binom, ceil_div
from qdepth.core import QDepthResult, max_feasible


def _check_nt(n: int, t: int) -> None:
    if n < 2 or t < 1:
        raise ValueError(f"need n >= 2 and t >= 1, got n={n}, t={t}")


def _check_dk(n: int, t: int, d: int, k: int) -> None:
    _check_nt(n, t)
    if not 0 <= k <= d <= n * t:
        raise ValueError(f"need 0 <= k <= d <= {n * t}, got d={d}, k={k}")


def expected_m(n: int, t: int) -> int:
    return ceil_div(n, t + 1)


def alpha_power(n: int, t: int, k: int) -> int:
    """Squarefree degree-k monomials of the polarized ring outside I_t."""
    _check_nt(n, t)
    if not 0 <= k <= n * t:
        raise ValueError(f"need 0 <= k <= {n * t}, got k={k}")
    return sum(binom(n * t - n - j, k - j) * binom(n + j - 1, j) for j in range(t))


def beta_quotient_power(n: int, t: int, d: int, k: int) -> int:
    _check_dk(n, t, d, k)
    a = n * t - n - d + k - 1
    return sum(binom(n + l - 1, l) * binom(a - l, k - l) for l in range(t))


def beta_ideal_power(n: int, t: int, d: int, k: int) -> int:
    _check_dk(n, t, d, k)
    return binom(n * t - d + k - 1, k) - beta_quotient_power(n, t, d, k)


def beta_edge_plus(n: int, t: int) -> int:
    """beta_{t+1} at d = nt - n + m + 1, from the alternating edge expression."""
    _check_nt(n, t)
    m = expected_m(n, t)
    tail = sum(
        (-1) ** (t - l) * binom(n + l - 1, l) * binom(m + 1, t + 1 - l) for l in range(t)
    )
    return binom(n - m + t - 1, t + 1) + tail


def beta_edge_plus_closed(n: int, t: int) -> int:
    """C(n+t, t+1) - (m+1) C(n+t-1, t); always negative."""
    _check_nt(n, t)
    m = expected_m(n, t)
    return binom(n + t, t + 1) - (m + 1) * binom(n + t - 1, t)


def beta_edge_plus_printed(n: int, t: int) -> int:
    """The closed form with an extra -C(n-m+t-1, t) term.

    It does not equal the true beta value (at n = t = 2 it gives -3 against
    -2). Only kept so the discrepancy stays pinned by a test.
    """
    m = expected_m(n, t)
    return -binom(n - m + t - 1, t) - binom(n + t - 1, t) * (m + 1) + binom(n + t, t + 1)


def _edge_range(n: int, t: int, k: int) -> None:
    _check_nt(n, t)
    top = n * t - n + expected_m(n, t)
    if not t + 1 <= k <= top:
        raise ValueError(f"need {t + 1} <= k <= {top}, got k={k}")


def beta_edge(n: int, t: int, k: int) -> int:
    """beta_k at d = nt - n + m for t+1 <= k <= nt - n + m."""
    _edge_range(n, t, k)
    m = expected_m(n, t)
    tail = sum((-1) ** (k - l) * binom(n + l - 1, l) * binom(m, k - l) for l in range(t))
    return binom(n - m + k - 1, k) - tail


def eqi2_sum(n: int, t: int, k: int) -> int:
    _edge_range(n, t, k)
    m = expected_m(n, t)
    return sum(
        (-1) ** j * binom(n + k - j - 1, k - j) * binom(m, j) for j in range(k - t + 1)
    )


def b_sum(n: int, m: int, t: int, k: int) -> int:
    """b(n,m,t,k) = sum_{j<=k} (-1)^j C(k+t, j) C(n-j, m-j)."""
    return sum((-1) ** j * binom(k + t, j) * binom(n - j, m - j) for j in range(k + 1))


def b_closed(n: int, m: int, t: int, k: int) -> int:
    if not 1 <= m <= k:
        raise ValueError(f"closed form needs 1 <= m <= k, got m={m}, k={k}")
    return binom(n - t - k, m)


def _check_f(m: int, k: int, j: int) -> None:
    if m < k + 1:
        raise ValueError(f"need m >= k + 1, got m={m}, k={k}")
    if not 0 <= j <= k:
        raise ValueError(f"need 0 <= j <= k, got j={j}, k={k}")


def f_term(n: int, m: int, t: int, k: int, j: int) -> int:
    _check_f(m, k, j)
    return binom(k + t, j) * binom(n - j, m - j)


def f_ratio_ge_one(n: int, m: int, t: int, k: int, j: int) -> bool:
    """Whether f(j) >= f(j+1), by comparing the two exact terms."""
    _check_f(m, k, j)
    return binom(k + t, j) * binom(n - j, m - j) >= binom(k + t, j + 1) * binom(n - j - 1, m - j - 1)


def f_ratio_exact(n: int, m: int, t: int, k: int, j: int) -> Fraction:
    """f(j) / f(j+1) = (j+1)(n-j) / ((k+t-j)(m-j))."""
    return Fraction((j + 1) * (n - j), (k + t - j) * (m - j))


def f_ratio_printed(n: int, m: int, t: int, k: int, j: int) -> Fraction:
    """(n-k+j+1)(j+1) / ((m-k+j+1)(k+t-j)), a ratio that is not f(j)/f(j+1) in general."""
    return Fraction((n - k + j + 1) * (j + 1), (m - k + j + 1) * (k + t - j))


def phi(m: int, k: int, t: int, j: int) -> Fraction:
    if j < 0:
        raise ValueError(f"need j >= 0, got {j}")
    return m + k + t - 2 * j - 1 + Fraction((m - k) * (k + t + 1), j + 1)


def _rows_from_top(top: list[int], N: int) -> Iterator[tuple[int, list[int]]]:
    # beta_k^d = beta_k^{d-1} - beta_{k-1}^{d-1}, so row d-1 is the prefix sum of row d
    row = top
    yield N, row
    for d in range(N - 1, -1, -1):
        row = list(accumulate(row))
        yield d, row


def ideal_power_rows(n: int, t: int) -> Iterator[tuple[int, list[int]]]:
    """Beta rows of I_t for d = nt down to 0, each of length nt + 1.

    Only entries k <= d are beta values in the usual sense.
    """
    _check_nt(n, t)
    N = n * t
    return _rows_from_top([beta_ideal_power(n, t, N, k) for k in range(N + 1)], N)


def quotient_power_rows(n: int, t: int) -> Iterator[tuple[int, list[int]]]:
    _check_nt(n, t)
    N = n * t
    return _rows_from_top([beta_quotient_power(n, t, N, k) for k in range(N + 1)], N)


def qdepth_power_fast(n: int, t: int) -> QDepthResult:
    """Quasi depth of m^t (viewed as the quotient m^t / 0) from the closed-form betas.

    The top row d = nt comes from the closed form. Lower rows come from the
    exact Pascal recurrence. Every d is checked.
    """
    N = n * t
    return max_feasible(ideal_power_rows(n, t), N, N - n)


def qdepth_quotient_power_fast(n: int, t: int) -> QDepthResult:
    """Quasi depth of S / m^t, the quotient ring rather than the ideal."""
    N = n * t
    return max_feasible(quotient_power_rows(n, t), N, N - n)


def criterion_b(n: int, t: int, literal: bool = False) -> bool:
    """Sufficient condition for qdepth(m^t) = m, in terms of b-sums.

    Checks b(n + t + kappa - 1, m, t, kappa) >= 0 for 1 <= kappa <= nt - n - t + m.
    With ``literal`` the first argument is n + kappa - 1 instead; that variant
    already fails at n = t = 2, where the conclusion holds.
    """
    _check_nt(n, t)
    m = expected_m(n, t)
    shift = 0 if literal else t
    return all(
        b_sum(n + shift + kappa - 1, m, t, kappa) >= 0
        for kappa in range(1, n * t - n - t + m + 1)
    )
