"""Per-theorem verifiers and exhaustive b-sum sweeps for powers of the maximal ideal."""

from __future__ import annotations

from dataclasses import dataclass, field

from qdepth.combinatorics import binom
from qdepth.power import (
    b_closed,
    b_sum,
    beta_edge_plus,
    beta_quotient_power,
    expected_m,
    f_ratio_ge_one,
    phi,
    qdepth_power_fast,
    qdepth_quotient_power_fast,
)

THEOREMS = ("upper_bound", "t_ge_n_minus_1", "square", "teo3", "remark_zero")


class HypothesisError(ValueError):
    """(n, t) does not satisfy the hypothesis of the requested theorem."""


@dataclass(frozen=True)
class VerdictRecord:
    theorem: str
    n: int
    t: int
    passed: bool
    qdepth: int
    expected: int
    witness_beta: int | None = None

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def proven_region(n: int, t: int) -> bool:
    """Cells where qdepth(m^t) = ceil(n/(t+1)) is a theorem, not a conjecture."""
    return t <= 2 or t >= n - 1 or n <= (t + 1) * (t + 3)


def verify_theorem(theorem: str, n: int, t: int) -> VerdictRecord:
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem {theorem!r}; choose from {', '.join(THEOREMS)}")
    if n < 2 or t < 1:
        raise HypothesisError(f"need n >= 2 and t >= 1, got n={n}, t={t}")
    m = expected_m(n, t)

    if theorem == "upper_bound":
        q = qdepth_power_fast(n, t).qdepth
        edge = beta_edge_plus(n, t)
        return VerdictRecord(theorem, n, t, q <= m and edge < 0, q, m, edge)

    if theorem == "remark_zero":
        N = n * t
        res = qdepth_quotient_power_fast(n, t)
        feasible = all(beta_quotient_power(n, t, N - n, k) >= 0 for k in range(N - n + 1))
        edge = beta_quotient_power(n, t, N - n + 1, t)
        ok = (
            res.polarized_qdepth == N - n
            and feasible
            and edge == -binom(n + t - 2, t - 1)
            and edge < 0
        )
        return VerdictRecord(theorem, n, t, ok, res.qdepth, 0, edge)

    if theorem == "t_ge_n_minus_1":
        if t < n - 1:
            raise HypothesisError(f"needs t >= n - 1, got n={n}, t={t}")
        expected = 1
    elif theorem == "square":
        if t != 2:
            raise HypothesisError(f"needs t = 2, got t={t}")
        expected = m
    else:  # teo3
        if n > (t + 1) * (t + 3):
            raise HypothesisError(f"needs n <= (t+1)(t+3) = {(t + 1) * (t + 3)}, got n={n}")
        expected = m
    q = qdepth_power_fast(n, t).qdepth
    return VerdictRecord(theorem, n, t, q == expected, q, expected)


@dataclass
class SweepOutcome:
    name: str
    checked: int = 0
    violations: list[tuple] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def record(self, ok: bool, case: tuple) -> None:
        self.checked += 1
        if not ok:
            self.violations.append(case)


def sweep_b_closed_form(n_max: int = 40, k_max: int = 10, t_max: int = 6) -> SweepOutcome:
    """b_sum == b_closed for every 1 <= m <= k."""
    out = SweepOutcome("b closed form (m <= k)")
    for n in range(1, n_max + 1):
        for k in range(1, k_max + 1):
            for m in range(1, k + 1):
                for t in range(1, t_max + 1):
                    out.record(b_sum(n, m, t, k) == b_closed(n, m, t, k), (n, m, t, k))
    return out


def sweep_b_large_n(n_max: int = 60, bound: int = 8) -> tuple[SweepOutcome, SweepOutcome]:
    """Positivity of b for n >= m(t+1) + k - 1.

    The first outcome covers k = 1. The second covers every k with m <= k + t.
    """
    first = SweepOutcome("b(n,m,t,1) >= 0")
    second = SweepOutcome("b(n,m,t,k) >= 0 when m <= k + t")
    for n in range(1, n_max + 1):
        for m in range(1, bound + 1):
            for t in range(1, bound + 1):
                for k in range(1, bound + 1):
                    if n < m * (t + 1) + k - 1:
                        continue
                    if k == 1:
                        first.record(b_sum(n, m, t, 1) >= 0, (n, m, t))
                    if m <= k + t:
                        second.record(b_sum(n, m, t, k) >= 0, (n, m, t, k))
    return first, second


def sweep_b_k2(t_max: int = 6, m_extra: int = 6, reading: str = "m_ge") -> SweepOutcome:
    """b(n,m,t,2) >= 0 for t >= 3 and m(t+1)+1 <= n <= (m+1)(t+1).

    ``reading="m_ge"`` takes t+3 <= m <= t+m_extra, and ``"m_le"`` takes
    1 <= m <= t+3.
    """
    out = SweepOutcome(f"b(n,m,t,2) >= 0 [{reading}]")
    for t in range(3, t_max + 1):
        ms = range(t + 3, t + m_extra + 1) if reading == "m_ge" else range(1, t + 4)
        for m in ms:
            for n in range(m * (t + 1) + 1, (m + 1) * (t + 1) + 1):
                out.record(b_sum(n, m, t, 2) >= 0, (n, m, t))
    return out


def sweep_f_descent(n_max: int = 60, m_max: int = 11, t_max: int = 7) -> SweepOutcome:
    """Does n >= phi(0) force f(j) >= f(j+1) for all j < k?

    This is data, not a check that must pass; many cases fail.
    """
    out = SweepOutcome("f descends once n >= phi(0)")
    for n in range(1, n_max + 1):
        for m in range(1, m_max + 1):
            for k in range(1, m):
                for t in range(1, t_max + 1):
                    if n >= phi(m, k, t, 0):
                        ok = all(f_ratio_ge_one(n, m, t, k, j) for j in range(k))
                        out.record(ok, (n, m, t, k))
    return out
