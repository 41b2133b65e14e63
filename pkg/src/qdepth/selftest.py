"""Identity, oracle-equivalence and b-sum suites behind ``qdepth selftest``."""

from __future__ import annotations

from dataclasses import dataclass

from qdepth.combinatorics import binom, identity_magic, identity_magic2
from qdepth.core import alpha_enumerate, beta_from_alpha, qdepth_general
from qdepth.monomials import MonomialIdeal, QuotientPresentation, maximal_power_ideal, polarize
from qdepth.power import alpha_power, beta_quotient_power, qdepth_power_fast
from qdepth.theorems import (
    SweepOutcome,
    sweep_b_closed_form,
    sweep_b_k2,
    sweep_b_large_n,
    sweep_f_descent,
)


@dataclass(frozen=True)
class Level:
    identity_bound: int
    binom_bound: int
    oracle_cap: int
    b_sweeps: bool


LEVELS = {
    "quick": Level(identity_bound=15, binom_bound=30, oracle_cap=9, b_sweeps=False),
    "full": Level(identity_bound=30, binom_bound=60, oracle_cap=12, b_sweeps=True),
}


def identity_suite(bound: int) -> list[SweepOutcome]:
    magic = SweepOutcome("alternating identity, 0 <= k <= d <= n")
    magic2 = SweepOutcome("alternating identity, all n, d, k >= 0")
    for n in range(bound + 1):
        for d in range(bound + 1):
            for k in range(bound + 1):
                if k <= d <= n:
                    magic.record(identity_magic(n, d, k), (n, d, k))
                magic2.record(identity_magic2(n, d, k), (n, d, k))
    return [magic, magic2]


def binom_suite(bound: int) -> list[SweepOutcome]:
    pascal = SweepOutcome("binom Pascal rule")
    negation = SweepOutcome("binom negation rule")
    symmetry = SweepOutcome("binom symmetry")
    for a in range(-bound, bound + 1):
        for k in range(bound + 1):
            if k >= 1:
                pascal.record(binom(a, k) == binom(a - 1, k - 1) + binom(a - 1, k), (a, k))
            if a >= 0:
                negation.record(binom(-a, k) == (-1) ** k * binom(a + k - 1, k), (a, k))
                if k <= a:
                    symmetry.record(binom(a, k) == binom(a, a - k), (a, k))
    return [pascal, negation, symmetry]


def oracle_pairs(cap: int) -> list[tuple[int, int]]:
    return [(n, t) for n in range(2, cap + 1) for t in range(1, cap + 1) if n * t <= cap]


def oracle_suite(cap: int) -> list[SweepOutcome]:
    alpha = SweepOutcome(f"alpha formula vs enumeration, nt <= {cap}")
    beta = SweepOutcome(f"beta formula vs transform of alpha, nt <= {cap}")
    qd = SweepOutcome(f"fast qdepth vs oracle qdepth, nt <= {cap}")
    for n, t in oracle_pairs(cap):
        N = n * t
        ideal = polarize(maximal_power_ideal(n, t)).ideal
        quotient = alpha_enumerate(QuotientPresentation(ideal, MonomialIdeal.unit(N)))
        for k in range(N + 1):
            alpha.record(quotient[k] == alpha_power(n, t, k), (n, t, k))
        for d in range(N + 1):
            for k in range(d + 1):
                beta.record(
                    beta_from_alpha(quotient, d, k) == beta_quotient_power(n, t, d, k), (n, t, d, k)
                )
        oracle = qdepth_general(MonomialIdeal.zero(n), maximal_power_ideal(n, t))
        fast = qdepth_power_fast(n, t)
        qd.record(oracle == fast, (n, t))
    return [alpha, beta, qd]


def b_sum_suite() -> list[SweepOutcome]:
    return [
        sweep_b_closed_form(),
        *sweep_b_large_n(),
        sweep_b_k2(reading="m_ge"),
    ]


def informational_suite() -> list[SweepOutcome]:
    """Sweeps whose violations are reported but do not fail the self-test."""
    return [sweep_b_k2(reading="m_le"), sweep_f_descent()]


def run_selftest(depth: str = "quick", echo=print) -> bool:
    level = LEVELS[depth]
    suites = [
        *identity_suite(level.identity_bound),
        *binom_suite(level.binom_bound),
        *oracle_suite(level.oracle_cap),
    ]
    if level.b_sweeps:
        suites.extend(b_sum_suite())
    ok = True
    for s in suites:
        ok &= s.ok
        mark = "ok" if s.ok else "FAIL"
        echo(f"[{mark}] {s.name}: {s.checked} checked, {len(s.violations)} violations")
        for case in s.violations[:5]:
            echo(f"       violation at {case}")
    if level.b_sweeps:
        for s in informational_suite():
            echo(f"[info] {s.name}: {s.checked} checked, {len(s.violations)} violations")
    return ok
