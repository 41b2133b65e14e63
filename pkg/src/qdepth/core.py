"""Quasi depth straight from the definition, by enumerating squarefree monomials.

This module is the oracle: it counts monomials one by one and never uses a
closed form, so it can check the formulas in :mod:`qdepth.power`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from qdepth.combinatorics import binom
from qdepth.monomials import (
    MonomialIdeal,
    QuotientPresentation,
    colex_subsets,
    polarize_pair,
)


@dataclass(frozen=True)
class AlphaVector:
    """counts[k] = number of squarefree degree-k monomials in outer but not inner."""

    nvars: int
    counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.counts) != self.nvars + 1:
            raise ValueError(f"expected {self.nvars + 1} counts, got {len(self.counts)}")
        for k, a in enumerate(self.counts):
            if not 0 <= a <= binom(self.nvars, k):
                raise ValueError(f"alpha_{k} = {a} outside [0, C({self.nvars},{k})]")

    def __getitem__(self, k: int) -> int:
        return self.counts[k]


@dataclass(frozen=True)
class QDepthResult:
    """Outcome of a quasi depth computation.

    ``certificate`` is the full beta row at d = polarized_qdepth (all
    entries >= 0). ``witness`` is ``(d, k, beta)`` with beta < 0 at
    d = polarized_qdepth + 1, or None when every d up to nvars is feasible.
    ``feasible_interval`` records whether every d below the maximum was
    feasible too; nothing guarantees this, so it is reported rather than
    assumed.
    """

    qdepth: int
    polarized_qdepth: int
    added_vars: int
    nvars: int
    certificate: tuple[int, ...]
    witness: tuple[int, int, int] | None
    feasible_interval: bool

    def to_dict(self) -> dict:
        return {
            "qdepth": self.qdepth,
            "polarized_qdepth": self.polarized_qdepth,
            "added_vars": self.added_vars,
            "nvars": self.nvars,
            "certificate": list(self.certificate),
            "witness": list(self.witness) if self.witness else None,
            "feasible_interval": self.feasible_interval,
        }


def _masks(ideal: MonomialIdeal) -> list[int]:
    return [g.mask() for g in ideal.generators]


def alpha_enumerate(q: QuotientPresentation) -> AlphaVector:
    if not (q.inner.is_squarefree() and q.outer.is_squarefree()):
        raise ValueError("alpha_enumerate needs squarefree ideals; polarize first")
    n = q.nvars
    outer, inner = _masks(q.outer), _masks(q.inner)
    counts = []
    for k in range(n + 1):
        c = 0
        for support in colex_subsets(n, k):
            u = 0
            for i in support:
                u |= 1 << i
            if any(g & u == g for g in outer) and not any(g & u == g for g in inner):
                c += 1
        counts.append(c)
    return AlphaVector(n, tuple(counts))


def beta_from_alpha(alpha: AlphaVector | Sequence[int], d: int, k: int) -> int:
    """beta_k^d = sum_j (-1)^(k-j) C(d-j, k-j) alpha_j."""
    counts = alpha.counts if isinstance(alpha, AlphaVector) else tuple(alpha)
    if not 0 <= k <= d <= len(counts) - 1:
        raise ValueError(f"need 0 <= k <= d <= {len(counts) - 1}, got d={d}, k={k}")
    return sum((-1) ** (k - j) * binom(d - j, k - j) * counts[j] for j in range(k + 1))


def beta_row(alpha: AlphaVector | Sequence[int], d: int) -> list[int]:
    return [beta_from_alpha(alpha, d, k) for k in range(d + 1)]


def alpha_from_beta(beta_row: Sequence[int], d: int, k: int) -> int:
    """Invert the beta transform: alpha_k = sum_j C(d-j, k-j) beta_j^d."""
    if not 0 <= k <= d:
        raise ValueError(f"need 0 <= k <= d, got d={d}, k={k}")
    if len(beta_row) <= k:
        raise ValueError(f"beta row of length {len(beta_row)} has no entry {k}")
    return sum(binom(d - j, k - j) * beta_row[j] for j in range(k + 1))


def max_feasible(rows_desc: Iterable[tuple[int, Sequence[int]]], nvars: int, added_vars: int = 0) -> QDepthResult:
    """Find the largest feasible d from beta rows given for d = nvars down to 0.

    Every d is examined; the first feasible row met from the top is the
    maximum, and the rest only feed ``feasible_interval``.
    """
    best = None
    certificate: tuple[int, ...] = ()
    witness = None
    above: Sequence[int] | None = None
    interval = True
    for d, row in rows_desc:
        head = row[: d + 1]
        feasible = min(head) >= 0
        if best is None:
            if feasible:
                best = d
                certificate = tuple(head)
                if above is not None:
                    k = next(i for i, b in enumerate(above[: d + 2]) if b < 0)
                    witness = (d + 1, k, above[k])
            else:
                above = row
        elif not feasible:
            interval = False
    if best is None:
        raise ArithmeticError("no feasible d found; beta row at d=0 must be feasible")
    return QDepthResult(
        qdepth=best - added_vars,
        polarized_qdepth=best,
        added_vars=added_vars,
        nvars=nvars,
        certificate=certificate,
        witness=witness,
        feasible_interval=interval,
    )


def qdepth_squarefree(q: QuotientPresentation, added_vars: int = 0) -> QDepthResult:
    alpha = alpha_enumerate(q)
    n = q.nvars
    rows = ((d, beta_row(alpha, d)) for d in range(n, -1, -1))
    return max_feasible(rows, n, added_vars)


def qdepth_general(inner: MonomialIdeal, outer: MonomialIdeal) -> QDepthResult:
    """Quasi depth of outer/inner: polarize jointly, compute, subtract added variables."""
    QuotientPresentation(inner, outer)
    inner_p, outer_p, added, _ = polarize_pair(inner, outer)
    return qdepth_squarefree(QuotientPresentation(inner_p, outer_p), added)
