"""Monomials, monomial ideals, squarefree enumeration and polarization."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Sequence


@dataclass(frozen=True, order=True)
class Monomial:
    """A monomial x1^e1 * ... * xn^en stored as its exponent vector."""

    exponents: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(int(e) for e in self.exponents))
        if any(e < 0 for e in self.exponents):
            raise ValueError(f"negative exponent in {self.exponents}")

    @classmethod
    def one(cls, nvars: int) -> Monomial:
        return cls((0,) * nvars)

    @classmethod
    def from_support(cls, nvars: int, support: Iterable[int]) -> Monomial:
        """Squarefree monomial on the given 0-based variable indices."""
        exps = [0] * nvars
        for i in support:
            exps[i] = 1
        return cls(tuple(exps))

    @property
    def nvars(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.exponents) if e)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    def mask(self) -> int:
        """Bitmask of the support; only meaningful for squarefree monomials."""
        return sum(1 << i for i, e in enumerate(self.exponents) if e)

    def __str__(self) -> str:
        parts = []
        for i, e in enumerate(self.exponents, start=1):
            if e == 1:
                parts.append(f"x{i}")
            elif e > 1:
                parts.append(f"x{i}^{e}")
        return "*".join(parts) or "1"


def divides(a: Monomial, b: Monomial) -> bool:
    if a.nvars != b.nvars:
        raise ValueError(f"variable count mismatch: {a.nvars} vs {b.nvars}")
    return all(x <= y for x, y in zip(a.exponents, b.exponents))


def minimalize(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    """Drop every generator divisible by another one; canonical order."""
    # processing by degree means a kept generator can never be divided later
    ordered = sorted(set(gens), key=_generator_key)
    kept: list[Monomial] = []
    for g in ordered:
        if not any(divides(h, g) for h in kept):
            kept.append(g)
    return tuple(kept)


def _generator_key(m: Monomial):
    return (m.degree, tuple(-e for e in m.exponents))


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal in K[x1..x_nvars], kept as its minimal generators.

    The zero ideal has no generators and ``is_zero`` set. Build instances
    with :meth:`from_generators` or :meth:`zero`.
    """

    nvars: int
    generators: tuple[Monomial, ...]
    is_zero: bool = False

    def __post_init__(self):
        if self.nvars < 0:
            raise ValueError("nvars must be nonnegative")
        if self.is_zero != (not self.generators):
            raise ValueError("zero ideal flag must match an empty generator set")
        for g in self.generators:
            if g.nvars != self.nvars:
                raise ValueError(f"generator {g} does not live in {self.nvars} variables")

    @classmethod
    def from_generators(cls, nvars: int, gens: Iterable[Monomial | Sequence[int]]) -> MonomialIdeal:
        monos = [g if isinstance(g, Monomial) else Monomial(tuple(g)) for g in gens]
        minimal = minimalize(monos)
        return cls(nvars, minimal, is_zero=not minimal)

    @classmethod
    def zero(cls, nvars: int) -> MonomialIdeal:
        return cls(nvars, (), is_zero=True)

    @classmethod
    def unit(cls, nvars: int) -> MonomialIdeal:
        return cls(nvars, (Monomial.one(nvars),))

    def is_unit(self) -> bool:
        return any(g.degree == 0 for g in self.generators)

    def is_squarefree(self) -> bool:
        return all(g.is_squarefree() for g in self.generators)

    def max_exponents(self) -> tuple[int, ...]:
        if not self.generators:
            return (0,) * self.nvars
        return tuple(max(col) for col in zip(*(g.exponents for g in self.generators)))

    def contains(self, u: Monomial) -> bool:
        if u.nvars != self.nvars:
            raise ValueError(f"variable count mismatch: {u.nvars} vs {self.nvars}")
        return any(divides(g, u) for g in self.generators)

    def __contains__(self, u: Monomial) -> bool:
        return self.contains(u)

    def issubset(self, other: MonomialIdeal) -> bool:
        if self.nvars != other.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
        return all(other.contains(g) for g in self.generators)

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.generators) + ")"


def contains(ideal: MonomialIdeal, u: Monomial) -> bool:
    return ideal.contains(u)


@dataclass(frozen=True)
class QuotientPresentation:
    """The quotient outer/inner of two monomial ideals with inner strictly inside outer."""

    inner: MonomialIdeal
    outer: MonomialIdeal

    def __post_init__(self):
        if self.inner.nvars != self.outer.nvars:
            raise ValueError("inner and outer ideals live in different rings")
        if not self.inner.issubset(self.outer):
            raise NotContainedError("inner ideal is not contained in the outer ideal")
        if self.inner == self.outer:
            raise EqualIdealsError("inner and outer ideals coincide; the quotient is zero")

    @property
    def nvars(self) -> int:
        return self.outer.nvars


class NotContainedError(ValueError):
    pass


class EqualIdealsError(ValueError):
    pass


def maximal_power_ideal(n: int, t: int) -> MonomialIdeal:
    """The ideal generated by every degree-t monomial in n variables."""
    if n < 2 or t < 1:
        raise ValueError(f"need n >= 2 and t >= 1, got n={n}, t={t}")
    gens = []
    for combo in combinations_with_replacement(range(n), t):
        exps = [0] * n
        for i in combo:
            exps[i] += 1
        gens.append(Monomial(tuple(exps)))
    return MonomialIdeal.from_generators(n, gens)


@dataclass(frozen=True)
class PolarizationResult:
    """A squarefree ideal in an enlarged ring.

    ``var_map[(j, s)]`` is the 1-based index of copy ``s`` (0-based) of the
    original 1-based variable ``j``.
    """

    ideal: MonomialIdeal
    added_vars: int
    var_map: dict[tuple[int, int], int] = field(compare=False)


def polarization_layout(levels: Sequence[int]) -> dict[tuple[int, int], int]:
    """Level-by-level variable layout.

    Level 0 holds every original variable in order; level s holds copy s of
    each variable that needs more than s copies. When all variables need the
    same number of copies, copy s of x_j lands on index n*s + j.
    """
    var_map: dict[tuple[int, int], int] = {}
    index = 0
    for s in range(max(levels, default=0)):
        for j, count in enumerate(levels, start=1):
            if count > s:
                index += 1
                var_map[(j, s)] = index
    return var_map


def _polarize_monomial(u: Monomial, var_map: dict[tuple[int, int], int], total: int) -> Monomial:
    support = [var_map[(j, s)] - 1 for j, e in enumerate(u.exponents, start=1) for s in range(e)]
    return Monomial.from_support(total, support)


def _polarize_with(ideal: MonomialIdeal, var_map, total: int) -> MonomialIdeal:
    if ideal.is_zero:
        return MonomialIdeal.zero(total)
    return MonomialIdeal.from_generators(
        total, (_polarize_monomial(g, var_map, total) for g in ideal.generators)
    )


def polarize(ideal: MonomialIdeal) -> PolarizationResult:
    if ideal.is_zero:
        raise ValueError("cannot polarize the zero ideal")
    levels = [max(e, 1) for e in ideal.max_exponents()]
    var_map = polarization_layout(levels)
    total = len(var_map)
    return PolarizationResult(
        _polarize_with(ideal, var_map, total), total - ideal.nvars, var_map
    )


def polarize_pair(
    inner: MonomialIdeal, outer: MonomialIdeal
) -> tuple[MonomialIdeal, MonomialIdeal, int, dict[tuple[int, int], int]]:
    """Polarize two ideals into one common ring.

    Copies per variable come from the maximum exponent over the generators of
    both ideals. Returns ``(inner_p, outer_p, added_vars, var_map)``.
    """
    if inner.nvars != outer.nvars:
        raise ValueError("ideals live in different rings")
    levels = [
        max(a, b, 1) for a, b in zip(inner.max_exponents(), outer.max_exponents())
    ]
    var_map = polarization_layout(levels)
    total = len(var_map)
    return (
        _polarize_with(inner, var_map, total),
        _polarize_with(outer, var_map, total),
        total - inner.nvars,
        var_map,
    )


def colex_subsets(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """k-subsets of range(n) in colexicographic order."""
    if k == 0:
        yield ()
        return
    for top in range(k - 1, n):
        for rest in colex_subsets(top, k - 1):
            yield rest + (top,)


def squarefree_of_degree(nvars: int, k: int) -> Iterator[Monomial]:
    if not 0 <= k <= nvars:
        raise ValueError(f"degree {k} out of range for {nvars} variables")
    for support in colex_subsets(nvars, k):
        yield Monomial.from_support(nvars, support)


# ---------------------------------------------------------------- text format

class IdealParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


_HEADER = re.compile(r"^vars\s*:\s*(\d+)$")
_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_ideal(text: str) -> MonomialIdeal:
    """Parse the line-oriented ideal format.

    A ``vars: <n>`` header comes first, then one monomial per line such as
    ``x1^2*x3``. ``#`` starts a comment. A file with no monomial lines is
    the zero ideal, and the line ``1`` is the unit ideal.
    """
    nvars = None
    gens: list[Monomial] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if nvars is None:
            match = _HEADER.match(line)
            if not match:
                raise IdealParseError(lineno, "expected header 'vars: <n>'")
            nvars = int(match.group(1))
            if nvars < 1:
                raise IdealParseError(lineno, "variable count must be positive")
            continue
        gens.append(_parse_monomial(line, nvars, lineno))
    if nvars is None:
        raise IdealParseError(0, "missing header 'vars: <n>'")
    return MonomialIdeal.from_generators(nvars, gens)


def _parse_monomial(line: str, nvars: int, lineno: int) -> Monomial:
    exps = [0] * nvars
    if line == "1":
        return Monomial(tuple(exps))
    for factor in line.replace(" ", "").split("*"):
        match = _FACTOR.match(factor)
        if not match:
            raise IdealParseError(lineno, f"malformed factor {factor!r}")
        var = int(match.group(1))
        if not 1 <= var <= nvars:
            raise IdealParseError(lineno, f"variable x{var} outside x1..x{nvars}")
        exps[var - 1] += int(match.group(2) or 1)
    return Monomial(tuple(exps))


def format_ideal(ideal: MonomialIdeal) -> str:
    lines = [f"vars: {ideal.nvars}"]
    lines.extend(str(g) for g in ideal.generators)
    return "\n".join(lines) + "\n"
