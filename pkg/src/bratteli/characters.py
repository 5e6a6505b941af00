"""Thoma characters of the infinite symmetric group and finite S_n characters.

Thoma parameters are exact rationals by default.  Floats are accepted too; the
arithmetic below is written so that the same code then runs in floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from numbers import Rational, Real
from typing import Sequence

from .errors import InputError
from .partitions import (
    Partition,
    centralizer_order,
    check_partition,
    hook_product,
    partition_list,
)

Number = Fraction | float


def _as_number(x) -> Number:
    if isinstance(x, bool):
        raise InputError("boolean is not a Thoma parameter entry")
    if isinstance(x, (Fraction, int, Rational)):
        return Fraction(x)
    if isinstance(x, float | Real):
        return float(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except ValueError as exc:
            raise InputError(f"not a rational number: {x!r}") from exc
    raise InputError(f"unsupported parameter entry {x!r}")


@dataclass(frozen=True)
class ThomaParameter:
    """A point (alpha, beta) of the Thoma simplex.

    Entries are stored sorted in decreasing order with zeros dropped, so
    ``ThomaParameter((0, 1/2))`` equals ``ThomaParameter((1/2,))``.
    """

    alpha: tuple[Number, ...] = ()
    beta: tuple[Number, ...] = ()

    def __post_init__(self):
        alpha = tuple(sorted((_as_number(a) for a in self.alpha), reverse=True))
        beta = tuple(sorted((_as_number(b) for b in self.beta), reverse=True))
        for x in alpha + beta:
            if x < 0 or x > 1:
                raise InputError(f"Thoma parameter entries must lie in [0, 1], got {x}")
        if sum(alpha) + sum(beta) > 1:
            raise InputError("sum of alpha and beta entries exceeds 1")
        object.__setattr__(self, "alpha", tuple(a for a in alpha if a != 0))
        object.__setattr__(self, "beta", tuple(b for b in beta if b != 0))

    @classmethod
    def parse(cls, alpha: str = "", beta: str = "") -> ThomaParameter:
        def split(text: str) -> list[str]:
            return [t for t in (s.strip() for s in text.split(",")) if t and t != "0"]

        return cls(tuple(split(alpha)), tuple(split(beta)))

    @property
    def exact(self) -> bool:
        return all(isinstance(x, Fraction) for x in self.alpha + self.beta)

    @property
    def gamma(self) -> Number:
        """Deficit 1 - sum(alpha) - sum(beta)."""
        return 1 - sum(self.alpha, Fraction(0)) - sum(self.beta, Fraction(0))

    def __str__(self) -> str:
        a = ",".join(str(x) for x in self.alpha)
        b = ",".join(str(x) for x in self.beta)
        return f"alpha=({a}) beta=({b})"


PLANCHEREL = ThomaParameter()


def super_power_sum(theta: ThomaParameter, m: int) -> Number:
    """s_m = sum alpha_k^m + (-1)^(m-1) sum beta_k^m for m > 1, and s_1 = 1."""
    if m < 1:
        raise InputError(f"power sum index must be >= 1, got {m}")
    if m == 1:
        return Fraction(1)
    sign = 1 if m % 2 == 1 else -1
    return sum((a**m for a in theta.alpha), Fraction(0)) + sign * sum((b**m for b in theta.beta), Fraction(0))


def power_sum_product(theta: ThomaParameter, rho: Sequence[int]) -> Number:
    """prod_i s_{rho_i}(theta), with s_1 = 1."""
    out: Number = Fraction(1)
    for m in rho:
        if m > 1:
            out *= super_power_sum(theta, m)
    return out


def thoma_character(theta: ThomaParameter, rho: Sequence[int]) -> Number:
    """Character value prod_{m>1} s_m^{c_m} on a permutation of cycle type rho."""
    check_partition(tuple(sorted(rho, reverse=True)))
    return power_sum_product(theta, rho)


# -- finite symmetric groups -------------------------------------------------


def hook_dimension(lam: Sequence[int]) -> int:
    """Dimension of the S_n irreducible indexed by lam, via the hook length formula."""
    lam = check_partition(lam)
    return factorial(sum(lam)) // hook_product(lam)


@lru_cache(maxsize=None)
def _mn(lam: Partition, rho: Partition) -> int:
    if not rho:
        return 1 if not lam else 0
    r, rest = rho[0], rho[1:]
    length = len(lam)
    beta = [lam[i] + length - 1 - i for i in range(length)]
    occupied = set(beta)
    total = 0
    for b in beta:
        nb = b - r
        if nb < 0 or nb in occupied:
            continue
        # leg length of the removed rim hook = beads jumped over
        height = sum(1 for x in beta if nb < x < b)
        moved = sorted((occupied - {b}) | {nb}, reverse=True)
        mu = tuple(x - (length - 1 - i) for i, x in enumerate(moved))
        mu = tuple(p for p in mu if p > 0)
        total += (-1) ** height * _mn(mu, rest)
    return total


def irreducible_character(lam: Sequence[int], rho: Sequence[int]) -> int:
    """chi^lam(rho) by the Murnaghan-Nakayama rim-hook recursion."""
    lam = check_partition(lam)
    rho = check_partition(tuple(sorted(rho, reverse=True)))
    if sum(lam) != sum(rho):
        raise InputError(f"|lambda| = {sum(lam)} but |rho| = {sum(rho)}")
    return _mn(lam, rho)


def character_table(n: int) -> tuple[tuple[Partition, ...], tuple[Partition, ...], list[list[int]]]:
    """Rows indexed by irreducibles lam, columns by cycle types rho (both lex-descending)."""
    if n < 0:
        raise InputError("n must be nonnegative")
    parts = partition_list(n)
    return parts, parts, [[_mn(lam, rho) for rho in parts] for lam in parts]


def schur_value(theta: ThomaParameter, lam: Sequence[int]) -> Number:
    """Path weight of the central measure: sum_rho chi^lam(rho) p_rho(theta) / z_rho."""
    lam = check_partition(lam)
    n = sum(lam)
    out: Number = Fraction(0)
    for rho in partition_list(n):
        chi = _mn(lam, rho)
        if chi:
            out += Fraction(chi, centralizer_order(rho)) * power_sum_product(theta, rho)
    return out if theta.exact else float(out)


def thoma_vertex_weight(theta: ThomaParameter, lam: Sequence[int]) -> Number:
    """Mass M_n(lam) that the central measure of theta gives to vertex lam at level |lam|."""
    lam = check_partition(lam)
    if not lam:
        raise InputError("vertex weight needs a nonempty diagram")
    return hook_dimension(lam) * schur_value(theta, lam)
