"""Integer partitions as weakly decreasing tuples of positive ints."""

from __future__ import annotations

import json
from functools import lru_cache
from math import factorial
from typing import Iterator, Sequence

from .errors import InputError

Partition = tuple[int, ...]


def check_partition(parts: Sequence[int]) -> Partition:
    lam = tuple(parts)
    if any(not isinstance(p, int) or p < 1 for p in lam):
        raise InputError(f"partition parts must be positive integers: {list(lam)}")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise InputError(f"partition must be weakly decreasing: {list(lam)}")
    return lam


def partitions(n: int, largest: int | None = None) -> Iterator[Partition]:
    """Partitions of n in lexicographically descending order."""
    if n == 0:
        yield ()
        return
    top = n if largest is None else min(n, largest)
    for first in range(top, 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def partition_list(n: int) -> tuple[Partition, ...]:
    return tuple(partitions(n))


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > c) for c in range(lam[0]))


def addable_rows(lam: Partition) -> list[int]:
    """Row indices (0-based) where a cell can be appended."""
    return [r for r in range(len(lam) + 1) if r == 0 or r == len(lam) or lam[r] < lam[r - 1]]


def removable_rows(lam: Partition) -> list[int]:
    return [r for r in range(len(lam)) if r == len(lam) - 1 or lam[r] > lam[r + 1]]


def add_cell(lam: Partition, row: int) -> Partition:
    if row == len(lam):
        return lam + (1,)
    return lam[:row] + (lam[row] + 1,) + lam[row + 1 :]


def remove_cell(lam: Partition, row: int) -> Partition:
    if lam[row] == 1:
        return lam[:row] + lam[row + 1 :]
    return lam[:row] + (lam[row] - 1,) + lam[row + 1 :]


def contains(big: Partition, small: Partition) -> bool:
    return len(small) <= len(big) and all(s <= b for s, b in zip(small, big))


def hooks(lam: Partition) -> list[int]:
    conj = conjugate(lam)
    return [lam[i] - j - 1 + conj[j] - i for i in range(len(lam)) for j in range(lam[i])]


def hook_product(lam: Partition) -> int:
    out = 1
    for h in hooks(lam):
        out *= h
    return out


def num_standard_tableaux(lam: Partition) -> int:
    return factorial(sum(lam)) // hook_product(lam)


def cycle_counts(rho: Partition) -> dict[int, int]:
    counts: dict[int, int] = {}
    for m in rho:
        counts[m] = counts.get(m, 0) + 1
    return counts


def centralizer_order(rho: Partition) -> int:
    """z_rho = prod m^{c_m} c_m!, the size of the centralizer of a permutation of type rho."""
    z = 1
    for m, c in cycle_counts(rho).items():
        z *= m**c * factorial(c)
    return z


def encode(lam: Sequence[int]) -> str:
    return "[" + ",".join(str(p) for p in lam) + "]"


def decode(text: str) -> Partition:
    try:
        parts = json.loads(text)
    except ValueError as exc:
        raise InputError(f"bad partition label {text!r}") from exc
    return tuple(int(p) for p in parts)


def parse(text: str) -> Partition:
    """Parse ``"4,4"`` or ``"[4,4]"`` (empty string gives the empty partition)."""
    body = text.strip().strip("[]").strip()
    if not body:
        return ()
    try:
        return check_partition([int(p) for p in body.split(",")])
    except ValueError as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"bad partition {text!r}") from exc
