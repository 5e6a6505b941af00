"""Concrete diagrams: Young, Pascal, multidimensional Young, and the orbit diagram
of the locally finite solvable group built from G = sum of Z/2.

Vertex labels:

* Young: partitions (tuples), lexicographically descending within a level.
* Pascal: pairs ``(k, n - k)``, lexicographically descending.
* multidimensional Young: order ideals of Z_+^d as sorted tuples of points,
  ascending in that tuple order.
* solvable: :class:`OrbitLabel`, ascending by minimal representative.

Functions on G_n = (Z/2)^n are bit tuples of length 2^n, indexed by the group
element written as an integer.  G_n sits inside G_{n+1} as the elements whose
top bit is 0, so the restriction of ``f`` to G_n is ``f[:2**n]`` and the other
coset is ``f[2**n:]``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import floor

import numpy as np

from . import partitions as P
from .characters import ThomaParameter
from .errors import InputError, ResourceError, max_cells
from .graph import FinitePath, GradedGraph, register_codec

SOLVABLE_MAX_LEVEL = 4


# -- Young and Pascal --------------------------------------------------------


def young_graph(max_level: int) -> GradedGraph:
    if max_level < 0:
        raise InputError("max_level must be >= 0")
    levels = [P.partition_list(n) for n in range(max_level + 1)]
    edges = []
    for n in range(max_level):
        index = {lam: j for j, lam in enumerate(levels[n + 1])}
        edges.append({(i, index[P.add_cell(lam, r)]): 1 for i, lam in enumerate(levels[n]) for r in P.addable_rows(lam)})
    return GradedGraph(levels, edges, kind="young")


def pascal_graph(max_level: int) -> GradedGraph:
    if max_level < 0:
        raise InputError("max_level must be >= 0")
    levels = [[(k, n - k) for k in range(n, -1, -1)] for n in range(max_level + 1)]
    edges = []
    for n in range(max_level):
        # (k, n-k) sits at index n-k; incrementing coordinate 0 keeps the index
        edges.append({**{(i, i): 1 for i in range(n + 1)}, **{(i, i + 1): 1 for i in range(n + 1)}})
    return GradedGraph(levels, edges, kind="pascal")


register_codec("young", P.encode, P.decode)
register_codec("pascal", P.encode, P.decode)


# -- multidimensional Young graphs ---------------------------------------------

Ideal = tuple[tuple[int, ...], ...]


def _addable_points(ideal: Ideal, d: int) -> list[tuple[int, ...]]:
    members = set(ideal)
    if not members:
        return [(0,) * d]
    out = set()
    for p in members:
        for axis in range(d):
            q = p[:axis] + (p[axis] + 1,) + p[axis + 1 :]
            if q in members:
                continue
            if all(q[a] == 0 or (q[:a] + (q[a] - 1,) + q[a + 1 :]) in members for a in range(d)):
                out.add(q)
    return sorted(out)


def multidim_young_graph(d: int, max_level: int) -> GradedGraph:
    """Hasse diagram of finite order ideals of Z_+^d, graded by cardinality."""
    if d < 2:
        raise InputError("dimension d must be >= 2")
    if max_level < 0:
        raise InputError("max_level must be >= 0")
    budget = max_cells()
    levels: list[list[Ideal]] = [[()]]
    edges = []
    for n in range(max_level):
        pairs = []
        nxt = set()
        for i, ideal in enumerate(levels[n]):
            for q in _addable_points(ideal, d):
                bigger = tuple(sorted(ideal + (q,)))
                nxt.add(bigger)
                pairs.append((i, bigger))
            if len(nxt) > budget:
                raise ResourceError(f"more than {budget} ideals at level {n + 1} of the {d}-dimensional Young graph")
        level = sorted(nxt)
        index = {ideal: j for j, ideal in enumerate(level)}
        levels.append(level)
        edges.append({(i, index[b]): 1 for i, b in pairs})
    return GradedGraph(levels, edges, kind="multidim")


def ideal_to_partition(ideal: Ideal) -> P.Partition:
    """Row lengths of a 2-dimensional ideal read as a Young diagram."""
    rows: dict[int, int] = {}
    for p in ideal:
        if len(p) != 2:
            raise InputError("only 2-dimensional ideals correspond to Young diagrams")
        rows[p[0]] = rows.get(p[0], 0) + 1
    return tuple(rows[i] for i in range(len(rows)))


def _encode_ideal(ideal: Ideal) -> str:
    return json.dumps([list(p) for p in ideal], separators=(",", ":"))


def _decode_ideal(text: str) -> Ideal:
    return tuple(tuple(int(c) for c in p) for p in json.loads(text))


register_codec("multidim", _encode_ideal, _decode_ideal)


# -- the solvable-group orbit diagram ----------------------------------------


@dataclass(frozen=True, order=True)
class OrbitLabel:
    """Orbit of G_n acting on functions G_n -> Z/2 by translation, keyed by its
    lexicographically minimal member.  Level 0 holds the root with ``bits=()``."""

    level: int
    bits: tuple[int, ...]

    @property
    def hex(self) -> str:
        if not self.bits:
            return ""
        value = int("".join(map(str, self.bits)), 2)
        return format(value, "0{}x".format(max(1, -(-len(self.bits) // 4))))

    def __str__(self) -> str:
        return self.hex


def _encode_orbit(label: OrbitLabel) -> str:
    return f"{label.level}:{label.hex}"


def _decode_orbit(text: str) -> OrbitLabel:
    level, _, hexpart = text.partition(":")
    n = int(level)
    if n == 0:
        return OrbitLabel(0, ())
    bits = tuple(int(b) for b in format(int(hexpart, 16), f"0{2**n}b"))
    return OrbitLabel(n, bits)


register_codec("solvable", _encode_orbit, _decode_orbit)


def translate(f: tuple[int, ...], t: int) -> tuple[int, ...]:
    """(t . f)(x) = f(x + t); addition in (Z/2)^n is XOR."""
    return tuple(f[x ^ t] for x in range(len(f)))


def orbit_of(f: tuple[int, ...]) -> list[tuple[int, ...]]:
    return sorted({translate(f, t) for t in range(len(f))})


def stabilizer(f: tuple[int, ...]) -> frozenset[int]:
    return frozenset(t for t in range(len(f)) if translate(f, t) == f)


def canonical(f: tuple[int, ...]) -> tuple[int, ...]:
    return min(translate(f, t) for t in range(len(f)))


def _check_solvable_level(n: int) -> None:
    if n < 0:
        raise InputError("level must be >= 0")
    if n > SOLVABLE_MAX_LEVEL:
        raise ResourceError(
            f"level {n} of the solvable-group diagram needs 2^{2**n} functions; the cap is level {SOLVABLE_MAX_LEVEL}"
        )


@lru_cache(maxsize=None)
def _orbit_table(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Canonical representatives (as ints) and orbit sizes for all functions on G_n."""
    width = 2**n
    count = 2**width
    if count > max_cells():
        raise ResourceError(f"level {n} enumerates {count} functions, over the budget")
    values = np.arange(count, dtype=np.int64)
    shifts = np.arange(width - 1, -1, -1, dtype=np.int64)
    bits = (values[:, None] >> shifts[None, :]) & 1
    weights = (1 << shifts).astype(np.int64)
    best = values.copy()
    for t in range(1, width):
        perm = np.arange(width) ^ t
        best = np.minimum(best, bits[:, perm] @ weights)
    reps, sizes = np.unique(best, return_counts=True)
    return reps, sizes


def _int_to_bits(value: int, width: int) -> tuple[int, ...]:
    return tuple((value >> (width - 1 - x)) & 1 for x in range(width))


def orbit_labels(n: int) -> list[OrbitLabel]:
    _check_solvable_level(n)
    if n == 0:
        return [OrbitLabel(0, ())]
    reps, _ = _orbit_table(n)
    return [OrbitLabel(n, _int_to_bits(int(r), 2**n)) for r in reps]


def solvable_multiplicity(lower: OrbitLabel, upper: OrbitLabel) -> int:
    """Edge multiplicity from a level-n orbit to a level-(n+1) orbit.

    Split a representative h of the upper orbit into its restrictions (h0, h1)
    to the two cosets of G_n.  The lower orbit must be the orbit of h0 or h1.
    When both halves share one orbit the multiplicity is 1; otherwise it is the
    index [Stab(b) : Stab(h0) & Stab(h1)] where b is the half lying in ``lower``.
    This equals the number of members of ``upper`` restricting to any fixed
    member of ``lower``, so paths to a vertex are counted by its orbit size.
    """
    if upper.level != lower.level + 1:
        return 0
    if lower.level == 0:
        return len(orbit_of(upper.bits))
    half = len(upper.bits) // 2
    h0, h1 = upper.bits[:half], upper.bits[half:]
    b0, b1 = canonical(h0), canonical(h1)
    if lower.bits not in (b0, b1):
        return 0
    if b0 == b1:
        return 1
    s0, s1 = stabilizer(h0), stabilizer(h1)
    mine = s0 if lower.bits == b0 else s1
    return len(mine) // len(s0 & s1)


def solvable_group_graph(max_level: int) -> GradedGraph:
    _check_solvable_level(max_level)
    levels = [orbit_labels(n) for n in range(max_level + 1)]
    edges = []
    for n in range(max_level):
        index = {label.bits: i for i, label in enumerate(levels[n])}
        table = {}
        for j, upper in enumerate(levels[n + 1]):
            if n == 0:
                table[(0, j)] = solvable_multiplicity(levels[0][0], upper)
                continue
            half = len(upper.bits) // 2
            for b in {canonical(upper.bits[:half]), canonical(upper.bits[half:])}:
                i = index[b]
                table[(i, j)] = solvable_multiplicity(levels[n][i], upper)
        edges.append(table)
    return GradedGraph(levels, edges, kind="solvable")


def restriction_candidates(upper: tuple[int, ...], lower_member: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Members of the orbit of ``upper`` whose restriction to G_n is ``lower_member``, sorted."""
    half = len(upper) // 2
    return [h for h in orbit_of(upper) if h[:half] == lower_member]


def function_to_path(graph: GradedGraph, f: tuple[int, ...]) -> FinitePath:
    """Path in the solvable diagram encoding a function on G_n (n >= 1).

    Step 1 picks the orbit of f|G_1 and the rank of f|G_1 inside it; step k+1
    picks the orbit of f|G_{k+1} and the rank of f|G_{k+1} among the members of
    that orbit extending f|G_k.
    """
    if graph.kind != "solvable":
        raise InputError("function/path identification needs the solvable-group graph")
    width = len(f)
    n = width.bit_length() - 1
    if width < 2 or 2**n != width or any(b not in (0, 1) for b in f):
        raise InputError("expected a 0/1 tuple of length 2^n with n >= 1")
    if n > graph.max_level:
        raise InputError(f"function on G_{n} needs level {n}, graph stops at {graph.max_level}")
    steps = []
    for k in range(1, n + 1):
        h = f[: 2**k]
        label = OrbitLabel(k, canonical(h))
        j = graph.vertex(k, label).index
        if k == 1:
            copy = orbit_of(h).index(h)
        else:
            copy = restriction_candidates(h, h[: 2 ** (k - 1)]).index(h)
        steps.append((j, copy))
    return FinitePath(tuple(steps))


def path_to_function(graph: GradedGraph, path: FinitePath) -> tuple[int, ...]:
    if graph.kind != "solvable":
        raise InputError("function/path identification needs the solvable-group graph")
    if not path.steps:
        raise InputError("the empty path does not determine a function")
    h: tuple[int, ...] = ()
    for k, (j, copy) in enumerate(path.steps, start=1):
        label = graph.at(k, j).label
        options = orbit_of(label.bits) if k == 1 else restriction_candidates(label.bits, h)
        if not 0 <= copy < len(options):
            raise InputError(f"invalid step {k} of path")
        h = options[copy]
    return h


# -- frequencies and approximating diagrams ----------------------------------


def row_frequencies(lam, k: int) -> Fraction:
    """Length of row k (k > 0) or column -k (k < 0), divided by |lam|."""
    lam = P.check_partition(lam)
    if not lam:
        raise InputError("row frequencies need a nonempty diagram")
    if k == 0:
        raise InputError("k must be a nonzero integer")
    n = sum(lam)
    lines = lam if k > 0 else P.conjugate(lam)
    i = abs(k) - 1
    return Fraction(lines[i] if i < len(lines) else 0, n)


def _corner_shape(rows: list[int], legs: list[int], n: int) -> list[int] | None:
    p, q = len(rows), len(legs)
    leftover = n - sum(rows) - sum(legs)
    arms = [max(r - q, 0) for r in rows]
    surplus = p * q + sum(arms) + sum(legs) + leftover - n
    if p:
        take = min(surplus, leftover)
        arms[0] += leftover - take
        surplus -= take
    legs = list(legs)
    while surplus > 0:
        j = max(range(q), key=lambda t: (legs[t], t)) if q else None
        if j is None or legs[j] == 0:
            return None
        legs[j] -= 1
        surplus -= 1
    shape = [q + a for a in arms]
    shape += [sum(1 for b in legs if b > i) for i in range(max(legs, default=0))]
    if not p:
        shape = [shape[0] + leftover] + shape[1:] if shape else [leftover]
    return [s for s in shape if s > 0]


def shape_sequence(theta: ThomaParameter, n: int) -> P.Partition:
    """A diagram with n cells whose row and column frequencies approximate theta.

    The first p = len(alpha) rows and first q = len(beta) columns share a
    p x q corner.  Rows take floor(alpha_k n) cells (corner included), columns
    hang floor(beta_j n) cells below the corner, and the rounding leftover goes
    to the first row.  Rows too short to cover the corner are widened, and the
    surplus is taken back from row 1's leftover, then from the longest legs.
    For n too small to hold the corner, the smallest parameters are dropped.
    """
    if n < 1:
        raise InputError("n must be >= 1")
    rows = [floor(a * n) for a in theta.alpha]
    legs = [floor(b * n) for b in theta.beta]
    while True:
        shape = _corner_shape(rows, legs, n)
        if shape is not None:
            return P.check_partition(shape)
        # drop whichever trailing parameter is smaller (ties drop a column)
        if legs and (not rows or legs[-1] <= rows[-1]):
            legs.pop()
        else:
            rows.pop()
