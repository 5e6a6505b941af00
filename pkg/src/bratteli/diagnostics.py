"""Finite-level diagnostics for smooth versus non-smooth behaviour.

On the solvable-group side a level-k cylinder is a function f on G_k (the
path/function bijection of the orbit diagram), and an invariant measure on
2^G is seen through its level-k marginals.  Finitely supported invariant
measures come from periodic configurations: a pattern p on G_m extends to G
by x(g) = p(g mod G_m), whose G-orbit is finite.

On the Young side the diagnostic is a table of level-n distances between
Thoma measures.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence, Union

from .characters import ThomaParameter
from .errors import InputError, ResourceError
from .generators import (
    SOLVABLE_MAX_LEVEL,
    _int_to_bits,
    _orbit_table,
    canonical,
    function_to_path,
    orbit_of,
    translate,
    young_graph,
)
from .graph import GradedGraph
from .measures import MarkovMeasure, cylinder_probability, measure_from_weights, thoma_measure, total_variation

Pattern = tuple[int, ...]
Marginal = dict[Pattern, Fraction]


def _depth_of(pattern: Sequence[int]) -> int:
    width = len(pattern)
    m = width.bit_length() - 1
    if width < 1 or 2**m != width:
        raise InputError(f"pattern length must be a power of two, got {width}")
    if any(b not in (0, 1) for b in pattern):
        raise InputError("pattern entries must be 0 or 1")
    if m > SOLVABLE_MAX_LEVEL:
        raise ResourceError(f"pattern depth {m} exceeds the cap {SOLVABLE_MAX_LEVEL}")
    return m


def parse_pattern(text: str) -> Pattern:
    text = text.strip()
    if set(text) - {"0", "1"}:
        raise InputError(f"pattern must be a string of 0s and 1s, got {text!r}")
    return tuple(int(c) for c in text)


def restrict(pattern: Pattern, k: int) -> Pattern:
    """Restriction to G_k of the periodic extension of ``pattern``."""
    width = 2**k
    if width <= len(pattern):
        return pattern[:width]
    return pattern * (width // len(pattern))


@dataclass(frozen=True, eq=False)
class FiniteOrbitMeasure:
    """Invariant measure supported on finitely many periodic configurations.

    ``weights`` maps each depth-``depth`` pattern in the support to its mass;
    masses are constant along every G-orbit and sum to 1.
    """

    depth: int
    weights: Mapping[Pattern, Fraction]

    def marginal(self, k: int) -> Marginal:
        if k < 0:
            raise InputError("level must be >= 0")
        out: Marginal = {}
        for p, w in self.weights.items():
            f = restrict(p, k)
            out[f] = out.get(f, Fraction(0)) + w
        return out

    def orbits(self) -> list[tuple[Pattern, Fraction]]:
        """(minimal representative, total orbit mass), in representative order."""
        agg: dict[Pattern, Fraction] = {}
        for p, w in self.weights.items():
            rep = canonical(p)
            agg[rep] = agg.get(rep, Fraction(0)) + w
        return sorted(agg.items())

    def total(self) -> Fraction:
        return sum(self.weights.values(), Fraction(0))

    def is_invariant(self) -> bool:
        """Pushforward under each generator of G_depth equals the measure."""
        for i in range(self.depth):
            t = 2**i
            for p, w in self.weights.items():
                if self.weights.get(translate(p, t), Fraction(0)) != w:
                    return False
        return self.total() == 1

    def as_markov_measure(self, graph: GradedGraph) -> MarkovMeasure:
        """The same measure as a central measure on the orbit diagram (validated exactly)."""
        if graph.kind != "solvable":
            raise InputError("needs the solvable-group graph")
        weights = [[Fraction(1)]]
        for n in range(1, graph.max_level + 1):
            marg = self.marginal(n)
            weights.append([marg.get(lab.bits, Fraction(0)) for lab in graph.labels(n)])
        return measure_from_weights(graph, weights)


def finite_orbit_measure(pattern: Sequence[int]) -> FiniteOrbitMeasure:
    """Uniform measure on the G-orbit of the periodic extension of ``pattern``."""
    pattern = tuple(pattern)
    m = _depth_of(pattern)
    members = orbit_of(pattern)
    w = Fraction(1, len(members))
    return FiniteOrbitMeasure(m, {p: w for p in members})


def mix(parts: Sequence[tuple[FiniteOrbitMeasure, Fraction]]) -> FiniteOrbitMeasure:
    """Convex combination, lifting every part to the largest depth by periodic extension."""
    if not parts:
        raise InputError("nothing to mix")
    total = sum((Fraction(c) for _, c in parts), Fraction(0))
    if total != 1 or any(Fraction(c) < 0 for _, c in parts):
        raise InputError("mixing coefficients must be nonnegative and sum to 1")
    depth = max(mu.depth for mu, _ in parts)
    weights: dict[Pattern, Fraction] = {}
    for mu, c in parts:
        scale = Fraction(c)
        if scale == 0:
            continue
        for p, w in mu.weights.items():
            q = restrict(p, depth)
            weights[q] = weights.get(q, Fraction(0)) + scale * w
    return FiniteOrbitMeasure(depth, weights)


# -- marginals and distance --------------------------------------------------


def solvable_marginal(mu: MarkovMeasure, k: int) -> Marginal:
    """Level-k marginal of a measure on the orbit diagram, keyed by functions on G_k."""
    graph = mu.graph
    if graph.kind != "solvable":
        raise InputError("needs a measure on the solvable-group graph")
    if not 1 <= k <= graph.max_level:
        raise InputError(f"level {k} not materialized")
    width = 2**k
    out: Marginal = {}
    if mu.is_central:
        index = {lab.bits: i for i, lab in enumerate(graph.labels(k))}
        for value in range(2**width):
            f = _int_to_bits(value, width)
            w = mu.weights[k][index[canonical(f)]]
            if w:
                out[f] = Fraction(w)
        return out
    for value in range(2**width):
        f = _int_to_bits(value, width)
        w = cylinder_probability(mu, function_to_path(graph, f))
        if w:
            out[f] = Fraction(w)
    return out


MeasureLike = Union[FiniteOrbitMeasure, MarkovMeasure, Mapping]


def _marginal(x: MeasureLike, k: int) -> Marginal:
    if isinstance(x, FiniteOrbitMeasure):
        return x.marginal(k)
    if isinstance(x, MarkovMeasure):
        return solvable_marginal(x, k)
    if isinstance(x, Mapping):
        return dict(x)
    raise InputError(f"cannot take a level-{k} marginal of {type(x).__name__}")


def cylinder_distance(a: MeasureLike, b: MeasureLike, k: int) -> Fraction:
    """Total variation between level-k marginals on functions G_k -> Z/2."""
    if not 0 <= k <= SOLVABLE_MAX_LEVEL:
        raise ResourceError(f"cylinder level {k} outside 0..{SOLVABLE_MAX_LEVEL}")
    ma, mb = _marginal(a, k), _marginal(b, k)
    keys = set(ma) | set(mb)
    return sum((abs(ma.get(x, Fraction(0)) - mb.get(x, Fraction(0))) for x in keys), Fraction(0)) / 2


def _distance_to(marg: Marginal, target: Marginal) -> Fraction:
    # sum over the support of marg, plus the target mass it misses entirely
    inside = sum((abs(w - target.get(x, Fraction(0))) for x, w in marg.items()), Fraction(0))
    missed = 1 - sum((target.get(x, Fraction(0)) for x in marg), Fraction(0))
    return (inside + missed) / 2


# -- Poulsen witnesses -------------------------------------------------------


@dataclass
class Witness:
    measure: FiniteOrbitMeasure
    depth: int
    level: int
    distance: Fraction
    achieved: bool
    mode: str


def orbit_representatives(m: int) -> list[Pattern]:
    if not 0 <= m <= SOLVABLE_MAX_LEVEL:
        raise ResourceError(f"depth {m} outside 0..{SOLVABLE_MAX_LEVEL}")
    if m == 0:
        return [(0,), (1,)]
    reps, _ = _orbit_table(m)
    return [_int_to_bits(int(r), 2**m) for r in reps]


def best_ergodic_witness(target: MeasureLike, k: int, m: int) -> tuple[FiniteOrbitMeasure, Fraction]:
    """Single periodic orbit at depth m closest to ``target`` at level k.

    Exhaustive over canonical representatives; ties go to the smallest one.
    """
    if m < k:
        raise InputError(f"depth {m} is below the cylinder level {k}")
    goal = _marginal(target, k)
    best = None
    for rep in orbit_representatives(m):
        mu = finite_orbit_measure(rep)
        d = _distance_to(mu.marginal(k), goal)
        if best is None or d < best[1]:
            best = (mu, d)
            if d == 0:
                break
    return best


def best_mixture_witness(target: MeasureLike, k: int, m: int) -> tuple[FiniteOrbitMeasure, Fraction]:
    """Mixture of depth-m periodic orbits matching ``target``'s level-k orbit masses.

    The marginals of the periodic extensions of level-k orbit representatives
    are the indicator vectors of the level-k orbits, so the mixing system is
    solved by the target's own orbit masses.
    """
    if m < k:
        raise InputError(f"depth {m} is below the cylinder level {k}")
    goal = _marginal(target, k)
    masses: dict[Pattern, Fraction] = {}
    for f, w in goal.items():
        rep = canonical(f)
        masses[rep] = masses.get(rep, Fraction(0)) + w
    parts = [(finite_orbit_measure(restrict(rep, m)), w) for rep, w in sorted(masses.items()) if w]
    mu = mix(parts)
    if mu.depth < m:
        mu = FiniteOrbitMeasure(m, {restrict(p, m): w for p, w in mu.weights.items()})
    return mu, _distance_to(mu.marginal(k), goal)


def poulsen_witness(
    target: MeasureLike,
    k: int,
    eps,
    max_depth: int = SOLVABLE_MAX_LEVEL,
    mode: str = "mixture",
    min_depth: int | None = None,
) -> Witness:
    """Finitely supported invariant measure within ``eps`` of ``target`` at level k.

    ``mode="mixture"`` solves for a convex combination of periodic orbits;
    ``mode="ergodic"`` searches single periodic orbits only (extreme points of
    the simplex of invariant measures).  Depths are tried from ``min_depth`` (default k) upward; if no
    depth reaches ``eps`` the best witness found is returned with
    ``achieved=False``.
    """
    if not 1 <= k <= 3:
        raise InputError("cylinder level must lie in 1..3")
    eps = Fraction(eps)
    if mode not in ("ergodic", "mixture"):
        raise InputError(f"unknown witness mode {mode!r}")
    if max_depth > SOLVABLE_MAX_LEVEL:
        raise ResourceError(f"depth {max_depth} exceeds the cap {SOLVABLE_MAX_LEVEL}")
    search = best_ergodic_witness if mode == "ergodic" else best_mixture_witness
    start = k if min_depth is None else max(k, min_depth)
    best = None
    for m in range(start, max_depth + 1):
        mu, d = search(target, k, m)
        if best is None or d < best.distance:
            best = Witness(mu, m, k, d, d <= eps, mode)
        if d <= eps:
            return best
    if best is None:
        raise InputError(f"no depth between {start} and {max_depth}")
    return best


# -- Young-graph separation --------------------------------------------------


def boundary_separation(thetas: Sequence[ThomaParameter], n: int) -> list[list[Fraction]]:
    """Pairwise level-n total-variation distances between Thoma measures."""
    if not 0 <= n <= 8:
        raise InputError("separation level must lie in 0..8")
    graph = young_graph(n)
    cyl = [thoma_measure(t, n, graph).cylinders(n) for t in thetas]
    size = len(cyl)
    out = [[Fraction(0)] * size for _ in range(size)]
    for a in range(size):
        for b in range(a + 1, size):
            out[a][b] = out[b][a] = total_variation(cyl[a], cyl[b])
    return out
