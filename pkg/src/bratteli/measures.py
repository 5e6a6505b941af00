"""Central measures stored as path weights, Markov transitions, and the ergodic method.

A central measure is determined by ``nu(v)``, the probability of each single
path from the root to ``v``.  Centrality is the linear condition
``nu(u) = sum_v mult(u, v) nu(v)``, checked exactly.  General (possibly
non-central) Markov measures keep explicit transition probabilities.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Mapping, Sequence

from .characters import Number, ThomaParameter, schur_value
from .errors import InputError, ResourceError, ValidationError, max_cells
from .generators import shape_sequence, young_graph
from .graph import FinitePath, GradedGraph, VertexId, check_path, iter_paths, paths_from_above
from .partitions import partition_list

FLOAT_TOL = 1e-12

# Largest increase tolerated between consecutive ergodic-method distances.
ERGODIC_MONOTONE_SLACK = Fraction(1, 20)


@dataclass(frozen=True, eq=False)
class MarkovMeasure:
    """Markov measure on the paths of ``graph``.

    ``transitions[n][(i, j)]`` is the probability of stepping from vertex ``i``
    at level ``n`` to vertex ``j`` at level ``n + 1`` through any of the
    parallel edges; each copy gets an equal share.  ``weights`` is present only
    for central measures.
    """

    graph: GradedGraph
    transitions: tuple[Mapping[tuple[int, int], Number], ...]
    weights: tuple[tuple[Number, ...], ...] | None = None

    @property
    def is_central(self) -> bool:
        return self.weights is not None

    @property
    def max_level(self) -> int:
        return self.graph.max_level

    def path_weight(self, v: VertexId) -> Number:
        if self.weights is None:
            raise InputError("path weights are defined for central measures only")
        return self.weights[v.level][v.index]

    def transition(self, n: int, i: int, j: int) -> Number:
        return self.transitions[n].get((i, j), 0)

    def edge_probability(self, n: int, i: int, j: int) -> Number:
        mult = self.graph.multiplicity(n, i, j)
        return self.transitions[n].get((i, j), 0) / mult if mult else 0

    def level_distribution(self, n: int) -> list[Number]:
        """Mass of each vertex at level n (probability that a path passes through it)."""
        if self.weights is not None:
            return [d * w for d, w in zip(self.graph.dims(n), self.weights[n])]
        mass: list[Number] = [Fraction(1)]
        for k in range(n):
            nxt: list[Number] = [Fraction(0)] * self.graph.size(k + 1)
            for (i, j), p in self.transitions[k].items():
                nxt[j] += mass[i] * p
            mass = nxt
        return mass

    def cylinders(self, n: int) -> CylinderDistribution:
        if self.weights is None:
            raise InputError("compact cylinder distributions need a central measure")
        return CylinderDistribution(self.graph, n, tuple(self.weights[n]))


def _is_exact(values: Iterable) -> bool:
    return all(isinstance(x, (Fraction, int)) for x in values)


def _weights_table(graph: GradedGraph, nu) -> list[list[Number]]:
    if isinstance(nu, Mapping):
        table = []
        for n in range(graph.max_level + 1):
            row = []
            for i, label in enumerate(graph.labels(n)):
                key = VertexId(n, i, label)
                if key not in nu:
                    raise InputError(f"missing weight for vertex {label!r} at level {n}")
                row.append(nu[key])
            table.append(row)
        return table
    table = [list(row) for row in nu]
    if len(table) != graph.max_level + 1 or any(len(r) != graph.size(n) for n, r in enumerate(table)):
        raise InputError("weight table shape does not match the graph")
    return table


def measure_from_weights(graph: GradedGraph, nu) -> MarkovMeasure:
    """Validate a central weight vector and derive its transitions.

    ``nu`` is either a mapping from every :class:`VertexId` to a weight or a
    per-level list of weights in canonical vertex order.  Exact inputs must
    satisfy both identities with zero residual; float inputs within 1e-12.
    """
    table = _weights_table(graph, nu)
    exact = _is_exact(x for row in table for x in row)
    table = [[Fraction(x) if exact else float(x) for x in row] for row in table]
    tol = 0 if exact else FLOAT_TOL

    for n, row in enumerate(table):
        for i, x in enumerate(row):
            if x < -tol:
                raise ValidationError(
                    f"negative weight {x} at vertex {graph.labels(n)[i]!r}", VertexId(n, i, graph.labels(n)[i]), x
                )
    for n, row in enumerate(table):
        total = sum((d * x for d, x in zip(graph.dims(n), row)), Fraction(0))
        if abs(total - 1) > tol:
            raise ValidationError(f"level {n} has total mass {total}, expected 1", None, total - 1)

    worst = None
    for n in range(graph.max_level):
        above = table[n + 1]
        for i, x in enumerate(table[n]):
            s = sum((m * above[j] for j, m in graph.children(n, i)), Fraction(0))
            r = abs(x - s)
            if worst is None or r > worst[0]:
                worst = (r, n, i)
    if worst is not None and worst[0] > tol:
        r, n, i = worst
        v = VertexId(n, i, graph.labels(n)[i])
        raise ValidationError(f"coherence fails at vertex {v.label!r} (level {n}), residual {r}", v, r)

    transitions = []
    for n in range(graph.max_level):
        t = {}
        for (i, j), m in graph.edge_table(n).items():
            x = table[n][i]
            t[(i, j)] = m * table[n + 1][j] / x if x != 0 else (Fraction(0) if exact else 0.0)
        transitions.append(t)
    return MarkovMeasure(graph, tuple(transitions), tuple(tuple(r) for r in table))


def normalized_markov(graph: GradedGraph, weights) -> MarkovMeasure:
    """Markov measure with p(u -> v) proportional to mult(u, v) w(v).

    Coincides with :func:`measure_from_weights` when ``w`` is coherent, and
    otherwise gives a Markov measure that is in general not central.
    """
    table = _weights_table(graph, weights)
    transitions = []
    for n in range(graph.max_level):
        t = {}
        for i in range(graph.size(n)):
            row = [(j, m * Fraction(table[n + 1][j])) for j, m in graph.children(n, i)]
            z = sum(x for _, x in row)
            if z <= 0:
                raise ValidationError(f"no positive continuation from vertex {graph.labels(n)[i]!r}")
            for j, x in row:
                t[(i, j)] = x / z
        transitions.append(t)
    return MarkovMeasure(graph, tuple(transitions), None)


def cylinder_probability(mu: MarkovMeasure, path: FinitePath) -> Number:
    check_path(mu.graph, path)
    p: Number = Fraction(1)
    src = 0
    for n, (j, _) in enumerate(path.steps):
        p *= mu.edge_probability(n, src, j)
        src = j
    return p


# -- concrete central measures -----------------------------------------------


def thoma_measure(theta: ThomaParameter, max_level: int, graph: GradedGraph | None = None) -> MarkovMeasure:
    """Central measure on the Young graph whose character is the Thoma character of theta."""
    graph = graph or young_graph(max_level)
    if graph.kind != "young" or graph.max_level < max_level:
        raise InputError("thoma_measure needs a Young graph materialized to max_level")
    graph = graph.truncate(max_level)
    weights = [[schur_value(theta, lam) if lam else Fraction(1) for lam in graph.labels(n)] for n in range(max_level + 1)]
    return measure_from_weights(graph, weights)


def plancherel_measure(max_level: int) -> MarkovMeasure:
    """nu(lam) = dim(lam) / |lam|!, the Thoma measure of the zero parameter."""
    from math import factorial

    graph = young_graph(max_level)
    weights = [[Fraction(d, factorial(n)) for d in graph.dims(n)] for n in range(max_level + 1)]
    return measure_from_weights(graph, weights)


def bernoulli_measure(graph: GradedGraph, p=Fraction(1, 2)) -> MarkovMeasure:
    """Product measure with P(bit = 1) = p on the Pascal or solvable-group graph.

    On the Pascal graph vertex (k, n - k) gets p^k (1-p)^(n-k).  On the
    solvable graph a level-n orbit of f gets p^|f| (1-p)^(2^n - |f|), with |f|
    the number of ones.
    """
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise InputError("p must lie in [0, 1]")
    q = 1 - p
    if graph.kind == "pascal":
        weights = [[p**k * q**r for k, r in graph.labels(n)] for n in range(graph.max_level + 1)]
    elif graph.kind == "solvable":
        weights = [[Fraction(1)]] + [
            [p ** sum(lab.bits) * q ** (len(lab.bits) - sum(lab.bits)) for lab in graph.labels(n)]
            for n in range(1, graph.max_level + 1)
        ]
    else:
        raise InputError(f"no Bernoulli measure defined on a {graph.kind!r} graph")
    return measure_from_weights(graph, weights)


def zero_point_mass(graph: GradedGraph) -> MarkovMeasure:
    """Point mass at the all-zeros configuration on the solvable-group graph."""
    if graph.kind != "solvable":
        raise InputError("zero_point_mass needs the solvable-group graph")
    weights = [[Fraction(1)]] + [
        [Fraction(1) if not any(lab.bits) else Fraction(0) for lab in graph.labels(n)]
        for n in range(1, graph.max_level + 1)
    ]
    return measure_from_weights(graph, weights)


# -- cylinder distributions --------------------------------------------------


@dataclass(frozen=True, eq=False)
class CylinderDistribution:
    """Distribution on level-n paths that depends only on the endpoint.

    ``endpoint_weight[j]`` is the probability of each single path ending at
    vertex ``j``; there are ``dims(n)[j]`` such paths.
    """

    graph: GradedGraph
    level: int
    endpoint_weight: tuple[Number, ...]

    def probability(self, path: FinitePath) -> Number:
        check_path(self.graph, path)
        if len(path) != self.level:
            raise InputError(f"expected a path of length {self.level}, got {len(path)}")
        return self.endpoint_weight[path.endpoint_index]

    def vertex_masses(self) -> list[Number]:
        return [d * w for d, w in zip(self.graph.dims(self.level), self.endpoint_weight)]

    def total(self) -> Number:
        return sum(self.vertex_masses(), Fraction(0))

    def items(self):
        for path in iter_paths(self.graph, self.level):
            yield path, self.endpoint_weight[path.endpoint_index]


def total_variation(a: CylinderDistribution, b: CylinderDistribution) -> Number:
    if a.level != b.level or a.graph.labels(a.level) != b.graph.labels(b.level):
        raise InputError("distributions live on different cylinder sets")
    dims = a.graph.dims(a.level)
    return sum((d * abs(x - y) for d, x, y in zip(dims, a.endpoint_weight, b.endpoint_weight)), Fraction(0)) / 2


def elementary_measure(graph: GradedGraph, top: VertexId, n: int) -> CylinderDistribution:
    """Uniform measure on paths to ``top``, projected to their first n steps.

    A length-n path ending at u has probability skew(u, top) / dim(top).
    """
    if not 0 <= n <= top.level:
        raise InputError(f"cylinder level {n} must lie between 0 and level(top) = {top.level}")
    counts = paths_from_above(graph, top)[n]
    dim_top = graph.dims(top.level)[top.index]
    if dim_top == 0:
        raise InputError(f"vertex {top.label!r} is unreachable")
    return CylinderDistribution(
        graph, n, tuple(Fraction(counts.get(i, 0), dim_top) for i in range(graph.size(n)))
    )


def ergodic_method_compare(theta: ThomaParameter, N_list: Sequence[int], n: int) -> list[tuple[int, Number]]:
    """Total-variation distance at level n between m_N(shape_sequence(theta, N)) and mu_theta."""
    if not N_list:
        return []
    if any(N < n for N in N_list):
        raise InputError("every N must be at least the cylinder level")
    top = max(N_list)
    vertices = sum(len(partition_list(k)) for k in range(top + 1))
    if vertices > max_cells():
        raise ResourceError(f"Young graph to level {top} has {vertices} vertices, over the budget")
    graph = young_graph(top)
    target = CylinderDistribution(graph, n, tuple(schur_value(theta, lam) if lam else Fraction(1) for lam in graph.labels(n)))
    out = []
    for N in N_list:
        lam = shape_sequence(theta, N)
        elem = elementary_measure(graph, graph.vertex(N, lam), n)
        out.append((N, total_variation(elem, target)))
    return out


def is_nonincreasing(distances: Sequence[tuple[int, Number]], slack=ERGODIC_MONOTONE_SLACK) -> bool:
    pts = sorted(distances)
    return all(b[1] <= a[1] + slack for a, b in zip(pts, pts[1:]))


# -- sampling ----------------------------------------------------------------


def _step_table(mu: MarkovMeasure, n: int, i: int):
    """Integer cumulative table for one exact draw of the next edge."""
    options = []
    for j, m in mu.graph.children(n, i):
        p = Fraction(mu.transition(n, i, j)) / m
        options.extend(((j, c), p) for c in range(m))
    denom = lcm(*(p.denominator for _, p in options)) if options else 1
    cum, acc = [], 0
    for edge, p in options:
        acc += p.numerator * (denom // p.denominator)
        cum.append((acc, edge))
    if acc != denom:
        raise ValidationError(f"transitions out of vertex {i} at level {n} sum to {Fraction(acc, denom)}")
    return denom, cum


def sample_paths(mu: MarkovMeasure, length: int, count: int, seed: int) -> list[FinitePath]:
    """``count`` independent paths, drawn exactly from rational transitions with a seeded RNG."""
    if not 0 <= length <= mu.max_level:
        raise InputError(f"length {length} outside 0..{mu.max_level}")
    rng = random.Random(seed)
    tables: dict[tuple[int, int], tuple] = {}
    out = []
    for _ in range(count):
        src, steps = 0, []
        for n in range(length):
            key = (n, src)
            if key not in tables:
                tables[key] = _step_table(mu, n, src)
            denom, cum = tables[key]
            r = rng.randrange(denom)
            for acc, edge in cum:
                if r < acc:
                    break
            steps.append(edge)
            src = edge[0]
        out.append(FinitePath(tuple(steps)))
    return out


def sample_path(mu: MarkovMeasure, length: int, seed: int) -> FinitePath:
    return sample_paths(mu, length, 1, seed)[0]
