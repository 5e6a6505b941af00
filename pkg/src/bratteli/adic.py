"""Adic (Vershik) transformation on finite path truncations."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .errors import InputError, ResourceError, max_cells
from .graph import FinitePath, GradedGraph, VertexId, check_path
from .measures import MarkovMeasure, cylinder_probability

ADIC_MAX_DIM = 10_000

Edge = tuple[int, int]  # (source index, copy number)


@dataclass(frozen=True, eq=False)
class AdicOrder:
    """Total order on the incoming edges of every vertex.

    ``incoming[n][j]`` lists the edges into vertex ``j`` of level ``n`` from
    smallest to largest; level 0 has none.
    """

    graph: GradedGraph
    incoming: tuple[tuple[tuple[Edge, ...], ...], ...]
    _rank: tuple = field(init=False, repr=False)

    def __post_init__(self):
        ranks = tuple(tuple({e: r for r, e in enumerate(edges)} for edges in level) for level in self.incoming)
        object.__setattr__(self, "_rank", ranks)
        for n in range(1, self.graph.max_level + 1):
            for j in range(self.graph.size(n)):
                expected = {(i, c) for i, m in self.graph.parents(n, j) for c in range(m)}
                if set(self.incoming[n][j]) != expected or len(self.incoming[n][j]) != len(expected):
                    raise InputError(f"order at level {n}, vertex {j} is not a total order on its incoming edges")

    def first(self, n: int, j: int) -> Edge:
        return self.incoming[n][j][0]

    def following(self, n: int, j: int, edge: Edge) -> Edge | None:
        r = self._rank[n][j][edge] + 1
        edges = self.incoming[n][j]
        return edges[r] if r < len(edges) else None


def _young_key(graph: GradedGraph, n: int, j: int, i: int) -> int:
    big, small = graph.labels(n)[j], graph.labels(n - 1)[i]
    return next(r for r in range(len(big)) if r >= len(small) or small[r] != big[r])


def _pascal_key(graph: GradedGraph, n: int, j: int, i: int) -> int:
    big, small = graph.labels(n)[j], graph.labels(n - 1)[i]
    return 0 if small[0] + 1 == big[0] else 1


def default_order(graph: GradedGraph) -> AdicOrder:
    """Young: ascending row of the removed cell.  Pascal: the edge raising
    coordinate 0 first.  Anything else: source index, then copy number."""
    if graph.kind == "young":
        key = _young_key
    elif graph.kind == "pascal":
        key = _pascal_key
    else:
        key = lambda g, n, j, i: i  # noqa: E731
    incoming = [()]
    for n in range(1, graph.max_level + 1):
        level = []
        for j in range(graph.size(n)):
            edges = [(i, c) for i, m in graph.parents(n, j) for c in range(m)]
            edges.sort(key=lambda e: (key(graph, n, j, e[0]), e[0], e[1]))
            level.append(tuple(edges))
        incoming.append(tuple(level))
    return AdicOrder(graph, tuple(incoming))


def minimal_path(order: AdicOrder, v: VertexId) -> FinitePath:
    return _extreme_path(order, v.level, v.index, first=True)


def maximal_path(order: AdicOrder, v: VertexId) -> FinitePath:
    return _extreme_path(order, v.level, v.index, first=False)


def _extreme_path(order: AdicOrder, n: int, j: int, first: bool) -> FinitePath:
    steps = []
    while n > 0:
        i, c = order.incoming[n][j][0 if first else -1]
        steps.append((j, c))
        j, n = i, n - 1
    return FinitePath(tuple(reversed(steps)))


def adic_successor(path: FinitePath, order: AdicOrder) -> FinitePath | None:
    """Next path with the same endpoint, or None if ``path`` is maximal.

    The lowest edge that is not the largest edge into its target is replaced
    by the next one, and everything below it becomes the minimal path.
    """
    check_path(order.graph, path)
    verts = path.vertices()
    for k, (j, c) in enumerate(path.steps, start=1):
        nxt = order.following(k, j, (verts[k - 1], c))
        if nxt is None:
            continue
        i, c2 = nxt
        below = _extreme_path(order, k - 1, i, first=True).steps
        return FinitePath(below + ((j, c2),) + path.steps[k:])
    return None


def adic_orbit(order: AdicOrder, v: VertexId) -> Iterator[FinitePath]:
    path: FinitePath | None = minimal_path(order, v)
    while path is not None:
        yield path
        path = adic_successor(path, order)


def _budget(graph: GradedGraph, n: int) -> None:
    cap = max_cells(ADIC_MAX_DIM)
    dims = graph.dims(n)
    if max(dims) > cap:
        raise ResourceError(f"a vertex at level {n} has {max(dims)} paths, over the budget of {cap}")


@dataclass
class OrbitReport:
    level: int
    class_sizes: list[int]
    verified: bool
    violations: list[str]


def orbit_partition_check(graph: GradedGraph, order: AdicOrder, n: int) -> OrbitReport:
    """Check that successor orbits at level n are exactly the co-terminal classes."""
    if order.graph is not graph and order.graph != graph:
        raise InputError("order belongs to a different graph")
    if not 0 <= n <= graph.max_level:
        raise InputError(f"level {n} not materialized")
    _budget(graph, n)
    sizes, violations = [], []
    for j, label in enumerate(graph.labels(n)):
        v = VertexId(n, j, label)
        seen = set()
        for path in adic_orbit(order, v):
            if path.endpoint_index != j or len(path) != n:
                violations.append(f"orbit of {label!r} left its class at {path.steps}")
                break
            if path in seen:
                violations.append(f"orbit of {label!r} revisits {path.steps}")
                break
            seen.add(path)
        sizes.append(len(seen))
        if len(seen) != graph.dims(n)[j]:
            violations.append(f"orbit of {label!r} has {len(seen)} paths, class has {graph.dims(n)[j]}")
    return OrbitReport(n, sizes, not violations, violations)


def invariance_check(mu: MarkovMeasure, order: AdicOrder, n: int) -> Fraction:
    """Largest change in cylinder probability under one adic step at level n."""
    graph = mu.graph
    if not 0 <= n <= graph.max_level:
        raise InputError(f"level {n} not materialized")
    _budget(graph, n)
    worst = Fraction(0)
    for j, label in enumerate(graph.labels(n)):
        prev = None
        for path in adic_orbit(order, VertexId(n, j, label)):
            p = cylinder_probability(mu, path)
            if prev is not None:
                worst = max(worst, abs(p - prev))
            prev = p
    return worst
