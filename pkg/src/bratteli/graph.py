"""Graded graphs (finite truncations of Bratteli diagrams) and exact path counting.

A graph stores its vertex labels level by level in canonical order and, for each
pair of adjacent levels, a mapping ``(i, j) -> multiplicity`` where ``i`` indexes
the lower level and ``j`` the upper one.  Everything is integral; dimensions are
Python ints and never overflow.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from types import MappingProxyType
from typing import Any, Callable, Hashable, Iterator, Mapping, Sequence

from .errors import InputError

Label = Hashable

# kind -> (encode label to str, decode str to label)
LABEL_CODECS: dict[str, tuple[Callable[[Any], str], Callable[[str], Any]]] = {}


def register_codec(kind: str, encode: Callable[[Any], str], decode: Callable[[str], Any]) -> None:
    LABEL_CODECS[kind] = (encode, decode)


def _codec(kind: str):
    return LABEL_CODECS.get(kind, (str, str))


@dataclass(frozen=True)
class VertexId:
    level: int
    index: int
    label: Label


@dataclass(frozen=True)
class FinitePath:
    """A path from the root: one ``(target index, copy number)`` pair per level.

    The source of step ``i`` is the target of step ``i - 1`` (the root for
    ``i = 0``), so a path is a sequence of edges rather than vertices.
    """

    steps: tuple[tuple[int, int], ...] = ()

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def endpoint_index(self) -> int:
        return self.steps[-1][0] if self.steps else 0

    def vertices(self) -> list[int]:
        """Vertex indices visited, starting with the root."""
        return [0] + [t for t, _ in self.steps]

    def prefix(self, n: int) -> FinitePath:
        return FinitePath(self.steps[:n])


class GradedGraph:
    """Leveled graph with exactly one root and multiplicity-weighted edges.

    Immutable after construction; adjacency and dimensions are precomputed so
    queries are pure lookups.
    """

    def __init__(
        self,
        levels: Sequence[Sequence[Label]],
        edges: Sequence[Mapping[tuple[int, int], int]],
        kind: str = "generic",
    ):
        if not levels:
            raise InputError("a graph needs at least level 0")
        if len(levels[0]) != 1:
            raise InputError(f"level 0 must hold exactly one vertex, got {len(levels[0])}")
        if len(edges) != len(levels) - 1:
            raise InputError("need one edge table per adjacent pair of levels")
        self.kind = kind
        self._levels = tuple(tuple(level) for level in levels)
        self._index = tuple({label: i for i, label in enumerate(level)} for level in self._levels)
        for n, level in enumerate(self._levels):
            if len(self._index[n]) != len(level):
                raise InputError(f"duplicate label at level {n}")

        frozen_edges = []
        parents = []
        children = []
        for n, table in enumerate(edges):
            lo, hi = len(self._levels[n]), len(self._levels[n + 1])
            clean = {}
            ups: list[list[tuple[int, int]]] = [[] for _ in range(lo)]
            downs: list[list[tuple[int, int]]] = [[] for _ in range(hi)]
            for (i, j), mult in sorted(table.items()):
                if not (0 <= i < lo and 0 <= j < hi):
                    raise InputError(f"edge ({i}, {j}) out of range between levels {n} and {n + 1}")
                if not isinstance(mult, int) or mult <= 0:
                    raise InputError(f"multiplicity must be a positive integer, got {mult!r}")
                clean[(i, j)] = mult
                ups[i].append((j, mult))
                downs[j].append((i, mult))
            if any(not d for d in downs):
                j = next(j for j, d in enumerate(downs) if not d)
                raise InputError(f"vertex {self._levels[n + 1][j]!r} at level {n + 1} has no incoming edge")
            if any(not u for u in ups):
                i = next(i for i, u in enumerate(ups) if not u)
                raise InputError(f"vertex {self._levels[n][i]!r} at level {n} has no outgoing edge")
            frozen_edges.append(MappingProxyType(clean))
            children.append(tuple(tuple(u) for u in ups))
            parents.append(tuple(tuple(d) for d in downs))
        self._edges = tuple(frozen_edges)
        self._children = tuple(children)
        self._parents = (((),),) + tuple(parents)

        dims = [(1,)]
        for n in range(1, len(self._levels)):
            prev = dims[-1]
            dims.append(tuple(sum(m * prev[i] for i, m in self._parents[n][j]) for j in range(len(self._levels[n]))))
        self._dims = tuple(dims)

    # -- structure -------------------------------------------------------

    @property
    def max_level(self) -> int:
        return len(self._levels) - 1

    @property
    def root(self) -> VertexId:
        return VertexId(0, 0, self._levels[0][0])

    def labels(self, n: int) -> tuple[Label, ...]:
        self._check_level(n)
        return self._levels[n]

    def size(self, n: int) -> int:
        self._check_level(n)
        return len(self._levels[n])

    def vertex(self, n: int, label: Label) -> VertexId:
        self._check_level(n)
        try:
            return VertexId(n, self._index[n][label], label)
        except KeyError:
            raise InputError(f"no vertex {label!r} at level {n}") from None

    def find(self, label: Label) -> VertexId:
        """Locate a label without knowing its level."""
        for n, index in enumerate(self._index):
            if label in index:
                return VertexId(n, index[label], label)
        raise InputError(f"no vertex {label!r} in graph")

    def at(self, n: int, i: int) -> VertexId:
        self._check_level(n)
        if not 0 <= i < len(self._levels[n]):
            raise InputError(f"level {n} has no vertex index {i}")
        return VertexId(n, i, self._levels[n][i])

    def edge_table(self, n: int) -> Mapping[tuple[int, int], int]:
        """Edges between level ``n`` and ``n + 1``."""
        if not 0 <= n < self.max_level:
            raise InputError(f"no edges leave level {n}")
        return self._edges[n]

    def multiplicity(self, n: int, i: int, j: int) -> int:
        return self.edge_table(n).get((i, j), 0)

    def children(self, n: int, i: int) -> tuple[tuple[int, int], ...]:
        """``(j, mult)`` pairs for edges from vertex ``i`` of level ``n`` upward."""
        if n >= self.max_level:
            return ()
        return self._children[n][i]

    def parents(self, n: int, j: int) -> tuple[tuple[int, int], ...]:
        """``(i, mult)`` pairs for edges into vertex ``j`` of level ``n``."""
        return self._parents[n][j] if n > 0 else ()

    def dims(self, n: int) -> tuple[int, ...]:
        self._check_level(n)
        return self._dims[n]

    def _check_level(self, n: int) -> None:
        if not 0 <= n <= self.max_level:
            raise InputError(f"level {n} not materialized (max level {self.max_level})")

    def _check_vertex(self, v: VertexId) -> None:
        self._check_level(v.level)
        if not 0 <= v.index < len(self._levels[v.level]) or self._levels[v.level][v.index] != v.label:
            raise InputError(f"unknown vertex {v!r}")

    def truncate(self, max_level: int) -> GradedGraph:
        self._check_level(max_level)
        return GradedGraph(self._levels[: max_level + 1], self._edges[:max_level], self.kind)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedGraph):
            return NotImplemented
        return (
            self.kind == other.kind
            and self._levels == other._levels
            and [dict(t) for t in self._edges] == [dict(t) for t in other._edges]
        )

    def __hash__(self):
        return hash((self.kind, self._levels))

    def __repr__(self) -> str:
        sizes = ",".join(str(len(level)) for level in self._levels)
        return f"GradedGraph(kind={self.kind!r}, level_sizes=[{sizes}])"


# -- queries -----------------------------------------------------------------


def level_vertices(graph: GradedGraph, n: int) -> list[VertexId]:
    return [VertexId(n, i, label) for i, label in enumerate(graph.labels(n))]


def dimension(graph: GradedGraph, v: VertexId) -> int:
    """Number of paths root -> v, counting multiplicities."""
    graph._check_vertex(v)
    return graph.dims(v.level)[v.index]


def skew_dimension(graph: GradedGraph, u: VertexId, v: VertexId) -> int:
    """Number of paths u -> v, counting multiplicities."""
    graph._check_vertex(u)
    graph._check_vertex(v)
    if u.level > v.level:
        raise InputError(f"level({u.label!r}) = {u.level} exceeds level({v.label!r}) = {v.level}")
    counts = {u.index: 1}
    for n in range(u.level, v.level):
        nxt: dict[int, int] = {}
        for i, c in counts.items():
            for j, m in graph.children(n, i):
                nxt[j] = nxt.get(j, 0) + m * c
        counts = nxt
    return counts.get(v.index, 0)


def paths_from_above(graph: GradedGraph, v: VertexId) -> list[dict[int, int]]:
    """Backward counts: entry ``[n][i]`` is the number of paths from (n, i) to v."""
    graph._check_vertex(v)
    table: list[dict[int, int]] = [dict() for _ in range(v.level + 1)]
    table[v.level] = {v.index: 1}
    for n in range(v.level - 1, -1, -1):
        above = table[n + 1]
        cur: dict[int, int] = {}
        for j, c in above.items():
            for i, m in graph.parents(n + 1, j):
                cur[i] = cur.get(i, 0) + m * c
        table[n] = cur
    return table


def total_paths(graph: GradedGraph, n: int) -> int:
    return sum(graph.dims(n))


def check_path(graph: GradedGraph, path: FinitePath) -> None:
    if len(path) > graph.max_level:
        raise InputError(f"path of length {len(path)} exceeds max level {graph.max_level}")
    src = 0
    for n, (j, copy) in enumerate(path.steps):
        mult = graph.multiplicity(n, src, j) if 0 <= j < graph.size(n + 1) else 0
        if mult == 0:
            raise InputError(f"no edge from vertex {src} at level {n} to vertex {j} at level {n + 1}")
        if not 0 <= copy < mult:
            raise InputError(f"copy number {copy} out of range for multiplicity {mult}")
        src = j


def iter_paths(graph: GradedGraph, n: int, end: int | None = None) -> Iterator[FinitePath]:
    """Enumerate all paths of length ``n`` (optionally ending at vertex index ``end``).

    Built top-down from ``end`` when given so only co-terminal paths are visited.
    """
    graph._check_level(n)

    def down(level: int, j: int, tail: tuple) -> Iterator[tuple]:
        if level == 0:
            yield tail
            return
        for i, m in graph.parents(level, j):
            for c in range(m):
                yield from down(level - 1, i, ((j, c),) + tail)

    ends = range(graph.size(n)) if end is None else [end]
    for j in ends:
        for steps in down(n, j, ()):
            yield FinitePath(steps)


# -- serialization -----------------------------------------------------------


def to_json(graph: GradedGraph) -> str:
    encode, _ = _codec(graph.kind)
    doc = {
        "kind": graph.kind,
        "levels": [[encode(label) for label in graph.labels(n)] for n in range(graph.max_level + 1)],
        "edges": [
            [n, i, j, m] for n in range(graph.max_level) for (i, j), m in sorted(graph.edge_table(n).items())
        ],
    }
    return json.dumps(doc, separators=(",", ":"))


def from_json(text: str) -> GradedGraph:
    try:
        doc = json.loads(text)
        kind = doc.get("kind", "generic")
        _, decode = _codec(kind)
        levels = [[decode(s) for s in level] for level in doc["levels"]]
        edges: list[dict[tuple[int, int], int]] = [dict() for _ in range(len(levels) - 1)]
        for n, i, j, m in doc["edges"]:
            if not 0 <= n < len(edges):
                raise InputError(f"edge level {n} out of range")
            edges[n][(i, j)] = m
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"malformed graph json: {exc}") from exc
    return GradedGraph(levels, edges, kind)


def to_dot(graph: GradedGraph) -> str:
    encode, _ = _codec(graph.kind)
    out = ["digraph bratteli {", "  rankdir=TB;"]
    for n in range(graph.max_level + 1):
        out.append(f"  subgraph level_{n} {{")
        out.append("    rank=same;")
        for i, label in enumerate(graph.labels(n)):
            text = encode(label).replace('"', '\\"')
            out.append(f'    "{n}:{i}" [label="{text}"];')
        out.append("  }")
    for n in range(graph.max_level):
        for (i, j), m in sorted(graph.edge_table(n).items()):
            attr = f' [label="{m}"]' if m > 1 else ""
            out.append(f'  "{n}:{i}" -> "{n + 1}:{j}"{attr};')
    out.append("}")
    return "\n".join(out) + "\n"


def export(graph: GradedGraph, format: str = "json") -> str:
    if format == "json":
        return to_json(graph)
    if format == "dot":
        return to_dot(graph)
    raise InputError(f"unknown export format {format!r}")
