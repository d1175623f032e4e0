#      Minorforge builds dense minors of graphs with no independent set of size three.
#      Copyright (C) 2025 mldchan
#
#      This program is free software: you can redistribute it and/or modify
#      it under the terms of the GNU Affero General Public License as
#      published by the Free Software Foundation, either version 3 of the
#      License, or (at your option) any later version.
#
#      This program is distributed in the hope that it will be useful,
#      but WITHOUT ANY WARRANTY; without even the implied warranty of
#      MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#      GNU Affero General Public License for more details.
#
#      You should have received a copy of the GNU Affero General Public License
#      along with this program.  If not, see <https://www.gnu.org/licenses/>.
#

"""Immutable simple graphs on vertices 0..n-1 with bitset adjacency.

A vertex set is a plain int used as a bitset: bit v is set when v is a member.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple

import networkx as nx

from utils.errors import InvalidDecomposition, ParseError

VertexSet = int


def vertex_set(vertices: Iterable[int]) -> VertexSet:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(s: VertexSet) -> list[int]:
    """Members of a vertex set in increasing order."""
    out = []
    while s:
        low = s & -s
        out.append(low.bit_length() - 1)
        s ^= low
    return out


def lowest(s: VertexSet) -> int:
    return (s & -s).bit_length() - 1


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    adjacency: tuple[int, ...]

    def __post_init__(self):
        if len(self.adjacency) != self.vertex_count:
            raise ValueError("adjacency has %d rows for %d vertices" % (len(self.adjacency), self.vertex_count))

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * vertex_count
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge {u}-{v} out of range for {vertex_count} vertices")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(vertex_count, tuple(rows))

    @classmethod
    def empty(cls, vertex_count: int) -> "Graph":
        return cls(vertex_count, (0,) * vertex_count)

    @classmethod
    def complete(cls, vertex_count: int) -> "Graph":
        full = (1 << vertex_count) - 1
        return cls(vertex_count, tuple(full & ~(1 << v) for v in range(vertex_count)))

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "Graph":
        nodes = sorted(graph.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        return cls.from_edges(len(nodes), ((index[u], index[v]) for u, v in graph.edges() if u != v))

    @property
    def full_set(self) -> VertexSet:
        return (1 << self.vertex_count) - 1

    @cached_property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adjacency) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def neighbours(self, v: int) -> list[int]:
        return members(self.adjacency[v])

    def non_neighbours(self, v: int) -> VertexSet:
        return self.full_set & ~self.adjacency[v] & ~(1 << v)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, row in enumerate(self.adjacency):
            for v in members(row >> (u + 1)):
                yield u, u + 1 + v

    def neighbourhood(self, s: VertexSet) -> VertexSet:
        """Vertices with a neighbour in s (may include members of s)."""
        reach = 0
        for v in members(s):
            reach |= self.adjacency[v]
        return reach

    def is_clique(self, s: VertexSet) -> bool:
        for v in members(s):
            if (s & ~(1 << v)) & ~self.adjacency[v]:
                return False
        return True

    def is_connected_set(self, s: VertexSet) -> bool:
        if not s:
            return False
        seen = s & -s
        frontier = seen
        while frontier:
            frontier = self.neighbourhood(frontier) & s & ~seen
            seen |= frontier
        return seen == s

    def relabel(self, order: list[int]) -> "Graph":
        """New graph where old vertex order[i] becomes vertex i."""
        position = {old: new for new, old in enumerate(order)}
        return Graph.from_edges(self.vertex_count, ((position[u], position[v]) for u, v in self.edges()))

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.vertex_count))
        graph.add_edges_from(self.edges())
        return graph


def complement(g: Graph) -> Graph:
    full = g.full_set
    return Graph(g.vertex_count, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adjacency)))


def induced_subgraph(g: Graph, s: VertexSet) -> tuple[Graph, tuple[int, ...]]:
    """G[s] relabelled to 0..|s|-1, with the map from new index to old vertex."""
    index_map = tuple(members(s))
    position = {old: new for new, old in enumerate(index_map)}
    rows = []
    for old in index_map:
        row = 0
        for other in members(g.adjacency[old] & s):
            row |= 1 << position[other]
        rows.append(row)
    return Graph(len(index_map), tuple(rows)), index_map


@dataclass(frozen=True)
class BranchDecomposition:
    host: Graph
    parts: tuple[VertexSet, ...]

    @classmethod
    def of(cls, host: Graph, parts: Iterable[Iterable[int]]) -> "BranchDecomposition":
        return cls(host, tuple(vertex_set(part) for part in parts))

    def problem(self) -> str | None:
        """Reason code when the parts are not a valid branch decomposition."""
        covered = 0
        for part in self.parts:
            if not part:
                return "empty_part"
            if part & ~self.host.full_set:
                return "out_of_range"
            if part & covered:
                return "overlap"
            covered |= part
            if not self.host.is_connected_set(part):
                return "disconnected_part"
        return None

    def format(self) -> str:
        lines = []
        for i, part in enumerate(self.parts):
            lines.append(f"part {i + 1}: " + " ".join(str(v + 1) for v in members(part)))
        return "\n".join(lines) + ("\n" if lines else "")


class MinorCheck(NamedTuple):
    valid: bool
    reason: str

    def __bool__(self) -> bool:
        return self.valid


def contract(g: Graph, d: BranchDecomposition) -> Graph:
    """One vertex per part; parts are adjacent when some edge of g joins them."""
    reason = d.problem()
    if reason is not None:
        raise InvalidDecomposition(reason)

    reach = [g.neighbourhood(part) for part in d.parts]
    rows = []
    for i, r in enumerate(reach):
        row = 0
        for j, part in enumerate(d.parts):
            if i != j and r & part:
                row |= 1 << j
        rows.append(row)
    return Graph(len(d.parts), tuple(rows))


def verify_minor(g: Graph, h: Graph, d: BranchDecomposition) -> MinorCheck:
    if len(d.parts) != h.vertex_count:
        return MinorCheck(False, "part_count")
    reason = d.problem()
    if reason is not None:
        return MinorCheck(False, reason)

    reach = [g.neighbourhood(part) for part in d.parts]
    for i, j in h.edges():
        if not reach[i] & d.parts[j]:
            return MinorCheck(False, "missing_cross_edge")
    return MinorCheck(True, "ok")


def read_graph(text: str) -> Graph:
    vertex_count = None
    expected_edges = 0
    edges = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        fields = raw.split()
        if not fields or fields[0] == "c":
            continue
        try:
            if fields[0] == "p":
                if vertex_count is not None:
                    raise ParseError(f"line {line_no}: second header")
                # also accept the DIMACS form "p edge <n> <m>"
                numbers = fields[2:] if len(fields) == 4 else fields[1:]
                if len(numbers) != 2:
                    raise ParseError(f"line {line_no}: malformed header")
                vertex_count, expected_edges = int(numbers[0]), int(numbers[1])
            elif fields[0] == "e":
                if vertex_count is None:
                    raise ParseError(f"line {line_no}: edge before header")
                if len(fields) < 3:
                    raise ParseError(f"line {line_no}: malformed edge")
                u, v = int(fields[1]), int(fields[2])
                if not (1 <= u <= vertex_count and 1 <= v <= vertex_count) or u == v:
                    raise ParseError(f"line {line_no}: bad edge {u} {v}")
                key = (min(u, v) - 1, max(u, v) - 1)
                if key in edges:
                    raise ParseError(f"line {line_no}: duplicate edge {u} {v}")
                edges.add(key)
            else:
                raise ParseError(f"line {line_no}: unknown line type {fields[0]!r}")
        except ValueError as e:
            raise ParseError(f"line {line_no}: {e}") from e

    if vertex_count is None:
        raise ParseError("missing header line")
    if len(edges) != expected_edges:
        raise ParseError(f"header says {expected_edges} edges, found {len(edges)}")
    return Graph.from_edges(vertex_count, edges)


def write_graph(g: Graph, comments: Iterable[str] = ()) -> str:
    lines = [f"c {comment}" for comment in comments]
    lines.append(f"p {g.vertex_count} {g.edge_count}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
