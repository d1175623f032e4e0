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

import logging
from functools import cache
from itertools import combinations

import networkx as nx
import numpy as np

from utils.errors import UnknownName
from utils.graph import Graph, VertexSet, complement, vertex_set


def _triangle_free_process(num_vertices: int, rng: np.random.Generator) -> list[int]:
    """Insert the pairs in random order, skipping any pair that would close a triangle."""
    rows = [0] * num_vertices
    if num_vertices < 2:
        return rows
    us, vs = np.triu_indices(num_vertices, 1)
    for i in rng.permutation(len(us)).tolist():
        u, v = int(us[i]), int(vs[i])
        if not rows[u] & rows[v]:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
    return rows


def gen_tfp_complement(num_vertices: int, rng: np.random.Generator) -> Graph:
    """Complement of a maximal triangle-free graph grown by the random process."""
    if num_vertices < 1:
        raise ValueError("need at least one vertex")
    rows = _triangle_free_process(num_vertices, rng)
    return complement(Graph(num_vertices, tuple(rows)))


def gen_random_alpha2(num_vertices: int, rng: np.random.Generator, keep: float = 0.7) -> Graph:
    """Like gen_tfp_complement, but each triangle-free edge survives with probability `keep`."""
    if not 0 <= keep <= 1:
        raise ValueError("keep must lie in [0, 1]")
    rows = _triangle_free_process(num_vertices, rng)
    triangle_free = Graph(num_vertices, tuple(rows))
    kept = [(u, v) for u, v in triangle_free.edges() if rng.random() < keep]
    return complement(Graph.from_edges(num_vertices, kept))


def gen_c5_blowup_complement(t: int) -> Graph:
    """Complement of C5 with every vertex replaced by t independent copies. Part i is t*i .. t*i+t-1."""
    if t < 1:
        raise ValueError("t must be at least 1")
    edges = []
    for part in range(5):
        following = (part + 1) % 5
        for i in range(t):
            for j in range(t):
                edges.append((part * t + i, following * t + j))
    return complement(Graph.from_edges(5 * t, edges))


def two_clique_complement(s: int, t: int) -> Graph:
    """Complement of K_{s,t}: disjoint cliques on 0..s-1 and s..s+t-1."""
    left = combinations(range(s), 2)
    right = combinations(range(s, s + t), 2)
    return Graph.from_edges(s + t, list(left) + list(right))


def perturb_packable_instance(g: Graph, rng: np.random.Generator, drop: float = 0.3) -> Graph:
    """Random relabelling of g with some edges removed, keeping the complement triangle-free."""
    order = rng.permutation(g.vertex_count).tolist()
    co = list(complement(g.relabel(order)).adjacency)
    candidates = [(u, v) for u in range(g.vertex_count) for v in range(u + 1, g.vertex_count)
                  if not co[u] >> v & 1]
    for i in rng.permutation(len(candidates)).tolist():
        u, v = candidates[i]
        if rng.random() < drop and not co[u] & co[v]:
            co[u] |= 1 << v
            co[v] |= 1 << u
    return complement(Graph(g.vertex_count, tuple(co)))


# Named graphs

def _cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def five_wheel() -> Graph:
    """C5 on 0..4 and hub 5."""
    return Graph.from_edges(6, [(i, (i + 1) % 5) for i in range(5)] + [(i, 5) for i in range(5)])


def circulant13_minus_one_complement() -> Graph:
    """Complement of C13(1, 5) minus vertex 12: 12 vertices, clique number 4."""
    circulant = nx.circulant_graph(13, [1, 5])
    circulant.remove_node(12)
    return complement(Graph.from_networkx(circulant))


def clebsch() -> Graph:
    """The folded 5-cube: 4-bit words adjacent at Hamming distance 1 or 4."""
    edges = [(u, v) for u, v in combinations(range(16), 2) if (u ^ v).bit_count() in (1, 4)]
    return Graph.from_edges(16, edges)


def clebsch_minus_one_complement() -> Graph:
    graph = clebsch().to_networkx()
    graph.remove_node(15)
    return complement(Graph.from_networkx(graph))


# GF(4) = {0, 1, w, w^2} as 0..3, addition is xor
_GF4_EXP = (1, 2, 3)
_GF4_LOG = {1: 0, 2: 1, 3: 2}


def _gf4_mul(x: int, y: int) -> int:
    if not x or not y:
        return 0
    return _GF4_EXP[(_GF4_LOG[x] + _GF4_LOG[y]) % 3]


@cache
def _steiner_blocks() -> tuple[VertexSet, ...]:
    """Blocks of S(3, 6, 22) on points 0..21, where 0..20 is PG(2, 4) and 21 is the extra point.

    The blocks are the lines plus the extra point, and one of the three
    classes of 56 hyperovals.
    """
    points = [(x, y, z) for x in range(4) for y in range(4) for z in range(4)
              if (x, y, z) != (0, 0, 0) and [c for c in (x, y, z) if c][0] == 1]

    def incident(p, line) -> bool:
        return not (_gf4_mul(p[0], line[0]) ^ _gf4_mul(p[1], line[1]) ^ _gf4_mul(p[2], line[2]))

    lines = [vertex_set(i for i, p in enumerate(points) if incident(p, line)) for line in points]

    hyperovals = []
    for six in combinations(range(len(points)), 6):
        mask = vertex_set(six)
        if all((mask & line).bit_count() <= 2 for line in lines):
            hyperovals.append(mask)

    first = hyperovals[0]
    same_class = [h for h in hyperovals if (h & first).bit_count() % 2 == 0]
    logging.debug("PG(2,4): %d hyperovals, %d in the chosen class", len(hyperovals), len(same_class))

    extra = 1 << len(points)
    return tuple(line | extra for line in lines) + tuple(same_class)


def higman_sims() -> Graph:
    """Vertex 0 joins the 22 points 1..22, a point joins the blocks holding it, disjoint blocks are adjacent."""
    blocks = _steiner_blocks()
    first_block = 23
    edges = [(0, p) for p in range(1, 23)]
    for i, block in enumerate(blocks):
        for point in range(22):
            if block >> point & 1:
                edges.append((point + 1, first_block + i))
        for j in range(i + 1, len(blocks)):
            if not block & blocks[j]:
                edges.append((first_block + i, first_block + j))
    return Graph.from_edges(first_block + len(blocks), edges)


def higman_sims_complement() -> Graph:
    return complement(higman_sims())


NAMED = {
    "five_wheel": five_wheel,
    "c5": lambda: _cycle(5),
    "p3": lambda: Graph.from_edges(3, [(0, 1), (1, 2)]),
    "petersen": lambda: Graph.from_networkx(nx.petersen_graph()),
    "petersen_complement": lambda: complement(Graph.from_networkx(nx.petersen_graph())),
    "circulant13_minus_one_complement": circulant13_minus_one_complement,
    "clebsch": clebsch,
    "clebsch_minus_one_complement": clebsch_minus_one_complement,
    "higman_sims": higman_sims,
    "higman_sims_complement": higman_sims_complement,
}

# maximum cliques known by construction
KNOWN_CLIQUES = {
    "higman_sims_complement": vertex_set(range(1, 23)),
}


def named(name: str) -> Graph:
    """A named graph; `k_<n>` is the complete graph on n vertices."""
    key = name.strip().lower()
    if key in NAMED:
        return NAMED[key]()
    if key.startswith("k_") and key[2:].isdigit():
        return Graph.complete(int(key[2:]))
    raise UnknownName(f"unknown graph {name!r}, known: {', '.join(sorted(NAMED))}, k_<n>")


def named_clique(name: str) -> VertexSet | None:
    key = name.strip().lower()
    if key.startswith("k_") and key[2:].isdigit():
        return (1 << int(key[2:])) - 1
    return KNOWN_CLIQUES.get(key)
