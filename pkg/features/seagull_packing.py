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
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from utils.config import get_int
from utils.errors import BudgetExhausted, NotFound, TooLarge, WrongOrder
from utils.graph import Graph, VertexSet, lowest, members

Seagull = tuple[int, int, int]

BRUTEFORCE_LIMIT = 15


@dataclass(frozen=True)
class SeagullPartition:
    """Disjoint seagulls, each stored as (endpoint, middle, endpoint)."""
    triples: tuple[Seagull, ...]

    @property
    def vertices(self) -> VertexSet:
        mask = 0
        for triple in self.triples:
            for v in triple:
                mask |= 1 << v
        return mask

    def relabel(self, index_map: Sequence[int]) -> "SeagullPartition":
        return SeagullPartition(tuple(tuple(index_map[v] for v in t) for t in self.triples))

    def format(self) -> str:
        return "".join(f"s {a + 1} {mid + 1} {b + 1}\n" for a, mid, b in self.triples)


def seagull_shape(g: Graph, t: Sequence[int]) -> Seagull | None:
    """The ordering (a, mid, b) in which t induces a path, if there is one."""
    x, y, z = t
    if len({x, y, z}) != 3:
        raise ValueError("a seagull needs three distinct vertices")
    for a, mid, b in ((y, x, z), (x, y, z), (x, z, y)):
        if g.has_edge(a, mid) and g.has_edge(mid, b) and not g.has_edge(a, b):
            return a, mid, b
    return None


def is_seagull(g: Graph, t: Sequence[int]) -> bool:
    return seagull_shape(g, t) is not None


def seagulls_through(g: Graph, v: int, available: VertexSet) -> Iterator[Seagull]:
    """Seagulls containing v whose other two vertices lie in `available`.

    v as an endpoint comes first, then v as the middle vertex.
    """
    available &= ~(1 << v)
    for b in members(available & ~g.adjacency[v]):
        for mid in members(available & g.adjacency[v] & g.adjacency[b]):
            yield v, mid, b
    around = available & g.adjacency[v]
    for a in members(around):
        later = around >> (a + 1) << (a + 1)
        for b in members(later & ~g.adjacency[a]):
            yield a, v, b


def _greedy_clique_size(g: Graph, s: VertexSet) -> int:
    size = 0
    while s:
        best = max(members(s), key=lambda u: (g.adjacency[u] & s).bit_count())
        size += 1
        s &= g.adjacency[best]
    return size


def seagull_partition(g: Graph, budget: int | None = None) -> SeagullPartition:
    """Partition all vertices of g into seagulls by exhaustive backtracking.

    Raises NotFound when no partition exists and BudgetExhausted when the
    search visits more than `budget` nodes (default from Seagull_NodeBudget).
    """
    if g.vertex_count % 3 != 0:
        raise WrongOrder(f"{g.vertex_count} vertices cannot be split into triples")
    if budget is None:
        budget = get_int("Seagull_NodeBudget", 2_000_000)

    dead: set[VertexSet] = set()
    nodes = 0

    def search(unused: VertexSet) -> list[Seagull] | None:
        nonlocal nodes
        if not unused:
            return []
        if unused in dead:
            return None
        nodes += 1
        if nodes > budget:
            raise BudgetExhausted(f"seagull search exceeded {budget} nodes")

        # a seagull holds at most two vertices of any clique
        if _greedy_clique_size(g, unused) > 2 * (unused.bit_count() // 3):
            dead.add(unused)
            return None

        v = lowest(unused)
        for triple in seagulls_through(g, v, unused):
            rest = search(unused & ~(1 << triple[0]) & ~(1 << triple[1]) & ~(1 << triple[2]))
            if rest is not None:
                return [triple] + rest

        dead.add(unused)
        return None

    found = search(g.full_set)
    logging.debug("seagull search: %d nodes for %d vertices", nodes, g.vertex_count)
    if found is None:
        raise NotFound(f"no partition of {g.vertex_count} vertices into seagulls")
    return SeagullPartition(tuple(found))


def max_disjoint_seagulls_bruteforce(g: Graph) -> int:
    if g.vertex_count > BRUTEFORCE_LIMIT:
        raise TooLarge(f"brute force is limited to {BRUTEFORCE_LIMIT} vertices")

    @lru_cache(maxsize=None)
    def best(unused: VertexSet) -> int:
        ceiling = unused.bit_count() // 3
        if ceiling == 0:
            return 0
        v = lowest(unused)
        rest = unused & ~(1 << v)
        result = best(rest)
        for a, mid, b in seagulls_through(g, v, rest):
            if result == ceiling:
                break
            result = max(result, 1 + best(rest & ~(1 << a) & ~(1 << mid) & ~(1 << b)))
        return result

    return best(g.full_set)
