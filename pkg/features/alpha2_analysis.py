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
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, NamedTuple

import networkx as nx
import numpy as np
from scipy import sparse
from scipy.optimize import Bounds, LinearConstraint, milp

from utils.config import get_int
from utils.errors import AlphaTooLarge, BudgetExhausted, NotAClique
from utils.graph import Graph, VertexSet, complement, lowest, members, vertex_set


def is_alpha_le_2(g: Graph) -> bool:
    """True when g has no independent set of size three, i.e. its complement is triangle-free."""
    co = complement(g)
    for u in range(g.vertex_count):
        higher = co.adjacency[u] >> (u + 1) << (u + 1)
        for v in members(higher):
            if co.adjacency[v] & higher:
                return False
    return True


# Maximum clique

def _colour_classes(g: Graph, candidates: VertexSet) -> tuple[list[int], list[int]]:
    """Greedy sequential colouring of g[candidates].

    Returns vertices in colour order with the colour number of each. A clique
    inside the first i vertices has at most bounds[i - 1] members.
    """
    order = []
    bounds = []
    uncoloured = candidates
    colour = 0
    while uncoloured:
        colour += 1
        available = uncoloured
        while available:
            v = lowest(available)
            available &= ~g.adjacency[v] & ~(1 << v)
            uncoloured &= ~(1 << v)
            order.append(v)
            bounds.append(colour)
    return order, bounds


def _colour_bound(g: Graph, candidates: VertexSet) -> int:
    _, bounds = _colour_classes(g, candidates)
    return bounds[-1] if bounds else 0


class _CliqueSearch:
    def __init__(self, g: Graph, budget: int):
        self.g = g
        self.budget = budget
        self.nodes = 0

    def _tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExhausted(f"clique search exceeded {self.budget} nodes")

    def clique_number(self) -> int:
        best = [0]

        def expand(size: int, candidates: VertexSet):
            self._tick()
            order, bounds = _colour_classes(self.g, candidates)
            for i in range(len(order) - 1, -1, -1):
                if size + bounds[i] <= best[0]:
                    return
                v = order[i]
                inner = candidates & self.g.adjacency[v]
                if inner:
                    expand(size + 1, inner)
                elif size + 1 > best[0]:
                    best[0] = size + 1
                candidates &= ~(1 << v)

        if self.g.vertex_count:
            expand(0, self.g.full_set)
        return best[0]

    def first_clique(self, target: int) -> list[int] | None:
        """Lexicographically least clique with `target` vertices."""

        def search(chosen: list[int], candidates: VertexSet) -> list[int] | None:
            self._tick()
            if len(chosen) == target:
                return chosen
            while candidates:
                need = target - len(chosen)
                if candidates.bit_count() < need or _colour_bound(self.g, candidates) < need:
                    return None
                v = lowest(candidates)
                found = search(chosen + [v], candidates & self.g.adjacency[v])
                if found is not None:
                    return found
                candidates &= ~(1 << v)
            return None

        return search([], self.g.full_set)


BITSET_SEARCH_LIMIT = 128


class CliqueBounds(NamedTuple):
    """A clique of g together with a proven upper bound on the clique number."""
    clique: VertexSet
    upper: int

    @property
    def exact(self) -> bool:
        return self.clique.bit_count() >= self.upper


def greedy_clique(g: Graph) -> VertexSet:
    """Repeatedly take the candidate with the most candidate neighbours, lowest index on ties."""
    clique = 0
    candidates = g.full_set
    while candidates:
        v = max(members(candidates), key=lambda u: ((g.adjacency[u] & candidates).bit_count(), -u))
        clique |= 1 << v
        candidates &= g.adjacency[v]
    return clique


def greedy_clique_bounds(g: Graph) -> CliqueBounds:
    clique = greedy_clique(g)
    return CliqueBounds(clique, max(_colour_bound(g, g.full_set), clique.bit_count()))


def _exact_clique(g: Graph, budget: int) -> VertexSet:
    search = _CliqueSearch(g, budget)
    omega = search.clique_number()
    clique = search.first_clique(omega)
    logging.debug("max clique: omega=%d after %d nodes", omega, search.nodes)
    return vertex_set(clique)


def _milp_clique(g: Graph, node_limit: int) -> CliqueBounds:
    """Maximum independent set of the complement as a 0/1 program, one row per complement edge."""
    n = g.vertex_count
    co_edges = np.array(list(complement(g).edges()), dtype=np.int64).reshape(-1, 2)
    best = greedy_clique(g)
    if not len(co_edges):
        return CliqueBounds(g.full_set, n)

    rows = np.repeat(np.arange(len(co_edges)), 2)
    matrix = sparse.csr_array((np.ones(rows.size), (rows, co_edges.ravel())), shape=(len(co_edges), n))
    result = milp(-np.ones(n), constraints=LinearConstraint(matrix, -np.inf, 1), integrality=np.ones(n),
                  bounds=Bounds(0, 1),
                  options={"node_limit": node_limit, "time_limit": get_int("Clique_MilpSeconds", 600)})

    if result.x is not None:
        found = vertex_set(np.flatnonzero(result.x > 0.5).tolist())
        if g.is_clique(found) and found.bit_count() > best.bit_count():
            best = found

    upper = _colour_bound(g, g.full_set)
    if result.status == 0:
        upper = min(upper, round(-result.fun))
    elif getattr(result, "mip_dual_bound", None) is not None and np.isfinite(result.mip_dual_bound):
        upper = min(upper, math.floor(-result.mip_dual_bound + 1e-6))
    logging.info("clique program: %d vertices, clique of %d, upper bound %d (%s)",
                 n, best.bit_count(), upper, result.message)
    return CliqueBounds(best, max(upper, best.bit_count()))


def clique_bounds(g: Graph, budget: int | None = None, milp_nodes: int | None = None) -> CliqueBounds:
    """Best clique found and an upper bound on omega; exact when they meet.

    Graphs up to BITSET_SEARCH_LIMIT vertices get the bitset branch and bound
    (`budget` nodes, default Clique_NodeBudget), larger ones the 0/1 program
    (`milp_nodes` nodes, default Clique_MilpNodes).
    """
    if g.vertex_count <= BITSET_SEARCH_LIMIT:
        if budget is None:
            budget = get_int("Clique_NodeBudget", 5_000_000)
        try:
            clique = _exact_clique(g, budget)
        except BudgetExhausted:
            logging.warning("clique search ran out of %d nodes on %d vertices", budget, g.vertex_count)
            return greedy_clique_bounds(g)
        return CliqueBounds(clique, clique.bit_count())

    if milp_nodes is None:
        milp_nodes = get_int("Clique_MilpNodes", 200)
    return _milp_clique(g, milp_nodes)


def max_clique(g: Graph, budget: int | None = None, milp_nodes: int | None = None) -> VertexSet:
    """Maximum clique of g.

    Up to BITSET_SEARCH_LIMIT vertices this is the lexicographically smallest
    maximum clique; above, the optimum the 0/1 program returns. Raises
    BudgetExhausted, carrying the best clique and the upper bound, when
    optimality is not proven.
    """
    bounds = clique_bounds(g, budget, milp_nodes)
    if not bounds.exact:
        raise BudgetExhausted(f"clique number between {bounds.clique.bit_count()} and {bounds.upper}",
                              best=bounds.clique, upper=bounds.upper)
    return bounds.clique


def enumerate_cliques(g: Graph, min_size: int = 0) -> Iterator[VertexSet]:
    """Every clique with at least min_size vertices (the empty one included when min_size is 0)."""

    def walk(clique: VertexSet, size: int, candidates: VertexSet):
        if size >= min_size:
            yield clique
        while candidates:
            if size + candidates.bit_count() < min_size:
                return
            if size < min_size and size + _colour_bound(g, candidates) < min_size:
                return
            v = lowest(candidates)
            candidates &= ~(1 << v)
            yield from walk(clique | (1 << v), size + 1, candidates & g.adjacency[v])

    yield from walk(0, 0, g.full_set)


# Statistics of a clique

@dataclass(frozen=True)
class CliqueStats:
    z_clique: VertexSet
    k: int
    a: int
    b: int


def clique_stats(g: Graph, z: VertexSet) -> CliqueStats:
    if not g.is_clique(z):
        raise NotAClique("Z is not a clique")
    co = complement(g)
    k = z.bit_count()
    a = sum(co.degree(v) for v in members(z))
    rest = g.full_set & ~z
    b = sum((co.adjacency[v] & rest).bit_count() for v in members(rest)) // 2
    return CliqueStats(z, k, a, b)


def capacity(g: Graph, c: VertexSet) -> Fraction:
    """cap(C) = (|V - C| + |X|) / 2, X = outside vertices with a neighbour and a non-neighbour in C."""
    if not g.is_clique(c):
        raise NotAClique("C is not a clique")
    outside = g.full_set & ~c
    mixed = 0
    for v in members(outside):
        hits = g.adjacency[v] & c
        if hits and hits != c:
            mixed += 1
    return Fraction(outside.bit_count() + mixed, 2)


def is_k_connected(g: Graph, k: int) -> bool:
    if g.vertex_count <= k:
        return False
    if k <= 0:
        return True
    return nx.node_connectivity(g.to_networkx()) >= k


def complement_matching_size(g: Graph) -> int:
    return len(nx.max_weight_matching(complement(g).to_networkx(), maxcardinality=True))


def is_five_wheel(g: Graph) -> bool:
    if g.vertex_count != 6:
        return False
    degrees = sorted(g.degree(v) for v in range(6))
    if degrees != [3, 3, 3, 3, 3, 5]:
        return False
    hub = next(v for v in range(6) if g.degree(v) == 5)
    rim = g.full_set & ~(1 << hub)
    for v in members(rim):
        if (g.adjacency[v] & rim).bit_count() != 2:
            return False
    return g.is_connected_set(rim)


# Seagull packing conditions

@dataclass
class SeagullConditionReport:
    k: int
    cond_size: bool
    cond_connectivity: bool
    cond_capacity: bool
    cond_matching: bool
    cond_five_wheel: bool
    connectivity: int = 0
    matching_size: int = 0
    capacity_witness: VertexSet | None = None
    capacity_minimum: Fraction | None = None
    witnesses: dict = field(default_factory=dict)

    @property
    def all_hold(self) -> bool:
        return (self.cond_size and self.cond_connectivity and self.cond_capacity
                and self.cond_matching and self.cond_five_wheel)


def seagull_conditions(g: Graph, k: int, clique_budget: int | None = None,
                       bounds: CliqueBounds | None = None) -> SeagullConditionReport:
    """Evaluate the five conditions characterising k disjoint seagulls.

    Only cliques with more than |V| - 2k vertices can have capacity below k,
    since cap(C) >= |V - C| / 2; those are enumerated exhaustively.
    """
    if not is_alpha_le_2(g):
        raise AlphaTooLarge("graph has an independent set of size three")

    n = g.vertex_count
    cond_size = n >= 3 * k

    connectivity = nx.node_connectivity(g.to_networkx()) if n > 1 else 0
    cond_connectivity = n > k and (k <= 0 or connectivity >= k)

    threshold = n - 2 * k + 1
    capacity_minimum = None
    capacity_witness = None
    upper = 0
    if threshold <= n:
        upper = (bounds or clique_bounds(g, clique_budget)).upper
    if threshold <= upper:
        for c in enumerate_cliques(g, max(threshold, 0)):
            cap = capacity(g, c)
            if capacity_minimum is None or cap < capacity_minimum:
                capacity_minimum = cap
                capacity_witness = c
    cond_capacity = capacity_minimum is None or capacity_minimum >= k

    matching_size = complement_matching_size(g)
    cond_matching = matching_size >= k

    cond_five_wheel = not (k == 2 and is_five_wheel(g))

    witnesses = {}
    if not cond_capacity:
        witnesses["capacity"] = members(capacity_witness)
    if not cond_connectivity:
        witnesses["connectivity"] = connectivity
    if not cond_matching:
        witnesses["matching"] = matching_size

    return SeagullConditionReport(k, cond_size, cond_connectivity, cond_capacity, cond_matching, cond_five_wheel,
                                  connectivity=connectivity, matching_size=matching_size,
                                  capacity_witness=capacity_witness, capacity_minimum=capacity_minimum,
                                  witnesses=witnesses)


def analyze(g: Graph, k: int | None = None, clique_budget: int | None = None) -> dict:
    """Everything `analyze` reports about a graph, as plain values."""
    n = g.vertex_count
    report: dict = {"vertices": n, "edges": g.edge_count, "alpha_le_2": is_alpha_le_2(g)}
    if not report["alpha_le_2"]:
        raise AlphaTooLarge("graph has an independent set of size three")

    bounds = clique_bounds(g, clique_budget)
    z = bounds.clique
    stats = clique_stats(g, z)
    report.update({
        "omega": stats.k,
        "omega_upper": bounds.upper,
        "omega_exact": bounds.exact,
        "Z": [v + 1 for v in members(z)],
        "a": stats.a,
        "b": stats.b,
        "cap_Z": str(capacity(g, z)),
        "five_wheel": is_five_wheel(g),
    })

    if k is None:
        k = n // 3
    conditions = seagull_conditions(g, k, clique_budget, bounds)
    report.update({
        "k": k,
        "connectivity": conditions.connectivity,
        "complement_matching": conditions.matching_size,
        "capacity_min": None if conditions.capacity_minimum is None else str(conditions.capacity_minimum),
        "cond_size": conditions.cond_size,
        "cond_connectivity": conditions.cond_connectivity,
        "cond_capacity": conditions.cond_capacity,
        "cond_matching": conditions.cond_matching,
        "cond_five_wheel": conditions.cond_five_wheel,
        "k_disjoint_seagulls": conditions.all_hold,
    })

    if n % 2 == 0 and n >= 6 and not bounds.exact and 4 * bounds.upper >= n:
        report["verdict"] = "undetermined: omega not proven below |V|/4"
    elif n % 2 == 0 and n >= 6 and 4 * stats.k >= n:
        report["verdict"] = "clique-minor route: omega >= |V|/4, a K_{|V|/2} minor exists (not constructed)"
    elif n % 2 == 0 and n >= 6:
        report["verdict"] = "pipeline: omega < |V|/4"
    elif n % 2 == 1 and n >= 7:
        report["verdict"] = "pipeline after deleting one vertex (odd order)"
    else:
        report["verdict"] = "too small: pipeline needs at least 6 vertices"
    return report
