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

"""Uniform pairings of an even ground set and the concentration event A.

The ground set of a pairing is always 0..x-1, the vertices of the graph it is
compared against.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

import numpy as np

from utils.errors import DomainError, NotEnoughEdges, OddGroundSet, ParseError, RejectionExhausted
from utils.graph import Graph, VertexSet

Pair = tuple[int, int]

LAMBDA_GRID = 10 ** 9


@dataclass(frozen=True)
class Pairing:
    """A partition of the ground set into pairs (u < v), sorted."""
    pairs: tuple[Pair, ...]

    @classmethod
    def of(cls, pairs) -> "Pairing":
        return cls(tuple(sorted((min(u, v), max(u, v)) for u, v in pairs)))

    @property
    def ground(self) -> VertexSet:
        mask = 0
        for u, v in self.pairs:
            mask |= (1 << u) | (1 << v)
        return mask

    def edges_in(self, g: Graph) -> list[Pair]:
        return [(u, v) for u, v in self.pairs if g.has_edge(u, v)]


@dataclass(frozen=True)
class SubMatching:
    edges: tuple[Pair, ...]

    @property
    def covered(self) -> VertexSet:
        mask = 0
        for u, v in self.edges:
            mask |= (1 << u) | (1 << v)
        return mask


def _check_ground(x_size: int):
    if x_size < 0 or x_size % 2:
        raise OddGroundSet(f"cannot pair up {x_size} elements")


def sample_uniform_pairing(x_size: int, rng: np.random.Generator) -> Pairing:
    """Uniform over all (x-1)!! pairings: shuffle, then pair neighbours."""
    _check_ground(x_size)
    order = rng.permutation(x_size).reshape(-1, 2)
    return Pairing.of(order.tolist())


def all_pairings(x_size: int) -> Iterator[Pairing]:
    _check_ground(x_size)

    def walk(rest: list[int]) -> Iterator[list[Pair]]:
        if not rest:
            yield []
            return
        first = rest[0]
        for i in range(1, len(rest)):
            remaining = rest[1:i] + rest[i + 1:]
            for tail in walk(remaining):
                yield [(first, rest[i])] + tail

    for pairs in walk(list(range(x_size))):
        yield Pairing(tuple(pairs))


def pairing_edge_count(m: Pairing, g: Graph) -> int:
    return sum(1 for u, v in m.pairs if g.has_edge(u, v))


def event_a_threshold(g: Graph, lam) -> Fraction:
    """|E| / (x - 1) - lambda, the least edge count a pairing in A may have."""
    return Fraction(g.edge_count, g.vertex_count - 1) - Fraction(lam)


def in_event_A(m: Pairing, g: Graph, lam) -> bool:
    return pairing_edge_count(m, g) >= event_a_threshold(g, lam)


def sample_conditioned(g: Graph, lam, max_tries: int, rng: np.random.Generator,
                       min_edges: int | None = None) -> Pairing:
    """Rejection-sample a uniform pairing of V(g) until it lies in A.

    With `min_edges`, a pairing must also contain that many edges of g, so the
    result is uniform on A restricted to those pairings.
    """
    _check_ground(g.vertex_count)
    if Fraction(lam) <= 0:
        raise DomainError(f"lambda must be positive, got {lam}")

    needed = event_a_threshold(g, lam)
    if min_edges is not None:
        needed = max(needed, Fraction(min_edges))

    for attempt in range(1, max_tries + 1):
        m = sample_uniform_pairing(g.vertex_count, rng)
        if pairing_edge_count(m, g) >= needed:
            logging.debug("conditioned pairing accepted after %d tries", attempt)
            return m
    raise RejectionExhausted(f"no pairing in A after {max_tries} tries (lambda={lam})")


def subsample_matching(m: Pairing, g: Graph, count: int, rng: np.random.Generator) -> SubMatching:
    """Uniform `count`-subset of the pairs of m that are edges of g."""
    if count < 0:
        raise ValueError("count must be non-negative")
    edges = m.edges_in(g)
    if len(edges) < count:
        raise NotEnoughEdges(f"pairing has {len(edges)} graph edges, {count} needed")
    chosen = sorted(rng.choice(len(edges), size=count, replace=False).tolist())
    return SubMatching(tuple(edges[i] for i in chosen))


def chebyshev_rhs(x_size: int, lam: float) -> float:
    return x_size / (lam * lam)


def lambda_from_policy(policy: str, n: int, k: int) -> Fraction:
    """Exact lambda for `n23`, `clamped` or a literal rational such as `21/2`."""
    policy = policy.strip().lower()
    n23 = Fraction(math.floor(n ** (2 / 3) * LAMBDA_GRID), LAMBDA_GRID)
    if policy in ("n23", "clamped"):
        value = n23 if policy == "n23" else min(n23, Fraction(k - 1, 2))
        if value <= 0:
            raise DomainError(f"lambda policy {policy} gives {value} for n={n}, k={k}")
        return value

    try:
        value = Fraction(policy)
    except (ValueError, ZeroDivisionError) as e:
        raise ParseError(f"bad lambda {policy!r}") from e
    if value <= 0:
        raise DomainError(f"lambda must be positive, got {policy}")
    return value
