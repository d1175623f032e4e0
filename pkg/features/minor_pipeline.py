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

"""Build a minor on half the vertices of a graph with no independent set of size three.

Z is a maximum clique, G' is G - Z (minus one more vertex for parity), a
conditioned random pairing of G' gives n - 2k matching edges M*, and the 3k
vertices of G - Z that M* leaves uncovered are split into seagulls. Contracting
the matching edges and the seagulls gives H. Every non-edge of H comes from a
bad triple or a bad quadruple, and the run checks that accounting exactly.
"""

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import NamedTuple, Sequence

import numpy as np

from features.alpha2_analysis import CliqueBounds, clique_bounds, clique_stats, is_alpha_le_2
from features.bound_math import BoundReport, bound_report
from features.matching_sampler import SubMatching, lambda_from_policy, sample_conditioned, subsample_matching
from features.seagull_packing import SeagullPartition, seagull_partition
from utils.config import get_int
from utils.errors import (AccountingMismatch, AlphaTooLarge, DomainError, Ineligible, NotAClique, NotCertifiable,
                          NotFound, ParseError, SeagullFailure)
from utils.graph import BranchDecomposition, Graph, MinorCheck, VertexSet, contract, induced_subgraph, members, \
    verify_minor
from utils.logging_util import report_defect
from utils.rng import stream

MODES = ("strict", "advisory")
CLIQUE_MINOR_ROUTE = "omega >= |V|/4: the graph has a K_{|V|/2} minor through the clique route, not constructed here"


@dataclass(frozen=True)
class PipelineConfig:
    lambda_policy: str = "n23"
    seed: int = 0
    mode: str = "strict"
    max_rejection_tries: int | None = None
    clique_budget: int | None = None
    clique_milp_nodes: int | None = None
    seagull_budget: int | None = None

    def __post_init__(self):
        if self.mode not in MODES:
            raise ParseError(f"mode must be one of {', '.join(MODES)}, got {self.mode!r}")
        # the named policies need n and k
        if self.lambda_policy.strip().lower() not in ("n23", "clamped"):
            lambda_from_policy(self.lambda_policy, 1, 1)

    @property
    def rejection_tries(self) -> int:
        if self.max_rejection_tries is not None:
            return self.max_rejection_tries
        return get_int("Pipeline_MaxRejectionTries", 10_000)


@dataclass(frozen=True)
class PreconditionReport:
    even_order_at_least_6: bool
    alpha_le_2: bool
    omega_exact: bool
    omega_below_quarter: bool
    lambda_positive: bool
    lambda_le_half_k_minus_1: bool
    lambda_sq_gt_2n: bool
    n_minus_2k_nonnegative: bool
    n: int
    k: int
    x: int
    lam: Fraction
    q: float

    FLAGS = ("even_order_at_least_6", "alpha_le_2", "omega_exact", "omega_below_quarter", "lambda_positive",
             "lambda_le_half_k_minus_1", "lambda_sq_gt_2n", "n_minus_2k_nonnegative")

    def failed(self) -> list[str]:
        return [flag for flag in self.FLAGS if not getattr(self, flag)]

    @property
    def strict_ok(self) -> bool:
        return not self.failed()

    def as_dict(self) -> dict:
        out = {flag: getattr(self, flag) for flag in self.FLAGS}
        out.update(n=self.n, k=self.k, x=self.x, **{"lambda": str(self.lam)}, q=self.q)
        return out


CliqueChoice = VertexSet | CliqueBounds | None


def resolve_clique(g: Graph, cfg: PipelineConfig, clique: CliqueChoice = None) -> tuple[VertexSet, bool, str]:
    """The clique Z to build on, whether it is proven maximum, and where it came from.

    A plain vertex set is taken as a given maximum clique. CliqueBounds carry
    their own proof, and None searches for one.
    """
    if clique is None:
        clique = clique_bounds(g, cfg.clique_budget, cfg.clique_milp_nodes)
    if isinstance(clique, CliqueBounds):
        if not g.is_clique(clique.clique):
            raise NotAClique("computed clique is not a clique")
        return clique.clique, clique.exact, "computed" if clique.exact else "heuristic"
    if not g.is_clique(clique):
        raise NotAClique("given clique is not a clique")
    return clique, True, "given"


def preconditions(g: Graph, cfg: PipelineConfig, clique: CliqueChoice = None) -> PreconditionReport:
    order = g.vertex_count
    z, exact, _ = resolve_clique(g, cfg, clique)
    n = order // 2
    k = z.bit_count()
    try:
        lam = lambda_from_policy(cfg.lambda_policy, n, k)
    except DomainError:
        lam = Fraction(0)
    x = order - k - ((order - k) % 2)
    q = 1 - 2 * n / float(lam) ** 2 if lam > 0 else -math.inf
    return PreconditionReport(
        even_order_at_least_6=order % 2 == 0 and order >= 6,
        alpha_le_2=is_alpha_le_2(g),
        omega_exact=exact,
        omega_below_quarter=4 * k < order,
        lambda_positive=lam > 0,
        lambda_le_half_k_minus_1=lam <= Fraction(k - 1, 2),
        lambda_sq_gt_2n=lam * lam > 2 * n,
        n_minus_2k_nonnegative=n - 2 * k >= 0,
        n=n, k=k, x=x, lam=lam, q=q,
    )


class GPrime(NamedTuple):
    graph: Graph
    deleted: int | None
    vertex_map: tuple[int, ...]


def choose_g_prime(g: Graph, z: VertexSet) -> GPrime:
    """G - Z, minus the lowest vertex outside Z when that leaves an odd count."""
    if not g.is_clique(z):
        raise NotAClique("Z is not a clique")
    rest = g.full_set & ~z
    deleted = None
    if rest.bit_count() % 2:
        deleted = (rest & -rest).bit_length() - 1
        rest &= ~(1 << deleted)
    graph, vertex_map = induced_subgraph(g, rest)
    return GPrime(graph, deleted, vertex_map)


def enumerate_bad_triples(g: Graph, z: VertexSet) -> list[tuple[int, int, int]]:
    """Triples (z, u, v), z in Z, u < v outside Z, z adjacent to neither."""
    if not g.is_clique(z):
        raise NotAClique("Z is not a clique")
    triples = []
    for zv in members(z):
        away = g.non_neighbours(zv) & ~z
        for u, v in combinations(members(away), 2):
            triples.append((zv, u, v))
    return triples


def enumerate_bad_quadruples(g: Graph) -> list[tuple[int, int, int, int]]:
    """4-sets inducing exactly two disjoint edges, as sorted tuples."""
    found = set()
    for u, w in g.edges():
        outside = g.full_set & ~g.adjacency[u] & ~g.adjacency[w] & ~(1 << u) & ~(1 << w)
        for v in members(outside):
            for y in members(outside & g.adjacency[v]):
                if v < y:
                    found.add(tuple(sorted((u, w, v, y))))
    return sorted(found)


def count_bad_triples(g: Graph, z: VertexSet) -> int:
    return sum(math.comb((g.non_neighbours(zv) & ~z).bit_count(), 2) for zv in members(z))


@lru_cache(maxsize=8)
def count_bad_quadruples(g: Graph) -> int:
    """Counts ordered (u, v, w, y) with uv, vw, uy, wy non-edges and uw, vy edges; each quadruple gives 8."""
    total = 0
    for u in range(g.vertex_count):
        closed_u = g.adjacency[u] | (1 << u)
        for v in members(g.non_neighbours(u)):
            closed_v = g.adjacency[v] | (1 << v)
            for w in members(g.adjacency[u] & ~closed_v):
                total += (g.adjacency[v] & ~closed_u & ~g.adjacency[w] & ~(1 << w)).bit_count()
    return total // 8


@dataclass
class PipelineResult:
    h: Graph
    decomposition: BranchDecomposition
    deleted_vertex: int | None
    m_star: SubMatching
    seagulls: SeagullPartition
    missing_edges: int
    realized_bad_triples: int
    realized_bad_quadruples: int
    total_bad_triples: int
    total_bad_quadruples: int
    bound: BoundReport
    preconditions: PreconditionReport
    mode: str
    trial: int
    clique_source: str
    s_size: int
    minor_check: MinorCheck = field(default_factory=lambda: MinorCheck(True, "ok"))

    def scalars(self) -> dict:
        """Scalar outputs for run records."""
        return {
            "trial": self.trial,
            "mode": self.mode,
            "h_vertices": self.h.vertex_count,
            "h_edges": self.h.edge_count,
            "missing_edges": self.missing_edges,
            "realized_bad_triples": self.realized_bad_triples,
            "realized_bad_quadruples": self.realized_bad_quadruples,
            "total_bad_triples": self.total_bad_triples,
            "total_bad_quadruples": self.total_bad_quadruples,
            "deleted_vertex": None if self.deleted_vertex is None else self.deleted_vertex + 1,
            "s_size": self.s_size,
            "clique_source": self.clique_source,
            "verify_minor": self.minor_check.reason,
            "preconditions": self.preconditions.as_dict(),
            "bound": self.bound.as_dict(),
        }


def _classify_missing(g: Graph, h: Graph, kinds: list[str], parts: Sequence[VertexSet]) -> tuple[int, int]:
    """Match every non-edge of H to its bad triple or bad quadruple."""
    triples = quadruples = 0
    for i in range(h.vertex_count):
        for j in members(h.non_neighbours(i)):
            if j < i:
                continue
            pair = tuple(sorted((kinds[i], kinds[j])))
            union = parts[i] | parts[j]
            if pair == ("pair", "z"):
                z = parts[i] if kinds[i] == "z" else parts[j]
                if g.neighbourhood(z) & union:
                    raise AccountingMismatch(f"non-edge {i + 1}-{j + 1} is not a bad triple")
                triples += 1
            elif pair == ("pair", "pair"):
                sub, _ = induced_subgraph(g, union)
                if sub.edge_count != 2:
                    raise AccountingMismatch(f"non-edge {i + 1}-{j + 1} is not a bad quadruple")
                quadruples += 1
            else:
                raise AccountingMismatch(f"non-edge {i + 1}-{j + 1} between a {kinds[i]} and a {kinds[j]} part")
    return triples, quadruples


def _realized_counts(g: Graph, z: VertexSet, m_star: SubMatching) -> tuple[int, int]:
    """Bad triples and quadruples that M* completes, counted straight from G."""
    triples = sum(1 for zv in members(z) for u, v in m_star.edges
                  if not g.has_edge(zv, u) and not g.has_edge(zv, v))
    quadruples = 0
    for (u, w), (v, y) in combinations(m_star.edges, 2):
        if not (g.has_edge(u, v) or g.has_edge(u, y) or g.has_edge(w, v) or g.has_edge(w, y)):
            quadruples += 1
    return triples, quadruples


def run_pipeline(g: Graph, cfg: PipelineConfig, trial: int = 0, clique: CliqueChoice = None) -> PipelineResult:
    if not is_alpha_le_2(g):
        raise AlphaTooLarge("graph has an independent set of size three")
    order = g.vertex_count
    if order % 2 or order < 6:
        raise Ineligible(f"pipeline needs an even number of at least 6 vertices, got {order}")

    z, exact, clique_source = resolve_clique(g, cfg, clique)

    stats = clique_stats(g, z)
    n, k = order // 2, stats.k
    if 4 * k >= order:
        raise Ineligible(CLIQUE_MINOR_ROUTE)

    pre = preconditions(g, cfg, CliqueBounds(z, k if exact else order))
    if not pre.lambda_positive:
        raise Ineligible(f"lambda policy {cfg.lambda_policy} gives no positive lambda for n={n}, k={k}")
    lam = pre.lam
    rng = stream(cfg.seed, trial)

    g_prime = choose_g_prime(g, z)
    need = n - 2 * k
    m = sample_conditioned(g_prime.graph, lam, cfg.rejection_tries, rng,
                           min_edges=need if cfg.mode == "advisory" else None)
    local = subsample_matching(m, g_prime.graph, need, rng)
    m_star = SubMatching(tuple(tuple(sorted((g_prime.vertex_map[u], g_prime.vertex_map[v])))
                               for u, v in local.edges))

    s = g.full_set & ~z & ~m_star.covered
    if s.bit_count() != 3 * k:
        error = AccountingMismatch(f"|S| = {s.bit_count()}, expected {3 * k}")
        report_defect(error)
        raise error

    g_s, s_map = induced_subgraph(g, s)
    try:
        seagulls = seagull_partition(g_s, cfg.seagull_budget).relabel(s_map)
    except NotFound as e:
        if not exact:
            raise Ineligible(f"no seagull partition of S, and {k} is not proven to be omega") from e
        error = SeagullFailure(f"no seagull partition of S although omega(G[S]) <= {k}")
        report_defect(error)
        raise error from e

    parts = [1 << v for v in members(z)]
    parts += [(1 << u) | (1 << v) for u, v in m_star.edges]
    parts += [(1 << a) | (1 << mid) | (1 << b) for a, mid, b in seagulls.triples]
    kinds = ["z"] * k + ["pair"] * need + ["seagull"] * k
    decomposition = BranchDecomposition(g, tuple(parts))
    h = contract(g, decomposition)
    check = verify_minor(g, h, decomposition)

    missing = n * (n - 1) // 2 - h.edge_count
    try:
        triples, quadruples = _classify_missing(g, h, kinds, parts)
        if (triples, quadruples) != _realized_counts(g, z, m_star) or triples + quadruples != missing:
            raise AccountingMismatch(f"{missing} missing edges, {triples} triples and {quadruples} quadruples")
    except AccountingMismatch as e:
        report_defect(e)
        raise

    result = PipelineResult(
        h=h, decomposition=decomposition, deleted_vertex=g_prime.deleted, m_star=m_star, seagulls=seagulls,
        missing_edges=missing, realized_bad_triples=triples, realized_bad_quadruples=quadruples,
        total_bad_triples=count_bad_triples(g, z),
        total_bad_quadruples=count_bad_quadruples(g_prime.graph),
        bound=bound_report(n, k, stats.a, stats.b, lam), preconditions=pre, mode=cfg.mode, trial=trial,
        clique_source=clique_source, s_size=s.bit_count(), minor_check=check,
    )
    logging.info("trial %d: H has %d vertices, %d missing edges (%d triples, %d quadruples)",
                 trial, h.vertex_count, missing, triples, quadruples)
    return result


@dataclass
class OddPipelineResult:
    inner: PipelineResult
    h: Graph
    decomposition: BranchDecomposition
    added_vertex: int
    missing_edges: int


def _run_one(args) -> PipelineResult | OddPipelineResult:
    g, cfg, trial, clique = args
    return run_pipeline_odd(g, cfg, trial, clique)


def run_batch(g: Graph, cfg: PipelineConfig, trials: int, jobs: int = 1,
              clique: CliqueChoice = None) -> list[PipelineResult | OddPipelineResult]:
    """Trials 0..trials-1, each on its own stream, ordered by trial index.

    Odd graphs go through run_pipeline_odd. The clique search runs once, on the
    graph the trials actually build on.
    """
    if trials < 1:
        raise ParseError(f"trials must be at least 1, got {trials}")
    if jobs < 1:
        raise ParseError(f"jobs must be at least 1, got {jobs}")
    if clique is None:
        host = g
        if g.vertex_count % 2:
            host, _ = induced_subgraph(g, g.full_set & ~(1 << g.vertex_count - 1))
        clique = clique_bounds(host, cfg.clique_budget, cfg.clique_milp_nodes)

    work = [(g, cfg, trial, clique) for trial in range(trials)]
    if jobs == 1:
        return [_run_one(item) for item in work]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_one, work))


def run_pipeline_odd(g: Graph, cfg: PipelineConfig, trial: int = 0,
                     clique: CliqueChoice = None) -> PipelineResult | OddPipelineResult:
    """Odd order: drop the highest vertex, build the minor, then put the vertex back as its own part."""
    if g.vertex_count % 2 == 0:
        return run_pipeline(g, cfg, trial, clique)

    v = g.vertex_count - 1
    rest, _ = induced_subgraph(g, g.full_set & ~(1 << v))
    z = clique.clique if isinstance(clique, CliqueBounds) else clique
    if z is not None and z >> v & 1:
        clique = None
    inner = run_pipeline(rest, cfg, trial, clique)

    decomposition = BranchDecomposition(g, inner.decomposition.parts + (1 << v,))
    h = contract(g, decomposition)
    n = h.vertex_count
    return OddPipelineResult(inner, h, decomposition, v, n * (n - 1) // 2 - h.edge_count)


# Certificates

@dataclass
class Certificate:
    status: str
    bound: float
    trials: int
    mean_missing: float
    stderr: float | None
    margin: float

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def certify(results: PipelineResult | Sequence[PipelineResult]) -> Certificate:
    """Compare realised missing edges with the expectation bound.

    A batch passes when its mean is at most the bound plus three standard
    errors. A single run is only a sample of the expectation.
    """
    batch = [results] if isinstance(results, PipelineResult) else list(results)
    if not batch:
        raise ValueError("nothing to certify")

    first = batch[0]
    if any(r.mode != "strict" for r in batch):
        raise NotCertifiable("advisory runs are not certified")
    if first.preconditions.q <= 0:
        raise NotCertifiable("lambda^2 <= 2n")
    failed = first.preconditions.failed()
    if failed:
        raise NotCertifiable("precondition failed: " + ", ".join(failed))
    bound = first.bound.rhs_J
    if bound is None:
        raise NotCertifiable(f"bound undefined: {first.bound.failed_flag}")

    missing = np.array([r.missing_edges for r in batch], dtype=float)
    mean = float(missing.mean())
    if len(batch) == 1:
        return Certificate("sample", bound, 1, mean, None, bound - mean)

    stderr = float(missing.std(ddof=1) / math.sqrt(len(batch)))
    margin = bound + 3 * stderr - mean
    return Certificate("PASS" if margin >= 0 else "FAIL", bound, len(batch), mean, stderr, margin)
