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

from collections import Counter
from fractions import Fraction

import numpy as np
import pytest

from features.matching_sampler import Pairing, all_pairings, chebyshev_rhs, in_event_A, lambda_from_policy, \
    pairing_edge_count, sample_conditioned, sample_uniform_pairing, subsample_matching
from utils.errors import DomainError, NotEnoughEdges, OddGroundSet, ParseError, RejectionExhausted
from utils.graph import Graph
from utils.rng import stream

C4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


def test_pairing_is_a_partition():
    m = sample_uniform_pairing(10, stream(1))
    assert len(m.pairs) == 5
    assert m.ground == (1 << 10) - 1
    assert all(u < v for u, v in m.pairs)


def test_two_elements():
    assert sample_uniform_pairing(2, stream(1)).pairs == ((0, 1),)


def test_odd_ground_set():
    with pytest.raises(OddGroundSet):
        sample_uniform_pairing(5, stream(1))
    with pytest.raises(OddGroundSet):
        list(all_pairings(3))


def test_all_pairings_counts():
    assert len(list(all_pairings(4))) == 3
    assert len(set(all_pairings(6))) == 15
    assert len(list(all_pairings(8))) == 105


def test_four_elements_uniform():
    rng = stream(3)
    counts = Counter(sample_uniform_pairing(4, rng) for _ in range(30_000))
    assert len(counts) == 3
    for count in counts.values():
        # 4 sigma of a binomial(30000, 1/3)
        assert abs(count - 10_000) <= 4 * (30_000 * (1 / 3) * (2 / 3)) ** 0.5


def test_same_seed_same_pairing():
    assert sample_uniform_pairing(20, stream(7, 3)) == sample_uniform_pairing(20, stream(7, 3))
    assert sample_uniform_pairing(20, stream(7, 3)) != sample_uniform_pairing(20, stream(7, 4))


def test_edge_count():
    m = Pairing.of([(0, 2), (1, 3)])
    assert pairing_edge_count(m, C4) == 0
    assert pairing_edge_count(Pairing.of([(0, 1), (2, 3)]), C4) == 2
    assert pairing_edge_count(m, Graph.complete(4)) == 2
    assert pairing_edge_count(m, Graph.empty(4)) == 0


def test_event_a():
    assert in_event_A(Pairing.of([(0, 2), (1, 3)]), Graph.complete(4), 0)
    assert in_event_A(Pairing.of([(0, 2), (1, 3)]), Graph.empty(4), 0)
    # 0 >= 4/3 - 1 fails
    assert not in_event_A(Pairing.of([(0, 2), (1, 3)]), C4, 1)
    assert in_event_A(Pairing.of([(0, 2), (1, 3)]), C4, Fraction(4, 3))


def test_sample_conditioned_complete_graph():
    m = sample_conditioned(Graph.complete(8), 1, 1, stream(2))
    assert len(m.pairs) == 4


def test_sample_conditioned_exhausts():
    # C4 has no pairing with three edges
    with pytest.raises(RejectionExhausted):
        sample_conditioned(C4, Fraction(1, 10 ** 6), 200, stream(2), min_edges=3)


def test_sample_conditioned_rejects_bad_lambda():
    with pytest.raises(DomainError):
        sample_conditioned(C4, 0, 10, stream(2))


def test_conditioned_is_uniform_on_event():
    # |E| = 7 on 6 vertices: A is the pairings with at least 7/5 - 1/2 edges, i.e. at least one
    g = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)])
    lam = Fraction(1, 2)
    accepted = [m for m in all_pairings(6) if in_event_A(m, g, lam)]
    assert 0 < len(accepted) < 15

    rng = stream(9)
    trials = 60_000
    counts = Counter(sample_conditioned(g, lam, 1000, rng) for _ in range(trials))
    assert set(counts) == set(accepted)
    expected = trials / len(accepted)
    sigma = (trials * (1 / len(accepted)) * (1 - 1 / len(accepted))) ** 0.5
    for m in accepted:
        assert abs(counts[m] - expected) <= 4 * sigma


def test_subsample_matching():
    m = Pairing.of([(0, 1), (2, 3), (4, 5)])
    g = Graph.complete(6)
    assert subsample_matching(m, g, 3, stream(1)).edges == m.pairs
    assert subsample_matching(m, g, 0, stream(1)).edges == ()
    with pytest.raises(NotEnoughEdges):
        subsample_matching(m, Graph.from_edges(6, [(0, 1)]), 2, stream(1))


def test_subsample_inclusion_rate():
    m = Pairing.of([(0, 1), (2, 3), (4, 5), (6, 7)])
    g = Graph.complete(8)
    rng = stream(4)
    hits = np.array([(0, 1) in subsample_matching(m, g, 1, rng).edges for _ in range(20_000)])
    assert abs(hits.mean() - 0.25) <= 4 * (0.25 * 0.75 / 20_000) ** 0.5


def test_chebyshev_rhs():
    assert chebyshev_rhs(10, 5) == pytest.approx(0.4)
    assert chebyshev_rhs(4, 2) == pytest.approx(1.0)
    assert chebyshev_rhs(400, 400 ** (2 / 3)) == pytest.approx(400 ** (-1 / 3))


def test_lambda_policies():
    n23 = lambda_from_policy("n23", 1000, 10)
    assert abs(n23 - 100) < Fraction(1, 10 ** 8)
    assert (n23 * 10 ** 9).denominator == 1
    assert lambda_from_policy("clamped", 50, 22) == Fraction(21, 2)
    assert lambda_from_policy("clamped", 8, 22) <= 4
    assert lambda_from_policy("21/2", 0, 0) == Fraction(21, 2)
    assert lambda_from_policy("2.5", 0, 0) == Fraction(5, 2)
    with pytest.raises(DomainError):
        lambda_from_policy("0", 10, 3)
    with pytest.raises(ParseError):
        lambda_from_policy("lots", 10, 3)


@pytest.mark.parametrize("policy, n, k", [("clamped", 1, 1), ("clamped", 50, 0), ("n23", 0, 5)])
def test_named_policies_never_give_nonpositive_lambda(policy, n, k):
    with pytest.raises(DomainError):
        lambda_from_policy(policy, n, k)
