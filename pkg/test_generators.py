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

from itertools import combinations

import pytest

from features.alpha2_analysis import is_alpha_le_2, max_clique
from features.generators import _steiner_blocks, gen_c5_blowup_complement, gen_random_alpha2, gen_tfp_complement, \
    higman_sims, named, named_clique, perturb_packable_instance, two_clique_complement
from utils.errors import UnknownName
from utils.graph import complement, members
from utils.rng import stream


def test_tfp_complement_is_alpha2_and_maximal():
    g = gen_tfp_complement(40, stream(1))
    assert is_alpha_le_2(g)
    co = complement(g)
    # every pair missing from the triangle-free graph would close a triangle
    for u, v in g.edges():
        assert co.adjacency[u] & co.adjacency[v]


def test_tfp_is_deterministic():
    assert gen_tfp_complement(30, stream(4)) == gen_tfp_complement(30, stream(4))
    assert gen_tfp_complement(30, stream(4)) != gen_tfp_complement(30, stream(5))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_tfp_tiny(n):
    g = gen_tfp_complement(n, stream(0))
    assert g.vertex_count == n
    assert is_alpha_le_2(g)


def test_c5_blowup():
    one = gen_c5_blowup_complement(1)
    assert one.edge_count == 5 and all(one.degree(v) == 2 for v in range(5))
    two = gen_c5_blowup_complement(2)
    assert two.vertex_count == 10
    assert max_clique(two).bit_count() == 4
    assert all(is_alpha_le_2(gen_c5_blowup_complement(t)) for t in range(1, 5))


def test_two_clique_complement():
    g = two_clique_complement(2, 3)
    assert g.vertex_count == 5 and g.edge_count == 4
    assert is_alpha_le_2(g)


def test_random_alpha2():
    for i in range(10):
        assert is_alpha_le_2(gen_random_alpha2(12, stream(2, i), keep=0.5))


def test_perturbation_keeps_alpha2():
    base = named("circulant13_minus_one_complement")
    g = perturb_packable_instance(base, stream(3), drop=0.5)
    assert g.vertex_count == base.vertex_count
    assert g.edge_count <= base.edge_count
    assert is_alpha_le_2(g)


@pytest.mark.parametrize("name, vertices, edges", [
    ("five_wheel", 6, 10),
    ("c5", 5, 5),
    ("p3", 3, 2),
    ("petersen", 10, 15),
    ("petersen_complement", 10, 30),
    ("circulant13_minus_one_complement", 12, 66 - 22),
    ("clebsch", 16, 40),
    ("clebsch_minus_one_complement", 15, 105 - 35),
    ("k_7", 7, 21),
])
def test_named_sizes(name, vertices, edges):
    g = named(name)
    assert (g.vertex_count, g.edge_count) == (vertices, edges)


@pytest.mark.parametrize("name, omega", [
    ("petersen_complement", 4),
    ("circulant13_minus_one_complement", 4),
    ("clebsch_minus_one_complement", 5),
])
def test_named_alpha2_instances(name, omega):
    g = named(name)
    assert is_alpha_le_2(g)
    assert max_clique(g).bit_count() == omega


def test_unknown_name():
    with pytest.raises(UnknownName):
        named("dodecahedron")


def test_steiner_system():
    blocks = _steiner_blocks()
    assert len(blocks) == 77
    assert all(block.bit_count() == 6 for block in blocks)
    for triple in combinations(range(22), 3):
        mask = sum(1 << p for p in triple)
        assert sum(1 for block in blocks if block & mask == mask) == 1


def test_higman_sims_parameters():
    g = higman_sims()
    assert g.vertex_count == 100
    assert g.edge_count == 1100
    assert all(g.degree(v) == 22 for v in range(100))
    for u, v in combinations(range(100), 2):
        common = (g.adjacency[u] & g.adjacency[v]).bit_count()
        assert common == (0 if g.has_edge(u, v) else 6)


def test_higman_sims_complement_known_clique():
    g = named("higman_sims_complement")
    assert is_alpha_le_2(g)
    z = named_clique("higman_sims_complement")
    assert g.is_clique(z)
    assert members(z) == list(range(1, 23))
    assert named_clique("k_4") == 0b1111
    assert named_clique("petersen") is None


@pytest.mark.slow
def test_higman_sims_complement_clique_number():
    assert max_clique(named("higman_sims_complement"), budget=50_000_000).bit_count() == 22
