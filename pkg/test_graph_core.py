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

import networkx as nx
import pytest

from utils.errors import InvalidDecomposition, ParseError
from utils.graph import BranchDecomposition, Graph, complement, contract, induced_subgraph, members, read_graph, \
    verify_minor, vertex_set, write_graph


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def test_vertex_sets():
    s = vertex_set([5, 0, 3])
    assert members(s) == [0, 3, 5]
    assert members(0) == []


def test_basic_queries():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert g.edge_count == 4
    assert g.has_edge(0, 3) and not g.has_edge(0, 2)
    assert g.degree(1) == 2
    assert g.neighbours(0) == [1, 3]
    assert list(g.edges()) == [(0, 1), (0, 3), (1, 2), (2, 3)]
    assert complement(g).edge_count == 2


def test_from_edges_rejects_loops_and_range():
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 3)])


def test_networkx_bridge():
    petersen = Graph.from_networkx(nx.petersen_graph())
    assert petersen.vertex_count == 10
    assert petersen.edge_count == 15
    assert nx.is_isomorphic(petersen.to_networkx(), nx.petersen_graph())


def test_relabel_and_induced_subgraph():
    g = path(4)
    moved = g.relabel([3, 2, 1, 0])
    assert moved.has_edge(0, 1) and moved.has_edge(2, 3) and not moved.has_edge(0, 3)

    sub, index_map = induced_subgraph(g, vertex_set([1, 2, 3]))
    assert index_map == (1, 2, 3)
    assert list(sub.edges()) == [(0, 1), (1, 2)]


def test_contract_path_to_edge():
    d = BranchDecomposition.of(path(4), [[0, 1], [2, 3]])
    h = contract(path(4), d)
    assert h.vertex_count == 2 and h.edge_count == 1
    assert verify_minor(path(4), Graph.complete(2), d)


def test_contract_c5_pair():
    c5 = Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
    d = BranchDecomposition.of(c5, [[0, 1], [2], [3], [4]])
    h = contract(c5, d)
    assert h.vertex_count == 4
    assert h.edge_count == 4


@pytest.mark.parametrize("parts, reason", [
    ([[0, 1], [1, 2]], "overlap"),
    ([[0, 2], [1]], "disconnected_part"),
    ([[], [0]], "empty_part"),
])
def test_verify_minor_reasons(parts, reason):
    g = path(3)
    d = BranchDecomposition.of(g, parts)
    check = verify_minor(g, Graph.empty(len(parts)), d)
    assert not check
    assert check.reason == reason
    with pytest.raises(InvalidDecomposition):
        contract(g, d)


def test_verify_minor_missing_cross_edge():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    d = BranchDecomposition.of(g, [[0, 1], [2, 3]])
    assert verify_minor(g, Graph.complete(2), d).reason == "missing_cross_edge"
    assert verify_minor(g, Graph.complete(3), d).reason == "part_count"


def test_branch_map_format():
    d = BranchDecomposition.of(path(3), [[0, 1], [2]])
    assert d.format() == "part 1: 1 2\npart 2: 3\n"


def test_graph_file_round_trip():
    g = Graph.from_edges(4, [(0, 1), (1, 2)])
    text = write_graph(g, comments=["hello"])
    assert text.startswith("c hello\np 4 2\n")
    assert read_graph(text) == g


def test_read_dimacs_header():
    g = read_graph("c comment\np edge 3 2\ne 1 2\ne 2 3\n")
    assert g.edge_count == 2


@pytest.mark.parametrize("text", [
    "e 1 2\n",
    "p 3 1\ne 1 4\n",
    "p 3 1\ne 1 1\n",
    "p 3 2\ne 1 2\ne 2 1\n",
    "p 3 2\ne 1 2\n",
    "p 3 x\n",
    "c nothing\n",
    "p 3 0\nq 1 2\n",
])
def test_read_graph_errors(text):
    with pytest.raises(ParseError):
        read_graph(text)
