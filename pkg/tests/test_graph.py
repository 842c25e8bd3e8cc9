"""Graph container, parsing, serialization and surgery helpers."""

from __future__ import annotations

import pytest

from ubx.errors import (
    DisconnectedError,
    DuplicateEdgeError,
    ParseError,
    SelfLoopError,
)
from ubx.graph import (
    Graph,
    add_path,
    add_pendant,
    export_dot,
    parse_graph,
    remove_vertex,
    serialize_graph,
)


def c6() -> Graph:
    return Graph(6, [(i, (i + 1) % 6) for i in range(6)])


class TestConstruction:
    def test_edges_are_normalized_and_sorted(self):
        g = Graph(4, [(3, 2), (1, 0), (2, 1)])
        assert g.edges == ((0, 1), (1, 2), (2, 3))

    def test_self_loop_rejected(self):
        with pytest.raises(SelfLoopError):
            Graph(3, [(0, 1), (1, 1), (1, 2)])

    def test_duplicate_edge_rejected_in_either_orientation(self):
        with pytest.raises(DuplicateEdgeError):
            Graph(3, [(0, 1), (1, 2), (2, 1)])

    def test_disconnected_rejected(self):
        with pytest.raises(DisconnectedError):
            Graph(4, [(0, 1), (2, 3)])

    def test_out_of_range_endpoint(self):
        with pytest.raises(ParseError):
            Graph(3, [(0, 3)])

    def test_bad_vertex_count(self):
        with pytest.raises(ParseError):
            Graph(0, [])

    def test_immutable(self):
        g = c6()
        with pytest.raises(AttributeError):
            g.n = 7


class TestDistances:
    def test_path_distances(self):
        g = Graph(4, [(0, 1), (1, 2), (2, 3)])
        assert g.distances()[0] == [0, 1, 2, 3]

    def test_cycle_wraps(self):
        d = c6().distances()
        assert d[0][3] == 3
        assert d[1][5] == 2

    def test_symmetric(self):
        d = c6().distances()
        for u in range(6):
            for v in range(6):
                assert d[u][v] == d[v][u]


class TestParseSerialize:
    def test_json_round_trip_is_byte_identical(self):
        text = serialize_graph(Graph(4, [(0, 1), (1, 2), (1, 3)], {0: "root"}))
        again = serialize_graph(parse_graph(text))
        assert again == text

    def test_edge_list_with_comments(self):
        g = parse_graph("# a triangle\n0 1\n1 2\n2 0\n")
        assert g.n == 3
        assert g.edges == ((0, 1), (0, 2), (1, 2))

    def test_labels_survive_json(self):
        g = parse_graph(serialize_graph(Graph(2, [(0, 1)], {1: "tip"})))
        assert g.labels == {1: "tip"}

    def test_garbage_rejected(self):
        with pytest.raises(ParseError):
            parse_graph("{not json")
        with pytest.raises(ParseError):
            parse_graph("0 one\n")

    def test_empty_input_rejected(self):
        with pytest.raises(ParseError):
            parse_graph("   \n")


class TestSurgery:
    def test_add_pendant_returns_new_id(self):
        g, u = add_pendant(c6(), 2)
        assert u == 6
        assert g.n == 7
        assert (2, 6) in g.edges

    def test_add_path_length(self):
        g = add_path(c6(), 0, 3)
        assert g.n == 9
        assert g.distances()[0][8] == 3

    def test_add_path_chains_new_ids(self):
        g = add_path(c6(), 0, 2)
        assert (0, 6) in g.edges and (6, 7) in g.edges

    def test_remove_vertex_remaps_ids(self):
        g = Graph(4, [(0, 1), (1, 2), (2, 3)])
        h, mapping = remove_vertex(g, 0)
        assert h.n == 3
        assert mapping == {1: 0, 2: 1, 3: 2}
        assert h.edges == ((0, 1), (1, 2))

    def test_remove_vertex_disconnecting_raises(self):
        g = Graph(4, [(0, 1), (1, 2), (2, 3)])
        with pytest.raises(DisconnectedError):
            remove_vertex(g, 1)


class TestDot:
    def test_black_wins_over_gray(self):
        dot = export_dot(3, [(0, 1), (1, 2)], black=[1], gray=[1, 2])
        assert dot.count("fillcolor=black") == 1
        assert dot.count("fillcolor=gray") == 1
        assert "1 [style=filled fillcolor=black fontcolor=white];" in dot

    def test_deterministic_edge_order(self):
        a = export_dot(3, [(2, 1), (1, 0)])
        b = export_dot(3, [(0, 1), (1, 2)])
        assert a == b

    def test_labels_rendered(self):
        dot = export_dot(2, [(0, 1)], labels={0: "v0"})
        assert 'label="v0"' in dot
