import numpy as np
import pytest

import oracles
from netpatrimony import (
    HALF,
    RAW_MULTISET,
    SIMPLE,
    TABLE1,
    SnapParseError,
    build_graph,
    degree_stats,
    edge_dump_lines,
    load_graph,
    parse_edge_lines,
    same_labelled_graph,
)
from netpatrimony.graph import load_edge_file
from conftest import SIX_NODE_FILE


def test_first_appearance_indexing():
    g = build_graph([(10, 3), (7, 10), (3, 7)])
    assert g.node_labels.tolist() == [10, 3, 7]
    assert g.node_count == 3
    assert g.edge_count == 3


def test_raw_multiset_keeps_duplicates_and_loops():
    g = build_graph([(1, 1), (1, 2), (1, 2)], mode=RAW_MULTISET)
    assert g.edge_count == 3
    assert g.degrees.tolist() == [4, 2]  # the loop adds 2
    assert sorted(g.neighbors(0).tolist()) == [0, 0, 1, 1]


def test_simple_drops_duplicates_and_loops():
    g = build_graph([(1, 1), (1, 2), (2, 1), (1, 2)], mode=SIMPLE)
    assert g.edge_count == 1
    assert g.degrees.tolist() == [1, 1]


def test_isolated_nodes_via_nodes_argument():
    g = build_graph([(1, 2)], nodes=[1, 2, 3])
    assert g.node_count == 3
    assert g.degree(2) == 0
    assert g.node_labels.tolist() == [1, 2, 3]


def test_empty_edges_require_nodes():
    with pytest.raises(ValueError, match="empty"):
        build_graph([])
    g = build_graph([], nodes=[4, 5])
    assert (g.node_count, g.edge_count) == (2, 0)


def test_unknown_mode_rejected():
    with pytest.raises(ValueError, match="mode"):
        build_graph([(1, 2)], mode="LOOSE")


def test_degree_and_neighbors_bounds():
    g = build_graph([(1, 2)])
    with pytest.raises(IndexError):
        g.degree(2)
    with pytest.raises(IndexError):
        g.neighbors(-1)


@pytest.mark.parametrize("multiset", [False, True])
def test_structure_matches_oracle_on_random_graphs(multiset):
    rng = np.random.default_rng(2024)
    mode = RAW_MULTISET if multiset else SIMPLE
    for _ in range(200):
        n = int(rng.integers(1, 13))
        edges = oracles.random_edge_list(rng, n, multiset)
        if not edges:
            continue
        g = build_graph(edges, mode=mode, nodes=range(n))
        a = oracles.adjacency_matrix(edges, n, multiset)
        assert g.degrees.tolist() == oracles.degrees_of(a)
        assert g.edge_count == oracles.edge_count_of(a)
        assert int(g.degrees.sum()) == 2 * g.edge_count  # handshake
        # CSR symmetry: entry counts i->j and j->i agree
        for i in range(n):
            row = g.neighbors(i).tolist()
            for j in range(n):
                assert row.count(j) == int(a[i, j])


class TestParsing:
    def test_six_node_file(self, six_node_simple):
        g = load_graph(SIX_NODE_FILE)
        assert same_labelled_graph(g, six_node_simple)

    def test_comments_blanks_and_inline_comments(self):
        lines = ["# header", "", "1 2", "  ", "2 3  # trailing note", "# end"]
        arr = parse_edge_lines(lines)
        assert arr.tolist() == [[1, 2], [2, 3]]

    def test_non_integer_token_reports_line(self):
        with pytest.raises(SnapParseError) as exc:
            parse_edge_lines(["# c", "1 2", "3 x"])
        assert exc.value.line_no == 3
        assert "3" in str(exc.value)

    def test_wrong_field_count_reports_line(self):
        with pytest.raises(SnapParseError) as exc:
            parse_edge_lines(["1 2", "3 4 5"])
        assert exc.value.line_no == 2

    def test_float_id_rejected(self, tmp_path):
        path = tmp_path / "e.txt"
        path.write_text("1 2\n3 4.5\n")
        with pytest.raises(SnapParseError) as exc:
            load_edge_file(path)
        assert exc.value.line_no == 2

    def test_oversized_id_rejected(self):
        with pytest.raises(SnapParseError) as exc:
            parse_edge_lines(["99999999999999999999 1"])
        assert exc.value.line_no == 1

    def test_file_fallback_matches_strict_parser(self, tmp_path):
        text = "# c\n5 7\n7 5\n5 5\n"
        path = tmp_path / "e.txt"
        path.write_text(text)
        assert load_edge_file(path).tolist() == parse_edge_lines(
            text.splitlines()
        ).tolist()

    def test_comment_only_file_is_empty_input(self, tmp_path):
        path = tmp_path / "e.txt"
        path.write_text("# nothing here\n\n")
        with pytest.raises(ValueError, match="empty"):
            load_graph(path)

    def test_missing_file_raises_oserror(self, tmp_path):
        with pytest.raises(OSError):
            load_graph(tmp_path / "absent.txt")


class TestDegreeStats:
    def test_six_node_values(self, six_node_simple):
        s = degree_stats(six_node_simple)
        assert s.degree_sequence.tolist() == [4, 3, 3, 2, 2, 2]
        assert s.mean_degree == 8 / 3
        assert s.mean_square_degree == 23 / 3
        assert s.variance == pytest.approx(5 / 9, rel=1e-12)
        assert s.density == 8 / 30
        assert s.density_convention == TABLE1
        assert (s.degree_sum, s.degree_square_sum) == (16, 46)

    def test_density_conventions_differ_by_factor_two(self, six_node_simple):
        table1 = degree_stats(six_node_simple, density_convention=TABLE1)
        half = degree_stats(six_node_simple, density_convention=HALF)
        assert half.density == 2 * table1.density

    def test_single_node_density_zero(self):
        g = build_graph([], nodes=[9])
        s = degree_stats(g)
        assert (s.density, s.mean_degree) == (0.0, 0.0)

    def test_empty_graph_rejected(self):
        from netpatrimony.graph import Graph

        empty = Graph(
            node_count=0,
            edge_count=0,
            indptr=np.zeros(1, np.int64),
            indices=np.empty(0, np.int64),
            degrees=np.empty(0, np.int64),
            node_labels=np.empty(0, np.int64),
            mode=SIMPLE,
        )
        with pytest.raises(ValueError):
            degree_stats(empty)

    def test_unknown_convention_rejected(self, six_node_simple):
        with pytest.raises(ValueError, match="convention"):
            degree_stats(six_node_simple, density_convention="FULL")

    def test_regular_graph_zero_variance(self, ring6):
        s = degree_stats(ring6)
        assert s.variance == 0.0
        assert s.mean_degree == 2.0

    def test_raw_multiset_counts_every_line(self):
        g = build_graph([(1, 2), (1, 2), (3, 3)], mode=RAW_MULTISET)
        s = degree_stats(g)
        assert s.edge_count == 3
        assert sorted(s.degree_sequence.tolist()) == [2, 2, 2]


class TestEdgeDump:
    def test_endpoints_follow_internal_order_and_lines_sort(self):
        g = build_graph([(10, 3), (7, 10), (3, 7)])
        lines = edge_dump_lines(g)
        assert lines == sorted(lines)
        assert lines == ["10\t3", "10\t7", "3\t7"]

    def test_multiplicities_preserved(self):
        g = build_graph([(1, 1), (1, 2), (1, 2)], mode=RAW_MULTISET)
        assert edge_dump_lines(g) == ["1\t1", "1\t2", "1\t2"]

    @pytest.mark.parametrize("multiset", [False, True])
    def test_dump_round_trips_as_labelled_graph(self, multiset):
        rng = np.random.default_rng(77)
        mode = RAW_MULTISET if multiset else SIMPLE
        for _ in range(60):
            n = int(rng.integers(2, 10))
            edges = oracles.random_edge_list(rng, n, multiset)
            g = build_graph(edges, mode=mode, nodes=range(n))
            rebuilt = build_graph(
                parse_edge_lines(edge_dump_lines(g)), mode=mode, nodes=range(n)
            )
            assert same_labelled_graph(g, rebuilt)

    def test_simple_rebuild_is_idempotent(self):
        rng = np.random.default_rng(5)
        for _ in range(40):
            n = int(rng.integers(2, 10))
            edges = oracles.random_edge_list(rng, n, True)
            g = build_graph(edges, mode=SIMPLE, nodes=range(n))
            once = edge_dump_lines(g)
            again = edge_dump_lines(
                build_graph(parse_edge_lines(once), mode=SIMPLE, nodes=range(n))
            )
            assert once == again
