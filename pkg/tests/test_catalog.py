import pytest

from conftest import DATA
from dompoly.catalog import CATALOG_MAX_N, all_graphs, connected_graphs, load_catalog, write_catalog
from dompoly.equivalence import are_isomorphic, graph_invariant
from dompoly.formats import encode_graph6
from dompoly.graph import from_edges

# known counts of unlabelled graphs and of connected ones
ALL = [1, 1, 2, 4, 11, 34, 156]
CONNECTED = [1, 1, 1, 2, 6, 21, 112]


@pytest.mark.parametrize("n", range(7))
def test_counts(n):
    assert len(all_graphs(n)) == ALL[n]
    assert len(connected_graphs(n)) == CONNECTED[n]


def test_order_limit():
    with pytest.raises(ValueError):
        all_graphs(CATALOG_MAX_N + 1)


def test_fixtures_match_regenerated(tmp_path):
    expected = {
        "graphs_le5.g6": [g for n in range(1, 6) for g in all_graphs(n)],
        "graphs6.g6": all_graphs(6),
        "connected6.g6": connected_graphs(6),
    }
    for name, graphs in expected.items():
        out = tmp_path / name
        write_catalog(out, graphs)
        assert out.read_text() == (DATA / name).read_text()


def test_load_catalog_ids(tmp_path):
    path = tmp_path / "tiny.g6"
    path.write_text("A_\n\nA?\n")
    loaded = load_catalog(path)
    assert [sid for sid, _ in loaded] == ["tiny.g6:1", "tiny.g6:3"]
    assert [encode_graph6(g) for _, g in loaded] == ["A_", "A?"]


def test_matches_networkx_atlas():
    nx = pytest.importorskip("networkx")
    atlas = [g for g in nx.graph_atlas_g() if g.number_of_nodes() <= 6]
    for n in range(7):
        ours = all_graphs(n)
        theirs = [from_edges(n, g.edges()) for g in atlas if g.number_of_nodes() == n]
        assert len(theirs) == len(ours)
        for h in theirs:
            hits = [g for g in ours if graph_invariant(g) == graph_invariant(h) and are_isomorphic(g, h)]
            assert len(hits) == 1
