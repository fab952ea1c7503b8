import math

import networkx as nx
import pytest

import ncenergy


def test_analyze_d6():
    r = ncenergy.analyze("D:2m=6")
    e = r["energies"]
    assert e["n_vertices"] == 5 and e["n_edges"] == 9
    assert e["LE"]["text"] == "42/5"
    assert math.isclose(e["LEplus"]["value"], 9 / 5 + math.sqrt(33), rel_tol=1e-12)
    assert r["flags"]["l_hyper"] and not r["flags"]["q_hyper"]
    assert r["shape"]["text"] == "K_{3.1,1.2}"


def test_graph_edges_match_networkx():
    n, edges = ncenergy.graph_edges("S4")
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    assert (n, g.number_of_edges()) == (23, 228)
    lap = sorted(nx.laplacian_spectrum(g))
    r = ncenergy.analyze("S4")
    assert lap == pytest.approx(sorted(r["spectra"]["L"]["numeric"]), abs=1e-8)


def test_closed_form():
    r = ncenergy.closed_form("Dihedral", 5)
    assert r["theorem"] == "Dihedral1"
    assert sum(e["mult"] for e in r["qspec"]) == 9
    assert ncenergy.closed_form("Dicyclic", 2)["text"] == {"E": "8", "LE": "8", "LEplus": "8"}


def test_squares():
    assert [n for n, _ in ncenergy.square_sequence("K1", 10000)] == [1, 2, 7, 36, 205, 1190, 6931]
    assert ncenergy.square_value("K1", 36) == 9801
    assert ncenergy.is_perfect_square(768398401**2) == 768398401
    assert ncenergy.is_perfect_square(2) is None


def test_verify_and_catalog():
    assert len(ncenergy.theorem_ids()) == 17
    r = ncenergy.verify("Dihedral1")
    assert r["summary"]["fail"] == 0 and r["summary"]["exit_code"] == 0


def test_errors():
    with pytest.raises(ncenergy.AbelianGroup):
        ncenergy.analyze("Z:4")
    with pytest.raises(ncenergy.SpecParseError):
        ncenergy.analyze("D:2m=7")
    with pytest.raises(ncenergy.NegativeInput):
        ncenergy.is_perfect_square(-1)
