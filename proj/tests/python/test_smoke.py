import json

import pytest

import bracekit as bk


def test_fixtures_and_graph6():
    names = bk.fixture_names()
    assert "Heawood" in names and "K33" in names
    h = bk.fixture("Heawood")
    assert (h.order, h.size) == (14, 21)
    assert bk.from_graph6(h.graph6()) == h
    assert bk.to_graph6(h) == h.graph6()
    with pytest.raises(bk.UnknownFixture):
        bk.fixture("Petersen")
    with pytest.raises(bk.ParseError):
        bk.from_graph6("D!!")


def test_graph_construction():
    c4 = bk.Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert c4.edges == [(0, 1), (0, 3), (1, 2), (2, 3)]
    assert c4.neighbours(0) == [1, 3]
    assert bk.are_isomorphic(c4, "C4")
    with pytest.raises(ValueError):
        bk.Graph(3, [(0, 0)])


def test_matchings_and_factors():
    assert bk.count_perfect_matchings("K33") == 6
    assert len(bk.perfect_matchings("Cube")) == 9
    with pytest.raises(bk.BudgetExceeded):
        bk.count_perfect_matchings("Heawood", budget=5)
    v = bk.is_two_factor_hamiltonian("Cube")
    assert not v["two_factor_hamiltonian"]
    assert len(v["witness"]) == 2
    assert bk.is_two_factor_hamiltonian("Heawood")["two_factor_hamiltonian"]
    assert bk.is_brace("Heawood") and not bk.is_brace("Prism")
    assert bk.girth("Heawood") == 6


def test_pfaffian():
    assert bk.is_pfaffian("Cube")
    assert not bk.is_pfaffian("K33")
    assert bk.pfaffian_orientation("K33") is None
    arcs = bk.pfaffian_orientation("Heawood")
    assert len(arcs) == 21
    with pytest.raises(bk.PreconditionError):
        bk.nice_cycles("Fig7a")


def test_star_product_round_trip():
    g = bk.star_product("K33", "Heawood")
    assert (g.order, g.size) == (18, 27)
    pieces = bk.decompose(g)
    assert sorted(p.order for _, p in pieces) == [6, 14]
    assert all(kind == "brace" for kind, _ in pieces)


def test_scan_report():
    text = "\n".join(bk.to_graph6(bk.fixture(n)) for n in bk.fixture_names()) + "\n"
    a = bk.scan(text, filters="cubic,bipartite,brace", checks="2fh")
    b = bk.scan(text, filters="cubic,bipartite,brace", checks="2fh", workers=3)
    assert a == b
    report = json.loads(a)
    assert report["schema"] == "bracekit.scan/1"
    survivors = [report["records"][i]["graph6"] for i in report["aggregate"]["survivors"]]
    assert [bk.from_graph6(s).order for s in survivors] == [6, 14]
    csv = bk.scan(text, checks="cubic", format="csv")
    assert csv.count("\n") == len(bk.fixture_names()) + 1


def test_lemma_suite():
    entries = bk.lemma_suite()
    assert len(entries) >= 25
    assert all(outcome == "PASS" for _, outcome, _ in entries)
