from fractions import Fraction

import pytest

import hypersat as hs


def test_counts_match_oracles():
    c33 = hs.linear_cycle(3, 3)
    sts = hs.steiner_triple_9()
    assert sts.m == 12 and sts.n == 9
    assert hs.hom_count(hs.single_edge(3), sts) == 72
    assert hs.hom_count(c33, sts) == hs.brute_hom(c33, sts) == 504
    assert hs.labeled_copy_count(c33, sts) == hs.brute_copies(c33, sts)
    assert hs.berge_girth(hs.linear_cycle(3, 5)) == 5
    assert hs.berge_girth(hs.linear_path(3, 3)) is None
    assert hs.brute_berge_girth(c33) == 3
    assert hs.automorphism_count(c33) == 6


def test_big_integers_are_exact():
    f = hs.Hypergraph(3, 16, [[0, 1, 2]])
    value = hs.hom_count(f, hs.complete_hypergraph(3, 30))
    assert isinstance(value, int)
    assert value == 6 * 4060 * 30**13
    assert value > 2**64


def test_text_round_trip(tmp_path):
    h = hs.random_uniform(10, 3, 25, seed=7)
    text = hs.format_hypergraph(h)
    assert hs.parse_hypergraph(text) == h
    path = str(tmp_path / "g.txt")
    hs.write_hypergraph(h, path)
    assert hs.read_hypergraph(path) == h
    with pytest.raises(hs.ParseError):
        hs.parse_hypergraph("3 6\n")


def test_bounds_are_fractions():
    b = hs.bound_values(3, 2, 100, 5000)
    assert b["f_r"] == Fraction(1)
    assert b["conditional_exponent"] == Fraction(1, 3)
    assert b["coincide"]
    assert hs.bound_values(4, 2, 100, 5000)["f_r"] == Fraction(7, 12)
    with pytest.raises(ValueError):
        hs.bound_values(2, 2, 100, 5)


def test_sidorenko_witness():
    assert hs.sidorenko_check(hs.linear_cycle(3, 3), hs.steiner_triple_9()) == "violated"


def test_greedy_count_closed_form():
    s = 11
    host = hs.complete_partite(3, s)
    assert host.m == s**3
    count, floor = hs.greedy_count(host, s, 2)
    assert count == 6 * s**3 * (s - 1) ** 3 * (s - 2) ** 3 * (s - 3)
    assert count >= floor


def test_pipeline_certificates_verify():
    g = hs.complete_hypergraph(3, 12)
    rep = hs.supersat(g, ell=2, budget=40, seed=1)
    assert rep["certificates"]
    assert all(t["status"] != "fail" for t in rep["trace"])
    for cert in rep["certificates"]:
        assert hs.certificate_problem(cert, g) is None
        assert len(cert["edges"]) == 5


def test_cli_entry_point():
    status, out, _ = hs.run_cli(["bounds", "--r", "3", "--ell", "2", "--n", "100", "--edges", "5000"])
    assert status == 0
    assert "f(r) = 1/1" in out
    status, _, err = hs.run_cli(["nonsense"])
    assert status == 2
