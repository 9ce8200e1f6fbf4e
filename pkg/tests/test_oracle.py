import pytest

from romandom import brute_ext, brute_minimal_rdfs, gen_null, gen_star
from romandom.oracle import OracleCapExceeded
from romandom.rdf import format_assignment


def _strings(g, order="standard"):
    return [format_assignment(f) for f in brute_minimal_rdfs(g, order=order)]


def test_p2_standard(p2):
    assert _strings(p2) == ["02", "11", "20"]


def test_c5_count(c5):
    assert len(brute_minimal_rdfs(c5)) == 16


def test_k1_standard():
    assert _strings(gen_null(1)) == ["1"]


def test_null2_po():
    assert _strings(gen_null(2), order="po") == ["11", "12", "21", "22"]


def test_null_po_counts():
    for n in range(1, 6):
        assert len(brute_minimal_rdfs(gen_null(n), order="po")) == 2 ** n


def test_star_po_counts():
    for n in range(2, 7):
        assert len(brute_minimal_rdfs(gen_star(n), order="po")) == 2 ** n + 1


def test_output_sorted(c5):
    out = _strings(c5)
    assert out == sorted(out)
    assert len(set(out)) == len(out)


def test_cap_refusal():
    with pytest.raises(OracleCapExceeded):
        brute_minimal_rdfs(gen_null(13))
    with pytest.raises(OracleCapExceeded):
        brute_minimal_rdfs(gen_null(4), cap=3)
    assert len(brute_minimal_rdfs(gen_null(4), cap=4)) == 1


def test_bad_order(p2):
    with pytest.raises(ValueError):
        brute_minimal_rdfs(p2, order="lex")


def test_brute_ext_examples(p2):
    assert not brute_ext(p2, (1, 2))
    assert brute_ext(p2, (0, 0))
    assert brute_ext(p2, (0, 0), forbidden={0, 1})
    assert not brute_ext(p2, (2, 2), order="po")


def test_brute_ext_precomputed_list(p2):
    minimal = brute_minimal_rdfs(p2)
    assert brute_ext(p2, (2, 0), minimal=minimal)
    assert not brute_ext(p2, (2, 0), forbidden={0}, minimal=minimal)
