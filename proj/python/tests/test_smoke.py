import pytest

import sternpoly as sp


def test_small_polynomials():
    assert sp.stern_poly(0) == []
    assert sp.stern_poly(1) == [1]
    assert sp.stern_poly(19) == [1, 3, 3]
    assert sp.stern_pretty(19) == "3t^2+3t+1"


def test_big_index_and_expressions():
    n = 2**80 + 1
    assert sp.stern_number(n) == sp.stern_number(str(n))
    assert sp.parse_index("p[2,3]") == 2**8 - 3 * 2**4 + 2**2 - 3
    assert sp.stern_degree("2^20-1") == 19


def test_oracles_agree():
    for n in range(1, 300):
        assert sp.stern_poly(n) == sp.hyperbinary_poly(n - 1)
        assert sum(c * 2**i for i, c in enumerate(sp.stern_poly(n))) == n


def test_table1_counts():
    assert sp.pi(0, 2, 2**15) == 97
    assert sp.pi(1, 2, 2**15) == 82
    assert sp.pi(0, 2, 2**15, workers=2) == 97


def test_table2_prefix():
    rep = sp.enumerate_solutions(2**20, 0, 3)
    assert rep["solutions"][:3] == [19, 181, 29899]
    assert rep["count"] == 9
    assert sp.binary_string(181) == "10110101"


def test_mining():
    sols = sp.enumerate_solutions(40000, 0, 2)["solutions"]
    rep = sp.mine_affine_families(sols, 0, 2)
    fam = {f["triple"]: f for f in rep["families"]}
    assert fam["(16, -12, 1)"]["validated"]
    bad = fam["(88/3, -64, 119/3)"]
    assert not bad["validated"] and bad["failed_at"] == 4 and bad["failed_value"] == "6525"


def test_identity_and_conjecture_reports():
    assert "lemma2" in sp.identity_names()
    rep = sp.run_identity("lemma2", "n=1..10")
    assert rep["pass"] and rep["cases"] > 0
    c = sp.run_conjecture("C3", "n=0..4")
    assert c["summary"]["inconsistent"] == 0
    assert "C1.1" in sp.conjecture_ids()


def test_typo_ledger_flags():
    ids = {e["id"]: e for e in sp.typo_ledger()}
    for key in ("abstract-recurrence", "W-initial-values", "V3-index-collision"):
        assert ids[key]["flagged"] and ids[key]["evidence"]


def test_errors_carry_kind():
    with pytest.raises(sp.SternError) as info:
        sp.is_solution(4, 0, 2)
    assert info.value.kind == "EvenIndex"
    with pytest.raises(ValueError):
        sp.parse_index("2^")
    assert sp.count_real_roots([1, 1]) == 1
