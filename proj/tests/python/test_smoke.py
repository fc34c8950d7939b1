import os
import pathlib

import pytest

import symci

DATA = pathlib.Path(__file__).resolve().parents[2] / "data"


def test_partitions_of_four():
    assert symci.partitions(4) == [[4], [3, 1], [2, 2], [2, 1, 1], [1, 1, 1, 1]]


def test_character_table_rows_are_orthonormal():
    table = symci.character_table(4)
    sizes = [cls["size"] for cls in table["classes"]]
    assert sum(sizes) == 24
    rows = [row["values"] for row in table["characters"]]
    for i, a in enumerate(rows):
        for j, b in enumerate(rows):
            total = sum(s * x * y for s, x, y in zip(sizes, a, b))
            assert total == (24 if i == j else 0)


def test_kostka_foulkes_tilde():
    assert symci.kostka_foulkes_tilde("3,1", "1,1,1,1") == {1: 1, 2: 1, 3: 1}
    assert symci.kostka_foulkes_tilde("1,1,1,1", "1,1,1,1") == {6: 1}


def test_character_matches_oracle():
    formula = symci.character(4, "III", d=2, c=[2])["series"]
    assert formula["exact"]
    assert formula["hilbert"] == [1, 4, 6, 4, 1]
    oracle = symci.oracle_character((DATA / "ex4.gens").read_text(), formula["bound"] + 1)["series"]
    assert oracle["coeffs"][: len(formula["coeffs"])] == formula["coeffs"]
    assert oracle["hilbert"][len(formula["coeffs"]):] in ([], [0])


def test_regularity():
    assert symci.regularity((DATA / "ex4.gens").read_text())["regular"]
    assert not symci.regularity((DATA / "shared_factor.gens").read_text())["regular"]


def test_classify():
    accepted = symci.classify({"n": 4, "summands": [{"partition": [4], "degree": 2}, {"partition": [2, 2], "degree": 2}]})
    assert accepted["accepted"]
    assert accepted["type"]["case"] == "IV"
    rejected = symci.classify({"n": 4, "summands": [{"partition": [2, 1, 1], "degree": 3}]})
    assert not rejected["accepted"]


def test_errors():
    with pytest.raises(symci.ParseError):
        symci.oracle_character("n = 4\nx1 +", 3)
    with pytest.raises(ValueError):
        symci.character(4, "II", d=6, c=[1, 1, 1, 1])


def test_cli_roundtrip():
    code, out, err = symci.run_cli(["character", "--n", "4", "--case", "III", "--d", "2", "--c", "2"])
    assert code == 0 and err == ""
    assert "hilbert: 1, 4, 6, 4, 1" in out
    code, _, _ = symci.run_cli(["verify", "--gens", os.fspath(DATA / "nope.gens"), "--against", "case", "I"])
    assert code == 2
