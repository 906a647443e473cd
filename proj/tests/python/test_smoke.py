import pytest

import rootsys


def test_root_system():
    e8 = rootsys.root_system("E8")
    assert e8["roots"] == 240
    assert e8["weyl_order"] == 2**14 * 3**5 * 5**2 * 7
    assert e8["marks"] == [1, 2, 3, 4, 6, 5, 4, 3, 2]


def test_hom_counts():
    assert rootsys.hom_count("5A1", "E7") == 15
    assert rootsys.hom_count("A1", "A1") == 1
    assert sorted(c["perp"] for c in rootsys.hom("A5", "E7")) == ["A1", "A2"]


def test_table_columns():
    rows = rootsys.table("D4", "A3")
    assert len(rows) == 1
    assert list(rows[0]) == [
        "xi", "sigma", "family", "sharp", "sharp_xi", "sharp_xi_prime",
        "sharp_sigma", "perp", "perpperp", "P", "L", "S",
    ]
    assert rows[0]["sharp"] == 3


def test_named_and_orbits():
    assert rootsys.out_sigma_order("8A1std", "E8") == 1344
    assert rootsys.orbit_size("8A1std", "E8") == 2025
    assert rootsys.perp("A2", "E6") == "2A2"


def test_stats_and_small_invariants():
    assert rootsys.stats("G2")["classes"] == 6
    assert rootsys.r("E7") == 7
    assert rootsys.m("E6") == 5
    assert rootsys.fundamental_count("2A1", "E6") == 10
    assert set(rootsys.affine_labels(1)) == {"A1~", "BC1~"}


def test_errors():
    with pytest.raises(ValueError):
        rootsys.root_system("E9")
    with pytest.raises(ValueError):
        rootsys.hom_count("Q3", "E8")


def test_reproduce_scope():
    checks = rootsys.reproduce("affine", 2)
    assert checks and all(c["pass"] for c in checks)
