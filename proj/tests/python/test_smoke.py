import json

import pytest

import costas


def test_verifier():
    assert costas.is_costas([2, 4, 3, 1])
    assert not costas.is_costas([1, 2, 3, 4])
    assert costas.find_collision([1, 2, 3, 4]) == (1, 1, 2)
    assert costas.find_collision([2, 4, 3, 1]) is None
    with pytest.raises(costas.CostasError, match="NotAPermutation"):
        costas.is_costas([1, 1])


def test_enumeration_counts():
    assert [len(costas.enumerate_costas(n)) for n in range(1, 7)] == [1, 2, 4, 12, 40, 116]


def test_build_and_replay():
    doc = costas.build("t4", 11)
    assert doc == {"format": 1, "n": 7, "perm": [3, 6, 1, 7, 5, 2, 4], "method": "t4", "q": 11, "params": {"alpha": 7}}
    assert costas.replay(json.dumps(doc)) == doc["perm"]
    assert costas.build("w1", 5, alpha=2)["perm"] == [2, 4, 3, 1]
    assert costas.build("g4", 41, alpha=7, beta=35)["n"] == 37
    with pytest.raises(costas.CostasError, match="t4: no primitive root"):
        costas.build("t4", 29)
    fields = {"w1": 41, "w2": 41, "l2": 49, "g2": 49, "g3": 49, "g4c2": 64, "t4": 41, "g4": 41}
    assert sorted(fields) == sorted(costas.methods())
    for method, q in fields.items():
        assert costas.is_costas(costas.build(method, q)["perm"])


def test_fpr():
    assert costas.fpr_candidates(11) == [4, 8]
    assert costas.fpr_set(11) == [8]
    assert costas.fpr_set(29) == []
    assert costas.fpr_to_t4_root(8, 11) == 7
    assert costas.t4_admissible(29) and not costas.t4_applicable(29)
    assert costas.g4_applicable(41) and not costas.g4_applicable(11)


def test_density():
    assert costas.artin_constant(2) == pytest.approx(0.5)
    c_t4, c_g4 = costas.predicted_constants()
    assert c_t4 == pytest.approx(0.2657, abs=5e-4)
    assert c_t4 / c_g4 == pytest.approx(3.0)
    rows = costas.census_t4(1000)
    assert rows[-1][:3] == (1000, 46, 168)
    assert all(g[1] <= t[1] for g, t in zip(costas.census_g4(1000), rows))
    assert costas.exists_primitive_trinomial(11, (1, 0), (2, 0))
    assert not costas.exists_primitive_trinomial(11, (1, 0), (-1, 2))
    assert costas.trinomial_census(1000, (1, 0), (-1, 2), [7, 1000])[0][1] == 2
    report = costas.verify_zero_density_claims(1000, 1)
    assert set(report) == {"violations", "exceptions", "checked", "skipped"}
