from fractions import Fraction

import pytest

import eqfix


def test_counts_and_kernel():
    assert eqfix.predict_counts(3) == [1, 3, 3, 1]
    assert eqfix.predict_counts(5, 2) == [2, 10, 20, 20, 10, 2]
    assert eqfix.vandermonde_kernel(4) == [1, -4, 6, -4, 1]
    assert eqfix.vandermonde_complete(2, 0, {0: 1}) == [1, -2, 1]
    assert all(isinstance(v, Fraction) for v in eqfix.vandermonde_complete(2, 0, {0: 1}))


def test_errors_carry_a_kind():
    with pytest.raises(eqfix.EqfixError) as info:
        eqfix.vandermonde_complete(3, 1, {0: 0, 3: 0, 1: 1})
    assert info.value.kind == "Inconsistent"


def test_localization():
    pair = {"n": 3, "points": [{"id": "p", "weights": [1, 1, -2]}, {"id": "q", "weights": [-1, -1, 2]}]}
    assert eqfix.counts(pair) == [0, 1, 1, 0]
    assert eqfix.consistency_check(pair)["passed"]
    num, den = eqfix.integrate_chern(pair, [0, 0, 1])
    assert num == [2] and den == [1]

    semi = {"n": 3, "points": [{"id": "p", "weights": [1, 1, -1]}, {"id": "q", "weights": [-1, -1, 1]}]}
    report = eqfix.consistency_check(semi)
    assert not report["passed"]
    assert report["failures"][0][0] == "c1"
    assert not eqfix.check(semi)


def test_cube_and_solver():
    cube = eqfix.hypercube_data(3, Fraction(3, 2))
    assert len(cube["points"]) == 8
    assert eqfix.check(cube)
    cert = eqfix.solve(cube)
    assert cert["model_agreement"]
    assert cert["bijection"]["{1,3}"] == [1, 3]


def test_reduced_space():
    r = eqfix.reduced_cohomology(3, Fraction(3, 2))
    assert r["betti"] == [1, 4, 1]
    assert r["betti_by_counting"] == [1, 4, 1]
    assert r["torsion_free"] and r["poincare"]
    with pytest.raises(eqfix.EqfixError):
        eqfix.reduced_cohomology(3, 1)


def test_search_and_ring():
    found = eqfix.search(3, 2, 2, 3)
    assert [[-2, 1, 1], [-1, -1, 2]] in found
    doc = eqfix.ring_document(2)
    assert len(doc["basis"]) == 4
    assert eqfix.ring_roundtrip(doc)


def test_cli():
    code, out, err = eqfix.run_cli(["count", "--n", "3"])
    assert code == 0
    assert "counts: 1 3 3 1" in out
    code, _, _ = eqfix.run_cli(["count", "--n", "0"])
    assert code == 2
