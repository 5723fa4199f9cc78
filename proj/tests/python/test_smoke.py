"""Smoke tests for the python bindings."""

import json

import pytest

import parhitchin as ph


def test_version():
    assert ph.__version__ == "0.1.0"


def test_combinatorics():
    assert ph.conjugate([5, 4, 2]) == [3, 3, 2, 2, 1]
    assert ph.level_function([5, 4, 2]) == [1, 1, 1, 2, 2, 2, 3, 3, 4, 4, 5]
    assert ph.sort_to_partition([1, 4, 2]) == [4, 2, 1]
    assert ph.flag_dimension([5, 4, 2]) == 38
    assert ph.weyl_coset_count([2, 1]) == 3
    assert ph.min_pair_sum([3, 3, 2, 2, 1]) == 17


def test_census():
    rep = ph.census(2, 2, 0, [[1, 1]])
    assert rep["dim_moduli"] == 6
    assert rep["dim_higgs"] == 12
    assert rep["dim_parabolic_base"] == 6
    assert rep["dim_hitchin_base"] == 7
    assert rep["genus_spectral"] == 6
    assert rep["delta"] == 0
    assert rep["par_degree"] == {"num": 3, "den": 2}
    rep2 = ph.census(2, 2, 0, [[2]])
    assert rep2["delta"] == 1
    assert rep2["weak_fiber_components"] == 1


def test_series_ops():
    # (1 + t)^{-1} over F_5 at N = 4
    assert ph.invert_unit([1, 1], 5, 1, 4) == [1, 4, 1, 4]
    assert ph.is_eisenstein([[1], [0, 1], [0, 3]], 5, 1, 8)
    assert not ph.is_eisenstein([[1], [-1]], 5, 1, 8)
    assert ph.resultant_valuation([[1], [0, 1]], [[1], [0, 2]], 5, 1, 8) == 1


def test_spectral_pipeline():
    # l^2 - 3tl + 2t^2 over F_5 factors into l - t and l - 2t
    poly = [[1], [0, -3], [0, 0, 2]]
    ok, _ = ph.genericity_check(poly, 5, 1, 16)
    assert ok
    assert ph.newton_polygon(poly, 5, 1, 16) == [(0, 0), (2, 2)]
    fac = ph.factor_spectral(poly, 5, 1, 16)
    assert len(fac["factors"]) == 2
    assert fac["field"] == (5, 1)
    assert ph.local_delta(poly, 5, 1, 16) == 1
    degrees, branches = ph.ramification_profile(poly, 5, 1, 16)
    assert degrees == [1, 1] and branches == 2
    assert ph.expected_polygon([5, 4, 2]) == [(0, 0), (6, 2), (10, 4), (11, 5)]


def test_local_higgs_sampling():
    poly = ph.random_char_poly([2, 1], 101, 1, 12, 42)
    assert len(poly) == 4  # degree 3, leading first
    ok, rows = ph.verify_valuation_bounds(poly, [2, 1], 101, 1, 12)
    assert ok
    assert [row["gamma"] for row in rows] == [1, 1, 2]
    assert ph.jordan_type_mod_t([2, 1], 101, 1, 12, 42) == [2, 1]
    # determinism
    assert poly == ph.random_char_poly([2, 1], 101, 1, 12, 42)


def test_generic_sample_polygon():
    poly = ph.sample_spectral_generic([5, 4, 2], 101, 1, 24, 9001)
    assert ph.newton_polygon(poly, 101, 1, 24) == [(0, 0), (6, 2), (10, 4), (11, 5)]
    degrees, branches = ph.ramification_profile(poly, 101, 1, 24)
    assert degrees == [3, 3, 2, 2, 1]
    assert branches == 5
    assert ph.local_delta(poly, 101, 1, 24) == 17


def test_run_campaign():
    cfg = {
        "schema": "parhitchin-config/1",
        "field": {"p": 101, "m": 1},
        "precision": 16,
        "parabolic": {
            "genus": 2,
            "rank": 3,
            "degree": 0,
            "points": [{"levi": [2, 1]}],
        },
        "experiments": [
            {"name": "valuation_bounds", "trials": 5, "seed": 7},
            {"name": "bnr_roundtrip", "trials": 2, "seed": 1},
        ],
    }
    report = json.loads(ph.run_campaign(json.dumps(cfg)))
    assert report["schema"] == "parhitchin-report/1"
    assert report["all_passed"] is True
    assert report["census"]["dim_parabolic_base"] == 12
    names = [e["name"] for e in report["experiments"]]
    assert names == ["valuation_bounds", "bnr_roundtrip"]
    for e in report["experiments"]:
        assert e["passes"] == e["trials"]
    # determinism
    assert ph.run_campaign(json.dumps(cfg)) == ph.run_campaign(json.dumps(cfg), jobs=2)


def test_registry_and_errors():
    assert len(ph.experiment_registry()) == 7
    with pytest.raises(Exception):
        ph.invert_unit([0, 1], 5, 1, 4)  # not a unit
    with pytest.raises(Exception):
        ph.run_campaign(json.dumps({"schema": "parhitchin-config/1", "bogus": 1}))
