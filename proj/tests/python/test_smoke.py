"""Smoke tests for the pybind11 module."""

import math

import pytest

import polyface


def test_facet_counts():
    assert [polyface.facet_count(n) for n in range(2, 7)] == [3, 9, 28, 85, 246]
    facets = polyface.enumerate_facets(2)
    assert facets == ["F(1)", "F(2)", "F(1;2|)"]


def test_rank_vector_roundtrip():
    u23 = polyface.Matroid.uniform(2, [1, 2, 3], 3).rank_vector()
    assert u23.evaluate([1, 2]) == "2"
    ok, _ = polyface.is_polymatroid(u23)
    assert ok
    bad = polyface.RankVector(2, ["0", "1", "1", "3"])
    ok, message = polyface.is_polymatroid(bad)
    assert not ok and "F(1;2|)" in message


def test_face_geometry():
    u23 = polyface.Matroid.uniform(2, [1, 2, 3], 3).rank_vector()
    u11 = polyface.Matroid.uniform(1, [1], 3).rank_vector()
    u13 = polyface.Matroid.uniform(1, [1, 2, 3], 3).rank_vector()
    assert polyface.minimal_face_dim(u23) == 1
    assert polyface.is_extreme_ray(u23)
    assert polyface.is_two_face(u23, u11)
    assert not polyface.is_two_face(u23, u13)


def test_matroid_structure():
    m = polyface.Matroid.uniform(1, [1, 2], 3)
    assert m.circuits() == [[3], [1, 2]]
    assert m.loops() == [3]
    assert m.parallel_pairs() == [(1, 2)]
    assert m.connected()
    rebuilt = polyface.Matroid.from_circuits(3, m.circuits())
    assert rebuilt == m


def test_parity_triple_entropy():
    parity = polyface.uniform_matroid_dist(2, 3, 2)
    h = parity.entropy_vector()
    u23 = polyface.Matroid.uniform(2, [1, 2, 3], 3).rank_vector()
    expected = u23.to_floats(math.log(2.0))
    assert h == pytest.approx(expected, abs=1e-12)


def test_classification_and_region():
    u23 = polyface.Matroid.uniform(2, [1, 2, 3], 3)
    u24 = polyface.Matroid.uniform(2, [1, 2, 3, 4], 4)
    assert polyface.classify_face(u23, [1, 2])["face_type"] == "matus"
    assert polyface.classify_face(u23, [1])["face_type"] == "chen-yeung"
    assert polyface.classify_face(u24, [1, 2, 3])["face_type"] == "matus"
    assert polyface.region_membership(u23, [1, 2], 0.6, 0.1) == "entropic"
    assert polyface.region_membership(u23, [1, 2], 0.6, 0.05) == "non-entropic"
    assert polyface.region_membership(u24, [1, 2, 3], 0.5, 0.4) == "unknown"
    csv = polyface.region_csv(u24, [1, 2, 3], math.log(7.0))
    assert csv.startswith("label,kind,x1,y1,x2,y2")
    assert "unknown v=2" in csv and "unknown v=6" in csv


def test_chi_membership():
    u24 = polyface.Matroid.uniform(2, [1, 2, 3, 4], 4)
    assert polyface.chi_membership(u24, 6) == "false"
    assert polyface.chi_membership(u24, 3) == "true"
    u25 = polyface.Matroid.uniform(2, [1, 2, 3, 4, 5], 5)
    assert polyface.chi_membership(u25, 2) == "unknown"


def test_matus_certificate():
    u23 = polyface.Matroid.uniform(2, [1, 2, 3], 3)
    cert = polyface.matus_certificate(u23, [1, 2], 2, 0.4)
    assert cert["residual"] < 1e-9
    assert cert["point"]["a"] == pytest.approx(0.4)
    assert cert["point"]["b"] == pytest.approx(math.log(2.0) - 0.4)
    masses = sum(len(entry) for entry in cert["distribution"]["pmf"])
    assert masses > 0


def test_catalog_access():
    names = polyface.catalog_names()
    assert len(names) >= 60
    m = polyface.catalog_matroid(names[0])
    assert m.n >= 1
