"""Lie-algebra chain complexes for unordered configurations."""

import json

import pytest
from hypothesis import given, settings, strategies as st

from confspace import ce, presets
from confspace.graded import GradedDims


ALL_PRESETS = presets.list_presets()


def gm(name):
    return ce.build_gm(presets.load_preset(name))


def test_preset_listing_is_sorted_and_complete():
    assert ALL_PRESETS == sorted(ALL_PRESETS)
    for expected in ("euclidean-2", "punctured-torus", "twice-punctured-plane",
                     "solid-torus", "closed-surface-2", "r3-minus-3"):
        assert expected in ALL_PRESETS


@pytest.mark.parametrize("name", ALL_PRESETS)
def test_differential_squares_to_zero(name):
    g = gm(name)
    for k in range(5):
        block = ce.ce_block(g, k)
        degs = sorted(block.degrees())
        for i in degs:
            d_i = block.diffs.get(i)
            d_up = block.diffs.get(i + 1)
            if d_i is None or d_up is None:
                continue
            assert d_i.matmul(d_up).is_zero(), (name, k, i)


def test_punctured_torus_two_points_full_table():
    b = ce.betti(gm("punctured-torus"), 2)
    assert dict(b.items()) == {0: 1, 1: 2, 2: 2}


def test_twice_punctured_plane_two_points_full_table():
    b = ce.betti(gm("twice-punctured-plane"), 2)
    assert dict(b.items()) == {0: 1, 1: 3, 2: 3}


def test_euclidean_plane_betti():
    g = gm("euclidean-2")
    assert dict(ce.betti(g, 2).items()) == {0: 1, 1: 1}
    assert dict(ce.betti(g, 3).items()) == {0: 1, 1: 1}
    assert dict(ce.betti(g, 1).items()) == {0: 1}


def test_closed_surface_two_points():
    # closed genus-2 surface: weight-2 block of the compactly supported theory
    b = ce.betti(gm("closed-surface-2"), 2)
    assert b.total() > 0
    assert b.euler() == sum(((-1) ** i) * d
                            for i, d in ce.betti(gm("closed-surface-2"), 2).items())


def test_stability_report_stable_range():
    for name in ("euclidean-3", "solid-torus", "r3-minus-2"):
        rows = ce.stability_report(gm(name), 4)
        assert rows, name
        for k, i, ok in rows:
            if i <= k:
                assert ok, (name, k, i)


def test_stability_rejects_small_dimension():
    with pytest.raises(ce.StabilityError):
        ce.stability_report(gm("euclidean-2"), 3)


def test_stabilization_map_shapes():
    g = gm("euclidean-3")
    phi = ce.stabilization_map(g, g.point_slot(), 2)
    iso = phi.induced_iso_degrees()
    assert iso.get(0) is True


def test_euler_series_matches_betti_euler():
    for name in ("punctured-torus", "solid-torus", "euclidean-4"):
        g = gm(name)
        series = ce.euler_series(g, 6)
        for k in range(7):
            chi = sum(((-1) ** i) * d for i, d in ce.betti(g, k).items())
            assert series.coefficient(0, k) == chi, (name, k)


def test_labeled_series_identity_and_guards():
    a = presets.load_preset("solid-torus")
    assert ce.labeled_series_check(a, 2, 16)
    with pytest.raises(ValueError):
        ce.labeled_series_check(a, 3, 16)
    with pytest.raises(ValueError):
        ce.labeled_series_check(presets.load_preset("euclidean-2"), 2, 16)


def test_sym_homology_odd_small():
    h = GradedDims({0: 1, 1: 2})
    sym2 = ce.sym_homology_odd(h, 2)
    # Sym^2 of one even class e and two odd x, y: e^2; ex, ey; xy
    assert dict(sym2.items()) == {0: 1, 1: 2, 2: 1}


def test_loopspace_homology():
    dims = ce.loopspace_homology(1, 3, 12)
    # once-looped S^3: a polynomial class in degree 2
    for d in range(0, 13, 2):
        assert dims.get(d) == 1, d
    assert dims.get(1) == 0
    # twice-looped S^3: an exterior class in degree 1
    assert dict(ce.loopspace_homology(2, 3).items()) == {0: 1, 1: 1}
    with pytest.raises(ValueError):
        ce.loopspace_homology(1, 4)


def test_load_algebra_validation():
    doc = {"name": "bad", "ambient_dim": 2,
           "basis": [{"name": "e", "degree": 0},
                     {"name": "x", "degree": 1}],
           "products": [{"left": "e", "right": "e",
                         "result": [{"basis": "x", "coeff": 1}]}]}
    with pytest.raises(ce.AlgebraError):
        ce.load_algebra(doc)
    doc = {"name": "bad2", "ambient_dim": 2,
           "basis": [{"name": "x", "degree": 1},
                     {"name": "y", "degree": 1},
                     {"name": "z", "degree": 2}],
           "products": [{"left": "x", "right": "y",
                         "result": [{"basis": "z", "coeff": 1}]},
                        {"left": "y", "right": "x",
                         "result": [{"basis": "z", "coeff": 1}]}]}
    with pytest.raises(ce.AlgebraError):
        ce.load_algebra(doc)


def test_algebra_document_round_trip(tmp_path):
    document = presets.preset_document("punctured-torus")
    path = tmp_path / "algebra.json"
    path.write_text(json.dumps(document))
    a = ce.load_algebra(json.loads(path.read_text()))
    assert a.name == "punctured-torus"
    assert dict(ce.betti(ce.build_gm(a), 2).items()) == {0: 1, 1: 2, 2: 2}
