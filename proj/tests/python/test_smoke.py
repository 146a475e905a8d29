"""Smoke tests for the cocy python bindings."""

import json

import numpy as np
import pytest

import cocy


def test_version():
    assert cocy.__version__


def test_plaquette_residual():
    assert cocy.plaquette_residual(left=0, top=0, right=0, bottom=0) == 0
    assert cocy.plaquette_residual(left=0, top=1, right=1, bottom=0) == 0
    assert cocy.plaquette_residual(left=0, top=0, right=1, bottom=0) == 1


def test_strip_sampler_validates_and_is_deterministic():
    a = cocy.sample_strip_quadrant(0.5, 64, 64, seed=7)
    b = cocy.sample_strip_quadrant(0.5, 64, 64, seed=7)
    assert cocy.encode_config(a) == cocy.encode_config(b)
    report = cocy.validate_cocycle(a)
    assert report.valid
    assert report.violations == []


def test_labels_roundtrip_through_numpy():
    cfg = cocy.sample_strip_quadrant(0.5, 16, 12, seed=1)
    h = cfg.h_labels()
    v = cfg.v_labels()
    assert h.shape == (13, 16)
    assert v.shape == (12, 17)
    back = cocy.EdgeConfig.from_arrays(h, v)
    assert back == cfg


def test_height_field_and_f():
    stripes = cocy.fixture_stripes(5, 3)
    hf = cocy.integrate_height(stripes, anchor=(0, 0))
    values = hf.values()
    assert values.shape == (4, 6)
    assert values[0, 5] == 5
    assert np.all(values == np.arange(6))


def test_invalid_config_raises():
    cfg = cocy.EdgeConfig(2, 2)
    cfg.set_h(0, 0, True)
    with pytest.raises(ValueError):
        cocy.integrate_height(cfg, anchor=(0, 0))


def test_chain_algebra():
    P = cocy.derive_transition_matrix(0.3)
    m = P.matrix()
    assert m.shape == (6, 6)
    assert np.allclose(m.sum(axis=1), 1.0, atol=1e-12)
    pi = cocy.stationary_distribution(P)
    assert cocy.reversal_check(P, pi)
    states = list(cocy.SQUARE_STATES)
    bottom_mass = sum(p for code, p in zip(states, pi.probabilities()) if code[3] == "1")
    assert abs(bottom_mass - 0.3) < 1e-9


def test_complete_square_examples():
    assert cocy.complete_square(0, 1, heads=False) == "0101"
    assert cocy.complete_square(1, 0, heads=False) == "1010"
    assert cocy.complete_square(0, 0, heads=True) == "0110"
    assert cocy.complete_square(0, 0, heads=False) == "0000"


def test_clusters_and_spanning():
    colors, cfg = cocy.sample_yaguchi(width=96, height=96, burn_in=96, seed=3)
    assert cocy.validate_cocycle(cfg).valid
    hf = cocy.integrate_height(cfg, anchor=(0, 0))
    cs = cocy.zero_clusters(cfg, hf)
    stats = cocy.spanning_stats(cs)
    assert stats.ew_count >= 1
    assert stats.distinct_f_ew >= 2
    ids = cs.ids()
    assert ids.shape == (97, 97)
    assert ids.min() >= 0


def test_codec_roundtrip_and_parse_error():
    cfg = cocy.sample_independent(0.4, 0.6, 8, 8, seed=2)
    data = cocy.encode_config(cfg)
    assert data.startswith(b"COCY 1\n")
    assert cocy.decode_config(data.decode()) == cfg
    with pytest.raises(ValueError):
        cocy.decode_config("COCY 1\nW 1 H 1\n0\n")


def test_analyze_json_document():
    cfg = cocy.sample_strip_quadrant(0.5, 48, 48, seed=9)
    doc = json.loads(cocy.analyze_json(cfg))
    for key in ("marginals", "clusters", "density", "cones", "directional", "spanning",
                "dead_ends", "meta"):
        assert key in doc
    assert doc["clusters"]["valid"] is True


def test_render_ppm_header():
    cfg = cocy.fixture_checkerboard(6, 4)
    ppm = cocy.render_ppm(cfg, scale=4)
    assert ppm.startswith(b"P6\n")
    assert b"25 17" in ppm
