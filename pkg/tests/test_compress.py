import math

import numpy as np
import pytest

import wavekit
from wavekit import compress, fileio, transform2d as t2


def bundled_image():
    return wavekit.bundled_fingerprint().astype(float)


def count_zeros_oracle(d):
    """Direct loop count over every stored coefficient."""
    zeros = total = 0
    for band in [d.ll_final] + [lvl[k] for lvl in d.detail_levels
                                for k in ("lh", "hl", "hh")]:
        for v in np.ravel(band):
            zeros += v == 0.0
            total += 1
    return 100.0 * zeros / total


def test_hard_threshold_rule():
    img = np.arange(256.0).reshape(16, 16)
    d = t2.decompose2d(img, "haar", 2)
    out = compress.hard_threshold(d, 5.0)
    for lvl_in, lvl_out in zip(d.detail_levels, out.detail_levels):
        for k in ("lh", "hl", "hh"):
            a, b = lvl_in[k], lvl_out[k]
            assert np.all(b[np.abs(a) <= 5.0] == 0.0)
            kept = np.abs(a) > 5.0
            assert np.array_equal(b[kept], a[kept])
    # details-only policy leaves ll untouched
    assert np.array_equal(out.ll_final, d.ll_final)


def test_threshold_boundary_is_inclusive():
    d = t2.decompose2d(np.zeros((8, 8)), "haar", 1)
    d.detail_levels[0]["lh"][:] = 5.0
    out = compress.hard_threshold(d, 5.0)
    assert np.all(out.detail_levels[0]["lh"] == 0.0)


def test_all_bands_policy_thresholds_ll():
    img = np.full((16, 16), 1.0)
    d = t2.decompose2d(img, "haar", 2)
    out = compress.hard_threshold(d, 100.0, compress.ThresholdPolicy.ALL_BANDS)
    assert np.all(out.ll_final == 0.0)


def test_negative_threshold_rejected():
    d = t2.decompose2d(np.zeros((8, 8)), "haar", 1)
    with pytest.raises(ValueError):
        compress.hard_threshold(d, -1.0)


def test_zero_percentage_matches_loop_oracle():
    rng = np.random.default_rng(0)
    img = rng.integers(0, 256, size=(32, 32)).astype(float)
    d = compress.hard_threshold(t2.decompose2d(img, "db2", 3), 20.0)
    assert compress.zero_percentage(d) == pytest.approx(count_zeros_oracle(d))


def test_quantize_u8_rounding():
    x = np.array([[-3.0, 0.49999, 0.5, 254.5, 300.0]])
    out = compress.quantize_u8(x)
    assert out.tolist() == [[0, 0, 1, 255, 255]]
    assert out.dtype == np.uint8


def test_compress2d_zero_threshold_is_lossless():
    img = bundled_image()[:64, :64]
    rep = compress.compress2d(img, "db4", levels=3, threshold=0.0)
    assert math.isinf(rep.psnr_db)
    assert rep.to_dict()["infinite_psnr"] is True
    assert "psnr_db" not in rep.to_dict()
    assert np.array_equal(rep.output.astype(float), img)


def test_compress2d_monotone_in_threshold():
    img = bundled_image()
    prev_zero = -1.0
    prev_psnr = math.inf
    for t in (0.0, 5.0, 10.0, 20.0, 30.0, 50.0):
        rep = compress.compress2d(img, "db4", 4, t)
        assert rep.zero_percentage >= prev_zero
        assert rep.psnr_db <= prev_psnr + 1e-9
        prev_zero, prev_psnr = rep.zero_percentage, rep.psnr_db


def test_compress2d_energy_retention_bounds():
    img = bundled_image()
    rep = compress.compress2d(img, "db4", 4, 30.0)
    assert 0.0 < rep.retained_energy_percent <= 100.0
    # thresholding details only still keeps nearly all image energy
    assert rep.retained_energy_percent > 95.0


def test_compress2d_report_fields():
    img = bundled_image()[:64, :64]
    rep = compress.compress2d(img, "bior4.4", 2, 30.0)
    assert rep.wavelet == "bior4.4"
    assert rep.levels == 2 and rep.threshold == 30.0
    assert rep.output.shape == (64, 64) and rep.output.dtype == np.uint8
    d = rep.to_dict()
    assert set(d) == {"wavelet", "levels", "threshold", "zero_percentage",
                      "retained_energy_percent", "infinite_psnr", "psnr_db"}


def test_compress2d_deterministic():
    img = bundled_image()
    a = compress.compress2d(img, "sym4", 4, 30.0)
    b = compress.compress2d(img, "sym4", 4, 30.0)
    assert a.zero_percentage == b.zero_percentage
    assert a.psnr_db == b.psnr_db
    assert np.array_equal(a.output, b.output)
