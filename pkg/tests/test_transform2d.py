import numpy as np
import pytest

from wavekit import errors, filters, transform1d as t1, transform2d as t2

PR_NAMES = ["haar", "db2", "db4", "sym4", "coif2", "bior2.4", "bior4.4"]


def test_level2d_matches_separable_1d_oracle():
    """Rows-then-columns with the 1D stage, written out longhand."""
    rng = np.random.default_rng(0)
    img = rng.normal(size=(16, 12))
    fb = filters.get_filterbank("db2")
    low = np.array([t1.analyze_level(r, fb)[0] for r in img])
    high = np.array([t1.analyze_level(r, fb)[1] for r in img])
    ll = np.array([t1.analyze_level(c, fb)[0] for c in low.T]).T
    lh = np.array([t1.analyze_level(c, fb)[1] for c in low.T]).T
    hl = np.array([t1.analyze_level(c, fb)[0] for c in high.T]).T
    hh = np.array([t1.analyze_level(c, fb)[1] for c in high.T]).T
    bands = t2.analyze_level2d(img, fb)
    assert np.allclose(bands.ll, ll, atol=1e-12)
    assert np.allclose(bands.lh, lh, atol=1e-12)
    assert np.allclose(bands.hl, hl, atol=1e-12)
    assert np.allclose(bands.hh, hh, atol=1e-12)


@pytest.mark.parametrize("name", PR_NAMES)
def test_single_level_pr(name):
    rng = np.random.default_rng(1)
    img = rng.normal(size=(32, 48))
    fb = filters.get_filterbank(name)
    bands = t2.analyze_level2d(img, fb)
    back = t2.synthesize_level2d(bands, fb)
    assert np.max(np.abs(back - img)) < 1e-10


@pytest.mark.parametrize("name", PR_NAMES)
@pytest.mark.parametrize("levels", [2, 3, 4])
def test_cascade_pr(name, levels):
    rng = np.random.default_rng(levels)
    img = rng.normal(size=(64, 64))
    d = t2.decompose2d(img, name, levels)
    assert np.max(np.abs(t2.reconstruct2d(d) - img)) < 1e-9


def test_rectangular_and_odd_dims():
    rng = np.random.default_rng(4)
    img = rng.normal(size=(100, 70))
    d = t2.decompose2d(img, "db4", 3)
    assert d.original_dims == (100, 70)
    assert d.padded_dims == (104, 72)
    back = t2.reconstruct2d(d)
    assert back.shape == (100, 70)
    assert np.max(np.abs(back - img)) < 1e-9


def test_subband_shapes():
    d = t2.decompose2d(np.ones((64, 64)), "haar", 3)
    assert d.ll_final.shape == (8, 8)
    shapes = [d.detail_levels[j]["lh"].shape for j in range(3)]
    assert shapes == [(32, 32), (16, 16), (8, 8)]


def test_parseval_orthogonal_2d():
    rng = np.random.default_rng(5)
    img = rng.normal(size=(64, 64))
    for name in ("haar", "db4", "sym4", "coif2"):
        d = t2.decompose2d(img, name, 4)
        energy = float(np.sum(d.ll_final ** 2))
        for level in d.detail_levels:
            for k in ("lh", "hl", "hh"):
                energy += float(np.sum(level[k] ** 2))
        assert energy == pytest.approx(float(np.sum(img ** 2)), abs=1e-8)


def test_band_orientation_contract():
    """Horizontal stripes vary along columns only -> energy lands in lh."""
    img = np.tile(np.array([0.0, 255.0] * 32), (64, 1)).T  # stripes along rows
    fb = filters.get_filterbank("haar")
    bands = t2.analyze_level2d(img, fb)
    e = {k: float(np.sum(getattr(bands, k) ** 2)) for k in ("lh", "hl", "hh")}
    assert e["lh"] > 1e3 and e["hl"] < 1e-10 and e["hh"] < 1e-10
    # and the transpose lands in hl
    bands_t = t2.analyze_level2d(img.T, fb)
    assert float(np.sum(bands_t.hl ** 2)) > 1e3
    assert float(np.sum(bands_t.lh ** 2)) < 1e-10


def test_constant_image_detail_free():
    d = t2.decompose2d(np.full((32, 32), 9.0), "db3", 2)
    for level in d.detail_levels:
        for k in ("lh", "hl", "hh"):
            assert np.max(np.abs(level[k])) < 1e-10
    assert np.allclose(d.ll_final, 9.0 * 2 ** 2, atol=1e-10)


def test_symmetric_extension_2d_interior():
    rng = np.random.default_rng(6)
    img = rng.normal(size=(96, 96))
    d = t2.decompose2d(img, "bior4.4", 1, t1.ExtensionMode.SYMMETRIC)
    back = t2.reconstruct2d(d)
    m = 16
    assert np.max(np.abs(back - img)[m:-m, m:-m]) < 1e-9


def test_mosaic_layout_and_range():
    rng = np.random.default_rng(7)
    img = rng.normal(size=(64, 64)) * 60 + 128
    d = t2.decompose2d(img, "haar", 2)
    mosaic = t2.render_mosaic(d)
    assert mosaic.shape == (64, 64)
    assert mosaic.dtype == np.uint8
    # top-left quadrant of the top-left quadrant is the rescaled ll
    ll = mosaic[:16, :16]
    band = d.ll_final
    lo, hi = band.min(), band.max()
    expect = np.clip(np.rint((band - lo) * 255.0 / (hi - lo)), 0, 255)
    assert np.array_equal(ll, expect.astype(np.uint8))


def test_mosaic_constant_band_mid_gray():
    d = t2.decompose2d(np.full((32, 32), 50.0), "haar", 1)
    mosaic = t2.render_mosaic(d)
    # detail bands are constant zero -> mapped to 128
    assert np.all(mosaic[:16, 16:] == 128)
    assert np.all(mosaic[16:, :16] == 128)
    assert np.all(mosaic[16:, 16:] == 128)


def test_mosaic_global_normalization():
    rng = np.random.default_rng(8)
    img = rng.normal(size=(32, 32))
    d = t2.decompose2d(img, "haar", 1)
    mosaic = t2.render_mosaic(d, normalization="global")
    assert mosaic.shape == (32, 32)
    with pytest.raises(ValueError):
        t2.render_mosaic(d, normalization="bogus")


def test_errors_2d():
    with pytest.raises(errors.ImageTooSmall):
        t2.decompose2d(np.ones((1, 16)), "haar", 1)
    with pytest.raises(errors.ImageTooSmall):
        t2.decompose2d(np.ones(16), "haar", 1)
    with pytest.raises(errors.TooManyLevels):
        t2.decompose2d(np.ones((2, 2)), "haar", 2)
    fb = filters.get_filterbank("haar")
    with pytest.raises(errors.DimensionMismatch):
        t2.synthesize_level2d(
            t2.SubbandSet(ll=np.ones((4, 4)), lh=np.ones((4, 4)),
                          hl=np.ones((4, 4)), hh=np.ones((4, 3))), fb)
    d = t2.decompose2d(np.ones((16, 16)), "haar", 2)
    d.detail_levels = d.detail_levels[:1]
    with pytest.raises(errors.MalformedDecomposition):
        t2.reconstruct2d(d)
