import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wavekit import errors, filters, transform1d as t1

PERIODIC = t1.ExtensionMode.PERIODIC
SYMMETRIC = t1.ExtensionMode.SYMMETRIC

PR_NAMES = ["haar", "db2", "db4", "db10", "sym4", "sym8", "sym25",
            "coif2", "coif5", "bior1.1", "bior2.2", "bior2.4",
            "bior4.4", "bior5.5"]
ORTHO_NAMES = [n for n in PR_NAMES if not n.startswith("bior")]


def haar_level_oracle(x):
    """Direct pairwise form of the single Haar stage."""
    s = 1 / math.sqrt(2)
    a = s * (x[0::2] + x[1::2])
    d = s * (x[0::2] - x[1::2])
    return a, d


def test_haar_level_matches_pairwise_oracle():
    rng = np.random.default_rng(1)
    x = rng.normal(size=32)
    fb = filters.get_filterbank("haar")
    a, d = t1.analyze_level(x, fb)
    oa, od = haar_level_oracle(x)
    assert np.allclose(a, oa, atol=1e-14)
    assert np.allclose(d, od, atol=1e-14)


def test_analysis_is_even_anchored_correlation():
    """a[i] = sum_k dec_lo[k] x[(2i+k) mod n] by definition."""
    rng = np.random.default_rng(2)
    x = rng.normal(size=24)
    fb = filters.get_filterbank("db3")
    a, d = t1.analyze_level(x, fb)
    n = len(x)
    for i in range(n // 2):
        want = math.fsum(fb.dec_lo[k] * x[(2 * i + k) % n]
                         for k in range(len(fb.dec_lo)))
        assert a[i] == pytest.approx(want, abs=1e-12)
        want = math.fsum(fb.dec_hi[k] * x[(2 * i + k + fb.offsets[0]) % n]
                         for k in range(len(fb.dec_hi)))
        assert d[i] == pytest.approx(want, abs=1e-12)


@pytest.mark.parametrize("name", PR_NAMES)
@pytest.mark.parametrize("n", [16, 64, 250])
def test_single_level_periodic_pr(name, n):
    rng = np.random.default_rng(hash((name, n)) % 2 ** 32)
    x = rng.normal(size=n)
    fb = filters.get_filterbank(name)
    a, d = t1.analyze_level(x, fb)
    back = t1.synthesize_level(a, d, fb)
    assert np.max(np.abs(back - x)) < 1e-10


@pytest.mark.parametrize("name", PR_NAMES)
@pytest.mark.parametrize("levels", [1, 2, 3, 4])
def test_cascade_periodic_pr(name, levels):
    rng = np.random.default_rng(levels)
    x = rng.normal(size=256)
    d = t1.decompose(x, name, levels)
    assert np.max(np.abs(t1.reconstruct(d) - x)) < 1e-9


@pytest.mark.parametrize("name", ["db4", "sym8", "bior4.4"])
def test_non_multiple_length_round_trip(name):
    rng = np.random.default_rng(5)
    x = rng.normal(size=1000)  # not a multiple of 16
    d = t1.decompose(x, name, 4)
    assert d.original_length == 1000
    assert d.padded_length == 1008
    back = t1.reconstruct(d)
    assert back.shape == x.shape
    assert np.max(np.abs(back - x)) < 1e-9


@pytest.mark.parametrize("name", ORTHO_NAMES)
def test_parseval_energy(name):
    rng = np.random.default_rng(6)
    x = rng.normal(size=256)
    d = t1.decompose(x, name, 4)
    assert t1.coefficient_energy(d) == pytest.approx(np.sum(x * x), abs=1e-8)


def test_subband_lengths_halve():
    d = t1.decompose(np.ones(256), "db4", 4)
    assert [len(det) for det in d.details] == [128, 64, 32, 16]
    assert len(d.approx) == 16


def test_constant_signal_details_vanish():
    d = t1.decompose(np.full(128, 7.0), "db6", 3)
    for det in d.details:
        assert np.max(np.abs(det)) < 1e-10
    # all energy in approx; value is 7 * 2^(levels/2)
    assert np.allclose(d.approx, 7.0 * 2 ** 1.5, atol=1e-10)


def test_linear_ramp_killed_by_two_moments():
    """db2 has 2 vanishing moments, so a pure ramp yields (interior) zeros."""
    x = np.arange(64.0)
    fb = filters.get_filterbank("db2")
    _, det = t1.analyze_level(x, fb, SYMMETRIC)
    interior = det[2:-2]
    assert np.max(np.abs(interior)) < 1e-9


@pytest.mark.parametrize("name", ["db4", "sym8", "bior2.2", "bior4.4"])
def test_symmetric_extension_interior_pr(name):
    rng = np.random.default_rng(7)
    x = rng.normal(size=200)
    fb = filters.get_filterbank(name)
    a, d = t1.analyze_level(x, fb, SYMMETRIC)
    back = t1.synthesize_level(a, d, fb, SYMMETRIC, out_length=len(x))
    margin = len(fb.dec_lo) + 4
    err = np.abs(back - x)[margin:-margin]
    assert np.max(err) < 1e-9


def test_symmetric_extension_no_boundary_blowup():
    rng = np.random.default_rng(8)
    x = rng.normal(size=200)
    fb = filters.get_filterbank("bior4.4")
    a, d = t1.analyze_level(x, fb, SYMMETRIC)
    back = t1.synthesize_level(a, d, fb, SYMMETRIC, out_length=len(x))
    assert np.max(np.abs(back)) < 10 * np.max(np.abs(x))


def test_shift_by_two_covariance_periodic():
    rng = np.random.default_rng(10)
    x = rng.normal(size=64)
    fb = filters.get_filterbank("db5")
    a, d = t1.analyze_level(x, fb)
    a2, d2 = t1.analyze_level(np.roll(x, 2), fb)
    assert np.allclose(np.roll(a, 1), a2, atol=1e-12)
    assert np.allclose(np.roll(d, 1), d2, atol=1e-12)


def test_errors():
    with pytest.raises(errors.OddLengthPeriodic):
        t1.analyze_level(np.ones(15), filters.get_filterbank("haar"))
    with pytest.raises(errors.SignalTooShort):
        t1.analyze_level(np.ones(1), filters.get_filterbank("haar"))
    with pytest.raises(errors.LengthMismatch):
        t1.synthesize_level(np.ones(4), np.ones(5),
                            filters.get_filterbank("haar"))
    with pytest.raises(errors.TooManyLevels):
        t1.decompose(np.ones(8), "haar", 0)
    with pytest.raises(errors.SignalTooShort):
        t1.decompose(np.ones(1), "haar", 1)


def test_deep_cascade_on_short_signal_still_reconstructs():
    """Wrapped filters keep PR even when subbands get shorter than the taps."""
    rng = np.random.default_rng(11)
    x = rng.normal(size=64)
    d = t1.decompose(x, "db10", 4)  # level-4 subband length 4 < 20 taps
    assert np.max(np.abs(t1.reconstruct(d) - x)) < 1e-9


def test_too_many_levels_when_approx_would_be_empty():
    with pytest.raises(errors.TooManyLevels):
        t1.decompose(np.ones(2), "haar", 2)


def test_malformed_decomposition():
    d = t1.decompose(np.ones(64), "haar", 2)
    d.details = d.details[:1]
    with pytest.raises(errors.MalformedDecomposition):
        t1.reconstruct(d)


def test_pad_to_multiple_wraps_periodically():
    x = np.array([1.0, 2.0, 3.0])
    padded, n0 = t1.pad_to_multiple(x, 4)
    assert n0 == 3
    assert np.array_equal(padded, [1.0, 2.0, 3.0, 1.0])


@given(st.integers(0, 2 ** 31 - 1),
       st.sampled_from(["haar", "db3", "sym5", "bior2.2"]),
       st.integers(1, 3))
@settings(max_examples=40, deadline=None)
def test_property_round_trip(seed, name, levels):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(2 ** levels, 300))
    x = rng.normal(size=n)
    d = t1.decompose(x, name, levels)
    assert np.max(np.abs(t1.reconstruct(d) - x)) < 1e-8


@given(st.integers(0, 2 ** 31 - 1))
@settings(max_examples=25, deadline=None)
def test_property_linearity(seed):
    rng = np.random.default_rng(seed)
    x, y = rng.normal(size=64), rng.normal(size=64)
    fb = filters.get_filterbank("db4")
    ax, dx = t1.analyze_level(x, fb)
    ay, dy = t1.analyze_level(y, fb)
    az, dz = t1.analyze_level(3.0 * x - y, fb)
    assert np.allclose(3.0 * ax - ay, az, atol=1e-10)
    assert np.allclose(3.0 * dx - dy, dz, atol=1e-10)
