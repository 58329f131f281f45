import numpy as np
import pytest

from wavekit import cwt, errors


def morlet(w0=5.0):
    return cwt.ContinuousWaveletId("morlet", center_frequency=w0)


def test_zero_signal_gives_zero_bands():
    d = cwt.dyadic_cwt_analyze(np.zeros(128), morlet(), 4)
    assert all(np.max(np.abs(b)) == 0.0 for b in d.bands)
    assert np.max(np.abs(d.residual_lowpass)) == 0.0


def test_shannon_partition_and_parseval():
    rng = np.random.default_rng(3)
    x = rng.normal(size=256)
    d = cwt.dyadic_cwt_analyze(x, cwt.ContinuousWaveletId("shannon"), 4)
    total = sum(np.sum(b * b) for b in d.bands) \
        + np.sum(d.residual_lowpass ** 2)
    assert total == pytest.approx(np.sum(x * x), abs=1e-9)
    # band spectra are disjoint
    specs = [np.abs(np.fft.fft(b)) > 1e-9 for b in d.bands]
    for i in range(len(specs)):
        for j in range(i + 1, len(specs)):
            assert not np.any(specs[i] & specs[j])


def test_shannon_exact_round_trip():
    rng = np.random.default_rng(4)
    x = rng.normal(size=256)
    d = cwt.dyadic_cwt_analyze(x, cwt.ContinuousWaveletId("shannon"), 4)
    back = cwt.dyadic_cwt_synthesize(d)
    assert np.max(np.abs(back - x)) < 1e-9


@pytest.mark.parametrize("j", [1, 2, 3])
def test_morlet_tone_localization(j):
    n = 1024
    w0 = 5.0
    freq = w0 / 2 ** j
    x = np.cos(freq * np.arange(n))
    d = cwt.dyadic_cwt_analyze(x, morlet(w0), 4)
    assert int(np.argmax(cwt.band_energies(d))) == j


def test_morlet_in_band_chirp_round_trip():
    n = 512
    t = np.arange(n)
    # sweep within the well-covered part of the frame
    phase = 0.45 * t + 0.8 * np.sin(2 * np.pi * t / n) * 40
    x = np.cos(phase)
    d = cwt.dyadic_cwt_analyze(x, morlet(), 4)
    back = cwt.dyadic_cwt_synthesize(d)
    rel = np.linalg.norm(back - x) / np.linalg.norm(x)
    assert rel < 0.01


def test_cauchy_round_trip_in_band():
    n = 512
    x = np.cos(0.9 * np.arange(n))
    d = cwt.dyadic_cwt_analyze(x, cwt.ContinuousWaveletId("cauchy", order=1), 4)
    back = cwt.dyadic_cwt_synthesize(d)
    rel = np.linalg.norm(back - x) / np.linalg.norm(x)
    assert rel < 0.01


def test_linearity_and_shift_covariance():
    rng = np.random.default_rng(9)
    x, y = rng.normal(size=256), rng.normal(size=256)
    w = morlet()
    dx = cwt.dyadic_cwt_analyze(x, w, 4)
    dy = cwt.dyadic_cwt_analyze(y, w, 4)
    dz = cwt.dyadic_cwt_analyze(2.0 * x - 3.0 * y, w, 4)
    for bx, by, bz in zip(dx.bands, dy.bands, dz.bands):
        assert np.max(np.abs(2.0 * bx - 3.0 * by - bz)) < 1e-9
    shift = 17
    ds = cwt.dyadic_cwt_analyze(np.roll(x, shift), w, 4)
    for bx, bs in zip(dx.bands, ds.bands):
        assert np.max(np.abs(np.roll(bx, shift) - bs)) < 1e-9


def test_all_zero_bands_synthesize_to_zero():
    d = cwt.dyadic_cwt_analyze(np.zeros(64), cwt.ContinuousWaveletId("shannon"), 3)
    assert np.max(np.abs(cwt.dyadic_cwt_synthesize(d))) == 0.0


def test_too_short_signal():
    with pytest.raises(errors.SignalTooShort):
        cwt.dyadic_cwt_analyze(np.ones(8), morlet(), 4)


def test_parameter_validation():
    with pytest.raises(ValueError):
        cwt.ContinuousWaveletId("morlet", center_frequency=3.0)
    with pytest.raises(ValueError):
        cwt.ContinuousWaveletId("cauchy", order=0)
    with pytest.raises(ValueError):
        cwt.ContinuousWaveletId("meyer")
