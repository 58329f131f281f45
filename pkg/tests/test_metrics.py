import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wavekit import errors, metrics


def naive_mse(ref, proc):
    total = 0.0
    for r, p in zip(np.ravel(ref), np.ravel(proc)):
        total += (r - p) ** 2
    return total / np.size(ref)


def naive_snr(ref, proc):
    sig = sum(r * r for r in np.ravel(ref))
    noise = sum((r - p) ** 2 for r, p in zip(np.ravel(ref), np.ravel(proc)))
    return 10 * math.log10(sig / noise)


def naive_entropy(data, bins, lo, hi):
    counts = [0] * bins
    width = (hi - lo) / bins
    for v in np.ravel(data):
        v = min(max(v, lo), hi)
        idx = min(int((v - lo) / width), bins - 1)
        counts[idx] += 1
    n = sum(counts)
    return -sum(c / n * math.log2(c / n) for c in counts if c)


def test_mse_identity_and_example():
    assert metrics.mse([1.0, 2.0, 3.0], [1.0, 2.0, 3.0]) == 0.0
    assert metrics.mse([0.0, 0.0], [3.0, 4.0]) == pytest.approx(12.5)


def test_mse_shape_mismatch():
    with pytest.raises(errors.ShapeMismatch):
        metrics.mse([1.0, 2.0], [1.0, 2.0, 3.0])


def test_snr_exact_ratio():
    ref = np.array([10.0, 0.0])
    proc = ref - np.array([1.0, 0.0])
    assert metrics.snr_db(ref, proc) == pytest.approx(20.0)


def test_snr_infinite_on_equal():
    assert math.isinf(metrics.snr_db([1.0, 2.0], [1.0, 2.0]))


def test_snr_zero_reference():
    with pytest.raises(errors.ZeroReference):
        metrics.snr_db([0.0, 0.0], [1.0, 0.0])


def test_psnr_zero_db_and_8bit():
    ref = np.zeros(4)
    proc = np.full(4, 255.0)
    assert metrics.psnr_db(ref, proc, 255.0) == pytest.approx(0.0)
    # mse exactly 1 on an 8-bit pair
    ref = np.arange(16.0)
    assert metrics.psnr_db(ref, ref + 1.0, 255.0) == pytest.approx(
        10 * math.log10(65025), abs=1e-9)
    assert math.isinf(metrics.psnr_db(ref, ref, 255.0))


def test_entropy_degenerate_and_uniform():
    assert metrics.entropy_bits(np.full(100, 3.0), bins=256) == 0.0
    data = np.repeat(np.arange(256), 4) + 0.5
    assert metrics.entropy_bits(data, bins=256, value_range=(0, 256)) \
        == pytest.approx(8.0, abs=1e-12)


def test_entropy_two_bins():
    data = np.array([0.0] * 25 + [1.0] * 75)
    got = metrics.entropy_bits(data, bins=2, value_range=(0.0, 1.0))
    assert got == pytest.approx(0.811278, abs=1e-6)


def test_histogram_mean():
    assert metrics.histogram_mean(np.arange(256.0), bins=256,
                                  value_range=(0, 256)) == 1.0
    # independent of values given N and bins
    a = metrics.histogram_mean(np.zeros(512), bins=256, value_range=(0, 1))
    b = metrics.histogram_mean(np.random.default_rng(0).normal(size=512),
                               bins=256, value_range=(-3, 3))
    assert a == b == 2.0


def test_empty_data():
    with pytest.raises(errors.EmptyData):
        metrics.entropy_bits(np.array([]))


@pytest.mark.parametrize("seed", range(10))
def test_metrics_match_naive_oracles(seed):
    rng = np.random.default_rng(seed)
    ref = rng.normal(size=257)
    proc = ref + rng.normal(scale=0.1, size=257)
    assert metrics.mse(ref, proc) == pytest.approx(naive_mse(ref, proc),
                                                   abs=1e-12)
    assert metrics.snr_db(ref, proc) == pytest.approx(naive_snr(ref, proc),
                                                      abs=1e-9)
    got = metrics.entropy_bits(ref, bins=64, value_range=(-3, 3))
    assert got == pytest.approx(naive_entropy(ref, 64, -3, 3), abs=1e-9)


@given(st.lists(st.floats(-1e6, 1e6), min_size=2, max_size=64),
       st.integers(2, 64))
@settings(max_examples=50, deadline=None)
def test_entropy_bounded_and_permutation_invariant(values, bins):
    data = np.array(values)
    ent = metrics.entropy_bits(data, bins=bins)
    assert -1e-12 <= ent <= math.log2(bins) + 1e-12
    perm = data[::-1].copy()
    assert metrics.entropy_bits(perm, bins=bins) == pytest.approx(ent,
                                                                  abs=1e-12)


@given(st.lists(st.floats(-100, 100), min_size=1, max_size=32))
@settings(max_examples=50, deadline=None)
def test_mse_symmetry_nonnegativity(values):
    ref = np.array(values)
    proc = ref[::-1].copy()
    assert metrics.mse(ref, proc) >= 0.0
    assert metrics.mse(ref, proc) == pytest.approx(metrics.mse(proc, ref),
                                                   rel=1e-12, abs=1e-300)


def test_snr_psnr_decrease_with_mse():
    ref = np.ones(64) * 100
    prev_snr, prev_psnr = math.inf, math.inf
    for scale in (0.1, 0.5, 1.0, 5.0):
        proc = ref + scale
        s, p = metrics.snr_db(ref, proc), metrics.psnr_db(ref, proc, 255.0)
        assert s < prev_snr and p < prev_psnr
        prev_snr, prev_psnr = s, p


def test_quality_report_identical_pair():
    data = np.arange(64.0)
    rep = metrics.quality_report(data, data.copy())
    assert rep.mse == 0.0
    assert rep.infinite_snr
    d = rep.to_dict()
    assert d["infinite_snr"] is True
    assert "snr_db" not in d and "psnr_db" not in d
    assert d["entropy_bits"] == pytest.approx(
        metrics.entropy_bits(data, 256, (0.0, 63.0)))
