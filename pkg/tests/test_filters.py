import math

import numpy as np
import pytest

from wavekit import errors, filters

ALL_NAMES = filters.supported_wavelets()
ORTHO_NAMES = [n for n in ALL_NAMES if not n.startswith("bior")]
BIOR_NAMES = [n for n in ALL_NAMES if n.startswith("bior")]


def test_supported_name_inventory():
    expected = (["haar"]
                + [f"db{n}" for n in range(1, 11)]
                + [f"sym{n}" for n in range(2, 26)]
                + [f"coif{n}" for n in range(1, 6)]
                + ["bior1.1", "bior2.2", "bior2.4", "bior4.4", "bior5.5"])
    assert sorted(ALL_NAMES) == sorted(expected)


@pytest.mark.parametrize("text,family,order", [
    ("haar", "haar", None),
    ("db4", "db", 4),
    ("DB4", "db", 4),
    (" sym8 ", "sym", 8),
    ("coif2", "coif", 2),
    ("bior4.4", "bior", (4, 4)),
])
def test_parse_accepts(text, family, order):
    wid = filters.WaveletId.parse(text)
    assert (wid.family, wid.order) == (family, order)


@pytest.mark.parametrize("text", [
    "", "db", "db0", "db11", "sym1", "sym26", "coif0", "coif6",
    "bior3.3", "bior4", "db4.4", "haar2", "meyer", "dmey",
])
def test_parse_rejects(text):
    with pytest.raises(errors.UnsupportedWavelet):
        filters.WaveletId.parse(text)


def test_haar_bank_exact():
    fb = filters.get_filterbank("haar")
    s = 1 / math.sqrt(2)
    assert fb.dec_lo == pytest.approx((s, s), abs=1e-15)
    assert fb.dec_hi == pytest.approx((s, -s), abs=1e-15)
    assert fb.rec_lo == pytest.approx((s, s), abs=1e-15)
    assert fb.rec_hi == pytest.approx((-s, s), abs=1e-15)
    assert fb.orthogonal and fb.offsets == (0, 0, 0)


def test_haar_is_db1():
    assert filters.get_filterbank("db1").dec_lo \
        == filters.get_filterbank("haar").dec_lo


def test_qmf_haar_example():
    s = 1 / math.sqrt(2)
    assert filters.qmf([s, s]) == pytest.approx([s, -s])


def test_qmf_definition_matches_naive():
    rng = np.random.default_rng(0)
    h = rng.normal(size=8)
    g = filters.qmf(h)
    for k in range(8):
        assert g[k] == pytest.approx((-1.0) ** k * h[7 - k])


@pytest.mark.parametrize("name", ALL_NAMES)
def test_filter_lengths(name):
    fb = filters.get_filterbank(name)
    wid = fb.id
    if wid.family in ("haar",):
        assert len(fb.dec_lo) == 2
    elif wid.family in ("db", "sym"):
        assert len(fb.dec_lo) == 2 * wid.order
    elif wid.family == "coif":
        assert len(fb.dec_lo) == 6 * wid.order
    if fb.orthogonal:
        for taps in (fb.dec_lo, fb.dec_hi, fb.rec_lo, fb.rec_hi):
            assert len(taps) % 2 == 0


@pytest.mark.parametrize("name", ALL_NAMES)
def test_lowpass_dc_gain(name):
    fb = filters.get_filterbank(name)
    assert math.fsum(fb.dec_lo) == pytest.approx(math.sqrt(2), abs=1e-12)
    assert math.fsum(fb.rec_lo) == pytest.approx(math.sqrt(2), abs=1e-12)
    assert math.fsum(fb.dec_hi) == pytest.approx(0.0, abs=1e-12)
    assert math.fsum(fb.rec_hi) == pytest.approx(0.0, abs=1e-12)


@pytest.mark.parametrize("name", ORTHO_NAMES)
def test_orthonormality(name):
    fb = filters.get_filterbank(name)
    assert filters.check_orthonormality(fb) < 1e-10
    assert fb.offsets == (0, 0, 0)
    assert np.allclose(fb.dec_hi, filters.qmf(fb.dec_lo), atol=1e-15)
    assert np.allclose(fb.rec_lo, fb.dec_lo[::-1], atol=1e-15)
    assert np.allclose(fb.rec_hi, fb.dec_hi[::-1], atol=1e-15)


def test_orthonormality_rejects_biorthogonal():
    with pytest.raises(errors.NotOrthogonalFamily):
        filters.check_orthonormality(filters.get_filterbank("bior4.4"))


@pytest.mark.parametrize("name", BIOR_NAMES)
def test_biorthogonal_duality(name):
    """rec_lo and dec_lo form a dual pair: <rec_lo, dec_lo[.-2m]> = delta."""
    fb = filters.get_filterbank(name)
    assert not fb.orthogonal
    h = np.asarray(fb.dec_lo)
    ht = np.asarray(fb.rec_lo)
    full = np.convolve(h, ht[::-1])
    center = np.argmax(np.abs(full))
    assert full[center] == pytest.approx(1.0, abs=1e-10)
    picks = np.concatenate([full[center::-2][1:], full[center::2][1:]])
    if picks.size:  # bior1.1 is too short to have any even shifts
        assert np.max(np.abs(picks)) < 1e-10


def expected_moments(wid):
    if wid.family == "haar":
        return 1
    if wid.family in ("db", "sym"):
        return wid.order
    if wid.family == "coif":
        return 2 * wid.order
    return wid.order[0]  # bior: analysis-side count of the (N, M) pair


@pytest.mark.parametrize("name", ALL_NAMES)
def test_vanishing_moment_counts(name):
    fb = filters.get_filterbank(name)
    want = expected_moments(fb.id)
    L = len(fb.dec_hi)
    c = (L - 1) / 2
    # float64 taps cannot resolve high-order moments absolutely: rounding
    # noise grows like c^m while staying ~9 orders below the first true
    # moment, so scale the tolerance to the maximum possible moment size
    tol = max(1e-8, 1e-14 * c ** want * sum(abs(v) for v in fb.dec_hi))
    got = filters.count_vanishing_moments(fb.dec_hi, tol)
    assert got == want, f"{name}: counted {got}, expected {want} (tol={tol:g})"


@pytest.mark.parametrize("name", ["db2", "db4", "db6", "db8", "db10",
                                  "sym4", "sym8", "coif2"])
def test_vanishing_moments_strict_tolerance(name):
    fb = filters.get_filterbank(name)
    assert filters.count_vanishing_moments(fb.dec_hi, 1e-8) \
        == expected_moments(fb.id)


def test_moment_counter_on_constructed_filter():
    # g annihilates constants and linears but not quadratics
    g = np.array([1.0, -3.0, 3.0, -1.0])
    assert filters.count_vanishing_moments(g, 1e-12) == 3
    g2 = np.array([1.0, -1.0])
    assert filters.count_vanishing_moments(g2, 1e-12) == 1


@pytest.mark.parametrize("name", ["sym4", "sym8", "sym12"])
def test_symlet_more_symmetric_than_daubechies(name):
    """Least-asymmetric selection: symlets beat db at equal order."""
    order = int(name[3:])
    def asym(taps):
        h = np.asarray(taps)
        return float(np.sum((h - h[::-1]) ** 2))
    sym = asym(filters.get_filterbank(name).dec_lo)
    db = asym(filters.get_filterbank(f"db{order}").dec_lo) if order <= 10 \
        else None
    if db is not None:
        assert sym < db


def test_coiflet_scaling_moments():
    """Coiflets also kill centered moments of the lowpass (orders 1..2N-1)."""
    for order in (1, 2, 3):
        fb = filters.get_filterbank(f"coif{order}")
        h = np.asarray(fb.dec_lo)
        k = np.arange(len(h))
        # the construction centers moments at index 2N, possibly mirrored
        def worst(c):
            return max(abs(np.sum((k - c) ** m * h))
                       for m in range(1, 2 * order))
        c = 2 * order
        assert min(worst(c), worst(len(h) - 1 - c)) < 1e-6, order


def test_db4_known_coefficients():
    """Spot check against the published minimum-phase D8 tap values."""
    fb = filters.get_filterbank("db4")
    known = sorted(abs(v) for v in (
        0.23037781330885523, 0.7148465705525415, 0.6308807679295904,
        -0.02798376941698385, -0.18703481171888114, 0.030841381835986965,
        0.032883011666982945, -0.010597401784997278))
    got = sorted(abs(v) for v in fb.dec_lo)
    assert got == pytest.approx(known, abs=1e-12)


def test_bior22_known_coefficients():
    """CDF(2,2) 5/3 pair, normalized so each lowpass sums to sqrt(2)."""
    fb = filters.get_filterbank("bior2.2")
    s = math.sqrt(2)
    dec = sorted(fb.dec_lo)
    assert dec == pytest.approx(sorted([-0.125 * s, 0.25 * s, 0.75 * s,
                                        0.25 * s, -0.125 * s]), abs=1e-12)
    rec = sorted(fb.rec_lo)
    assert rec == pytest.approx(sorted([0.25 * s, 0.5 * s, 0.25 * s]),
                                abs=1e-12)


def test_get_filterbank_accepts_id_and_str():
    a = filters.get_filterbank("sym5")
    b = filters.get_filterbank(filters.WaveletId("sym", 5))
    assert a == b
