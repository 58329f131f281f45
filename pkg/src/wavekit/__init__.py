"""wavekit: multiresolution filter-bank analysis for 1D signals and images.

Cascaded wavelet decomposition/reconstruction (Haar, Daubechies, symlets,
coiflets, biorthogonal splines and 9/7), FFT-domain Morlet/Cauchy/Shannon
octave analysis, DCT/FFT baselines, quality metrics, and hard-threshold
image compression, with a file-in/file-out CLI.
"""

from importlib import resources

import numpy as np

from .compress import (CompressionReport, ThresholdPolicy, compress2d,
                       hard_threshold, zero_percentage)
from .cwt import (ContinuousWaveletId, DyadicCwtDecomposition,
                  dyadic_cwt_analyze, dyadic_cwt_synthesize)
from .errors import WavekitError
from .filters import (FilterBank, WaveletId, check_orthonormality,
                      count_vanishing_moments, get_filterbank, qmf,
                      supported_wavelets)
from .metrics import (QualityReport, entropy_bits, histogram_mean, mse,
                      psnr_db, quality_report, snr_db)
from .spectral import (SpectralDecomposition, dct_forward, dct_inverse,
                       decompose_spectral, fft_forward, fft_inverse,
                       spectral_stage_split)
from .transform1d import (Decomposition1D, ExtensionMode, analyze_level,
                          decompose, reconstruct, synthesize_level)
from .transform2d import (Decomposition2D, SubbandSet, analyze_level2d,
                          decompose2d, reconstruct2d, render_mosaic,
                          synthesize_level2d)

__version__ = "0.1.0"


def bundled_fingerprint() -> np.ndarray:
    """The bundled 256x256 fingerprint-style test image as uint8."""
    from .fileio import read_pgm
    data = resources.files("wavekit").joinpath("data/fingerprint.pgm")
    return read_pgm(data.read_bytes()).pixels
