import json
import struct

import numpy as np
import pytest

import wavekit
from wavekit import fileio
from wavekit.cli import main


@pytest.fixture
def wav_file(tmp_path):
    rng = np.random.default_rng(0)
    t = np.arange(2048)
    x = 0.4 * np.sin(2 * np.pi * 440 * t / 8000) \
        + 0.1 * rng.normal(size=t.size)
    pcm = np.clip(np.floor(x * 32768 + 0.5), -32768, 32767) \
        .astype("<i2").tobytes()
    hdr = struct.pack("<4sI4s4sIHHIIHH4sI",
                      b"RIFF", 36 + len(pcm), b"WAVE",
                      b"fmt ", 16, 1, 1, 8000, 16000, 2, 16,
                      b"data", len(pcm))
    path = tmp_path / "tone.wav"
    path.write_bytes(hdr + pcm)
    return path


@pytest.fixture
def pgm_file(tmp_path):
    path = tmp_path / "print.pgm"
    path.write_bytes(fileio.write_pgm(wavekit.bundled_fingerprint()))
    return path


def test_analyze1d_outputs(tmp_path, wav_file):
    out = tmp_path / "out"
    assert main(["analyze1d", str(wav_file), "--wavelet", "db4",
                 "--levels", "3", "--out", str(out)]) == 0
    assert (out / "tone_db4_coefficients.csv").exists()
    assert (out / "tone_db4_reconstruction.wav").exists()
    report = json.loads((out / "tone_db4_report.json").read_text())
    assert report["wavelet"] == "db4" and report["levels"] == 3
    # reconstruction differs from the input only by 16-bit requantization
    assert report["mse"] < 1e-9


def test_analyze1d_cwt_route(tmp_path, wav_file):
    out = tmp_path / "out"
    assert main(["analyze1d", str(wav_file), "--wavelet", "morlet",
                 "--out", str(out)]) == 0
    csv = (out / "tone_morlet_coefficients.csv").read_text().splitlines()
    assert csv[0] == "level,band,index,value"
    assert (out / "tone_morlet_report.json").exists()


def test_analyze2d_outputs(tmp_path, pgm_file):
    out = tmp_path / "out"
    assert main(["analyze2d", str(pgm_file), "--wavelet", "haar",
                 "--levels", "2", "--out", str(out)]) == 0
    for suffix in ("mosaic.pgm", "reconstruction.pgm",
                   "coefficients.csv", "report.json"):
        assert (out / f"print_haar_{suffix}").exists()
    report = json.loads((out / "print_haar_report.json").read_text())
    assert report["infinite_snr"] or report["mse"] < 0.5


def test_compress_single(tmp_path, pgm_file):
    out = tmp_path / "out"
    assert main(["compress", str(pgm_file), "--wavelet", "db4",
                 "--threshold", "30", "--out", str(out)]) == 0
    report = json.loads((out / "print_db4_compression.json").read_text())
    assert 0 < report["zero_percentage"] < 100
    assert (out / "print_db4_compressed.pgm").exists()


def test_compress_sweep_and_determinism(tmp_path, pgm_file):
    out1, out2 = tmp_path / "a", tmp_path / "b"
    argv = ["compress", str(pgm_file), "--sweep-wavelets", "haar,db2,bior2.4",
            "--threshold", "30"]
    assert main(argv + ["--out", str(out1)]) == 0
    assert main(argv + ["--out", str(out2)]) == 0
    a = (out1 / "print_compression_sweep.csv").read_bytes()
    b = (out2 / "print_compression_sweep.csv").read_bytes()
    assert a == b
    lines = a.decode().splitlines()
    assert lines[0] == "wavelet,threshold,levels,zero_percentage,psnr_db"
    assert [l.split(",")[0] for l in lines[1:]] == ["haar", "db2", "bior2.4"]


def test_table_modes(tmp_path, pgm_file):
    out = tmp_path / "out"
    assert main(["table", str(pgm_file), "--sweep-wavelets", "haar,db4",
                 "--mode", "compression", "--format", "csv",
                 "--out", str(out)]) == 0
    lines = (out / "print_table.csv").read_text().splitlines()
    assert lines[0] == "wavelet,compression_percent"
    assert len(lines) == 3
    assert main(["table", str(pgm_file), "--sweep-wavelets", "haar",
                 "--format", "md", "--out", str(out)]) == 0
    md = (out / "print_table.md").read_text()
    assert md.startswith("| wavelet |")
    assert main(["table", str(pgm_file), "--sweep-wavelets", "haar",
                 "--format", "json", "--out", str(out)]) == 0
    assert json.loads((out / "print_table.json").read_text())["rows"]


def test_exit_code_unsupported_wavelet(tmp_path, pgm_file, capsys):
    assert main(["compress", str(pgm_file), "--wavelet", "db99",
                 "--out", str(tmp_path / "o")]) == 3
    assert "error:" in capsys.readouterr().err


def test_exit_code_bad_input(tmp_path, capsys):
    bad = tmp_path / "bad.pgm"
    bad.write_bytes(b"not a pgm")
    assert main(["compress", str(bad), "--out", str(tmp_path / "o")]) == 2
    missing = tmp_path / "missing.pgm"
    assert main(["compress", str(missing), "--out", str(tmp_path / "o")]) == 2
    assert "error:" in capsys.readouterr().err


def test_exit_code_bad_levels(tmp_path, pgm_file):
    assert main(["analyze2d", str(pgm_file), "--levels", "9",
                 "--out", str(tmp_path / "o")]) == 3


def test_entry_point_installed():
    import shutil
    assert shutil.which("wavekit") is not None
