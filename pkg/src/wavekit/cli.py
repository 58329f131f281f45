"""File-in/file-out command line front end.

Subcommands: analyze1d (WAV), analyze2d (PGM), compress (PGM), table.
Defaults encode the canonical experiment: 4 levels, hard threshold 30.
Exit codes: 0 ok, 2 I/O or parse failure, 3 unsupported wavelet.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

import numpy as np

from . import cwt, fileio, metrics
from .compress import ThresholdPolicy, compress2d
from .errors import UnsupportedWavelet, WavekitError
from .filters import WaveletId
from .transform1d import ExtensionMode, decompose, reconstruct
from .transform2d import decompose2d, reconstruct2d, render_mosaic

CWT_NAMES = ("morlet", "cauchy", "shannon")


def _add_common(p):
    p.add_argument("--wavelet", default="haar")
    p.add_argument("--levels", type=int, default=4)
    p.add_argument("--extension", choices=["periodic", "symmetric"],
                   default="periodic")
    p.add_argument("--out", default=".", help="output directory")
    p.add_argument("--bins", type=int, default=256, help="entropy bins")


def build_parser():
    ap = argparse.ArgumentParser(prog="wavekit")
    sub = ap.add_subparsers(dest="command", required=True)

    p1 = sub.add_parser("analyze1d", help="decompose/reconstruct a WAV file")
    p1.add_argument("input")
    _add_common(p1)

    p2 = sub.add_parser("analyze2d", help="decompose/reconstruct a PGM image")
    p2.add_argument("input")
    _add_common(p2)

    pc = sub.add_parser("compress", help="hard-threshold compress a PGM image")
    pc.add_argument("input")
    _add_common(pc)
    pc.add_argument("--threshold", type=float, default=30.0)
    pc.add_argument("--policy", choices=["details", "all"], default="details")
    pc.add_argument("--sweep-wavelets", default=None,
                    help="comma-separated list; emits a sweep CSV")

    pt = sub.add_parser("table", help="comparison table over several wavelets")
    pt.add_argument("input")
    _add_common(pt)
    pt.add_argument("--threshold", type=float, default=30.0)
    pt.add_argument("--policy", choices=["details", "all"], default="details")
    pt.add_argument("--sweep-wavelets", default="",
                    help="comma-separated wavelet list (row order)")
    pt.add_argument("--mode", choices=["quality", "compression"],
                    default="quality")
    pt.add_argument("--format", choices=["json", "csv", "md"], default="md")
    return ap


def _ext(args):
    return ExtensionMode(args.extension)


def _outdir(args) -> Path:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    return out


def _check_levels(levels):
    if not 1 <= levels <= 8:
        raise UnsupportedWavelet(f"levels must be in 1..8, got {levels}")


def _is_cwt(name: str) -> bool:
    return name.strip().lower() in CWT_NAMES


def cmd_analyze1d(args) -> int:
    _check_levels(args.levels)
    out = _outdir(args)
    buf = fileio.read_wav(Path(args.input).read_bytes())
    stem = Path(args.input).stem
    name = args.wavelet.strip().lower()
    if _is_cwt(name):
        wid = cwt.ContinuousWaveletId.parse(name)
        dec = cwt.dyadic_cwt_analyze(buf.samples, wid, args.levels)
        recon = cwt.dyadic_cwt_synthesize(dec)
        csv_lines = ["level,band,index,value"]
        for j, band in enumerate(dec.bands, start=1):
            csv_lines.extend(f"{j},detail,{i},{v:.17g}"
                             for i, v in enumerate(band))
        csv_lines.extend(f"{dec.levels},approx,{i},{v:.17g}"
                         for i, v in enumerate(dec.residual_lowpass))
        (out / f"{stem}_{name}_coefficients.csv").write_text(
            "\n".join(csv_lines) + "\n")
    else:
        wid = WaveletId.parse(name)
        dec = decompose(buf.samples, wid, args.levels, _ext(args))
        recon = reconstruct(dec)
        fileio.write_coeff_csv(dec, out / f"{stem}_{name}_coefficients.csv")
    wav_bytes = fileio.write_wav(
        fileio.AudioBuffer(samples=recon[: len(buf.samples)],
                           sample_rate=buf.sample_rate))
    (out / f"{stem}_{name}_reconstruction.wav").write_bytes(wav_bytes)
    written = fileio.read_wav(wav_bytes)
    report = metrics.quality_report(buf.samples, written.samples,
                                    bins=args.bins, max_value=1.0)
    payload = {"wavelet": name, "levels": args.levels, **report.to_dict()}
    fileio.write_report(payload, out / f"{stem}_{name}_report.json")
    return 0


def cmd_analyze2d(args) -> int:
    _check_levels(args.levels)
    out = _outdir(args)
    wid = WaveletId.parse(args.wavelet)
    img = fileio.read_pgm(Path(args.input).read_bytes())
    stem = Path(args.input).stem
    dec = decompose2d(img.pixels.astype(float), wid, args.levels, _ext(args))
    recon = reconstruct2d(dec)
    recon_u8 = np.clip(np.floor(recon + 0.5), 0, 255).astype(np.uint8)
    (out / f"{stem}_{wid.name}_mosaic.pgm").write_bytes(
        fileio.write_pgm(render_mosaic(dec)))
    (out / f"{stem}_{wid.name}_reconstruction.pgm").write_bytes(
        fileio.write_pgm(recon_u8))
    fileio.write_coeff_csv(dec, out / f"{stem}_{wid.name}_coefficients.csv")
    report = metrics.quality_report(img.pixels.astype(float),
                                    recon_u8.astype(float),
                                    bins=args.bins, value_range=(0, 255),
                                    max_value=255.0)
    payload = {"wavelet": wid.name, "levels": args.levels, **report.to_dict()}
    fileio.write_report(payload, out / f"{stem}_{wid.name}_report.json")
    return 0


def _policy(args):
    return ThresholdPolicy.DETAILS_ONLY if args.policy == "details" \
        else ThresholdPolicy.ALL_BANDS


def cmd_compress(args) -> int:
    _check_levels(args.levels)
    out = _outdir(args)
    img = fileio.read_pgm(Path(args.input).read_bytes())
    stem = Path(args.input).stem
    if args.sweep_wavelets:
        names = [w.strip() for w in args.sweep_wavelets.split(",") if w.strip()]
        if not names:
            raise UnsupportedWavelet("empty wavelet list")
        rows = ["wavelet,threshold,levels,zero_percentage,psnr_db"]
        for name in names:
            rep = compress2d(img.pixels, WaveletId.parse(name), args.levels,
                             args.threshold, _policy(args), _ext(args))
            psnr = "inf" if math.isinf(rep.psnr_db) else f"{rep.psnr_db:.4f}"
            rows.append(f"{rep.wavelet},{rep.threshold:g},{rep.levels},"
                        f"{rep.zero_percentage:.6f},{psnr}")
        (out / f"{stem}_compression_sweep.csv").write_text("\n".join(rows) + "\n")
        return 0
    wid = WaveletId.parse(args.wavelet)
    rep = compress2d(img.pixels, wid, args.levels, args.threshold,
                     _policy(args), _ext(args))
    (out / f"{stem}_{wid.name}_compressed.pgm").write_bytes(
        fileio.write_pgm(rep.output))
    fileio.write_report(rep, out / f"{stem}_{wid.name}_compression.json")
    return 0


def _table_rows(args, img_or_buf, names):
    rows = []
    for name in names:
        wid = WaveletId.parse(name)
        if args.mode == "compression":
            rep = compress2d(img_or_buf, wid, args.levels, args.threshold,
                             _policy(args), _ext(args))
            rows.append({"wavelet": wid.name,
                         "compression_percent": round(rep.zero_percentage, 4)})
        else:
            data = img_or_buf.astype(float) if hasattr(img_or_buf, "astype") \
                else img_or_buf
            dec = decompose2d(data, wid, args.levels, _ext(args)) \
                if data.ndim == 2 else \
                decompose(data, wid, args.levels, _ext(args))
            recon = reconstruct2d(dec) if data.ndim == 2 else reconstruct(dec)
            rep = metrics.quality_report(data, recon, bins=args.bins)
            rows.append({
                "wavelet": wid.name,
                "snr_db": "inf" if rep.infinite_snr else round(rep.snr_db, 4),
                "mse": f"{rep.mse:.6e}",
                "entropy_bits": round(rep.entropy_bits, 4),
                "psnr_db": "inf" if rep.infinite_snr else round(rep.psnr_db, 4),
            })
    return rows


def cmd_table(args) -> int:
    _check_levels(args.levels)
    out = _outdir(args)
    names = [w.strip() for w in args.sweep_wavelets.split(",") if w.strip()]
    if not names:
        raise UnsupportedWavelet("table needs a non-empty wavelet list")
    path = Path(args.input)
    if path.suffix.lower() == ".wav":
        data = fileio.read_wav(path.read_bytes()).samples
    else:
        data = fileio.read_pgm(path.read_bytes()).pixels
    rows = _table_rows(args, data, names)
    cols = list(rows[0].keys())
    stem = path.stem
    if args.format == "json":
        fileio.write_report({"rows": rows}, out / f"{stem}_table.json")
    elif args.format == "csv":
        lines = [",".join(cols)]
        lines += [",".join(str(r[c]) for c in cols) for r in rows]
        (out / f"{stem}_table.csv").write_text("\n".join(lines) + "\n")
    else:
        lines = ["| " + " | ".join(cols) + " |",
                 "|" + "|".join("---" for _ in cols) + "|"]
        lines += ["| " + " | ".join(str(r[c]) for c in cols) + " |"
                  for r in rows]
        (out / f"{stem}_table.md").write_text("\n".join(lines) + "\n")
    return 0


COMMANDS = {
    "analyze1d": cmd_analyze1d,
    "analyze2d": cmd_analyze2d,
    "compress": cmd_compress,
    "table": cmd_table,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UnsupportedWavelet as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (WavekitError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
