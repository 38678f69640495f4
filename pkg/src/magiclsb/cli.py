"""Command-line front end.

Commands: embed, extract, capacity, metrics, baseline. The secret key is
taken from --key or the STEGO_KEY environment variable (preferred, to
keep keys out of shell history) and is never echoed anywhere.

Exit codes: 0 success, 2 payload too large (or usage error), 3
unreadable or lossy-only file, 4 bad carrier geometry, 5 corrupt header
or wrong key, 6 dimension mismatch.
"""

import argparse
import os
import sys

import numpy as np
from PIL import Image, UnidentifiedImageError

from . import baseline, codec, metrics
from .bits import bits_to_bytes, bytes_to_bits
from .errors import (
    CapacityExceeded,
    CorruptHeader,
    DimensionMismatch,
    NonSquare,
    OddDimensions,
    PayloadTooLarge,
    TooSmall,
)

EXIT_PAYLOAD = 2
EXIT_IO = 3
EXIT_GEOMETRY = 4
EXIT_HEADER = 5
EXIT_DIMENSIONS = 6

# Formats PIL writes without loss; stego output is refused elsewhere.
_LOSSLESS_SUFFIXES = {".png", ".bmp", ".tif", ".tiff", ".ppm", ".pgm"}

_BASELINE_HEADER_BITS = 32


class _CliError(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _load_image(path):
    try:
        with Image.open(path) as img:
            return np.asarray(img.convert("RGB"))
    except FileNotFoundError:
        raise _CliError(EXIT_IO, "cannot read %s: no such file" % path)
    except (UnidentifiedImageError, OSError, ValueError) as exc:
        raise _CliError(EXIT_IO, "cannot decode %s: %s" % (path, exc))


def _save_image(array, path):
    suffix = os.path.splitext(path)[1].lower()
    if suffix not in _LOSSLESS_SUFFIXES:
        raise _CliError(
            EXIT_IO,
            "refusing to write %s: stego output needs a lossless format (%s)"
            % (path, ", ".join(sorted(_LOSSLESS_SUFFIXES))),
        )
    Image.fromarray(array, mode="RGB").save(path)


def _read_bytes(path):
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise _CliError(EXIT_IO, "cannot read %s: %s" % (path, exc))


def _get_key(args, parser):
    key = args.key if args.key is not None else os.environ.get("STEGO_KEY")
    if not key:
        parser.error("a secret key is required (--key or STEGO_KEY)")
    return key.encode("utf-8")


def _print_report(report, fmt):
    if fmt == "csv":
        print(",".join(metrics.CSV_FIELDS))
        print(report.to_csv_row())
    elif fmt == "jsonl":
        print(report.to_json())
    else:
        print(report.to_text())


def _cmd_embed(args, parser):
    cover = _load_image(args.infile)
    payload = _read_bytes(args.payload)
    key = _get_key(args, parser)
    try:
        stego = codec.embed(cover, payload, key)
        cap = codec.capacity(cover.shape[1], cover.shape[0])
    except PayloadTooLarge as exc:
        raise _CliError(EXIT_PAYLOAD, str(exc))
    except (NonSquare, OddDimensions, TooSmall) as exc:
        raise _CliError(EXIT_GEOMETRY, str(exc))
    _save_image(stego, args.out)
    print("embedded %d of %d bytes into %s" % (len(payload), cap, args.out))
    _print_report(metrics.quality_report(cover, stego), args.format)
    return 0


def _baseline_extract(image, k):
    total = image.size * k
    if total < _BASELINE_HEADER_BITS:
        raise CorruptHeader("image too small for a length header")
    probe = -(-_BASELINE_HEADER_BITS // k) * k
    header = baseline.classic_lsb_extract(image, probe, k)[:_BASELINE_HEADER_BITS]
    length = int.from_bytes(bits_to_bytes(header), "big")
    needed = _BASELINE_HEADER_BITS + 8 * length
    if needed > total:
        raise CorruptHeader("decoded length %d bytes exceeds image capacity" % length)
    stream = baseline.classic_lsb_extract(image, needed, k)
    return bits_to_bytes(stream[_BASELINE_HEADER_BITS:])


def _cmd_extract(args, parser):
    stego = _load_image(args.infile)
    try:
        if args.k is not None:
            payload = _baseline_extract(stego, args.k)
        else:
            key = _get_key(args, parser)
            payload = codec.extract(stego, key)
    except CorruptHeader as exc:
        raise _CliError(EXIT_HEADER, str(exc))
    except (NonSquare, OddDimensions, TooSmall) as exc:
        raise _CliError(EXIT_GEOMETRY, str(exc))
    with open(args.out, "wb") as fh:
        fh.write(payload)
    print("recovered %d bytes into %s" % (len(payload), args.out))
    return 0


def _cmd_capacity(args, parser):
    image = _load_image(args.infile)
    try:
        cap = codec.capacity(image.shape[1], image.shape[0])
    except (NonSquare, OddDimensions) as exc:
        raise _CliError(EXIT_GEOMETRY, str(exc))
    except TooSmall:
        cap = 0
    print(cap)
    return 0


def _cmd_metrics(args, parser):
    a = _load_image(args.image_a)
    b = _load_image(args.image_b)
    try:
        report = metrics.quality_report(a, b)
    except DimensionMismatch as exc:
        raise _CliError(EXIT_DIMENSIONS, str(exc))
    _print_report(report, args.format)
    return 0


def _cmd_baseline(args, parser):
    cover = _load_image(args.infile)
    payload = _read_bytes(args.payload)
    k = args.k
    header = len(payload).to_bytes(4, "big")
    stream = np.concatenate([bytes_to_bits(header), bytes_to_bits(payload)])
    stream = np.concatenate([stream, np.zeros(-stream.size % k, dtype=np.uint8)])
    try:
        stego = baseline.classic_lsb_embed(cover, stream, k)
    except CapacityExceeded as exc:
        raise _CliError(EXIT_PAYLOAD, str(exc))
    _save_image(stego, args.out)
    print("embedded %d bytes at k=%d into %s" % (len(payload), k, args.out))
    _print_report(metrics.quality_report(cover, stego), args.format)
    return 0


def _add_format(parser):
    parser.add_argument(
        "--format", choices=("text", "csv", "jsonl"), default="text",
        help="report format (default: text)",
    )


def build_parser():
    parser = argparse.ArgumentParser(
        prog="magiclsb",
        description="Hide and recover payloads in the intensity plane of "
        "square color images via magic-square LSB substitution.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("embed", help="hide a payload file in a cover image")
    p.add_argument("--in", dest="infile", required=True, help="cover image path")
    p.add_argument("--payload", required=True, help="payload file path")
    p.add_argument("--out", required=True, help="stego image output path (lossless)")
    p.add_argument("--key", "-k", help="secret key (or set STEGO_KEY)")
    _add_format(p)
    p.set_defaults(func=_cmd_embed)

    p = sub.add_parser("extract", help="recover a payload from a stego image")
    p.add_argument("--in", dest="infile", required=True, help="stego image path")
    p.add_argument("--out", required=True, help="recovered payload output path")
    p.add_argument("--key", "-k", help="secret key (or set STEGO_KEY)")
    p.add_argument("--k", dest="k", type=int, choices=range(1, 6), default=None,
                   help="read a classic-LSB baseline image with this bit depth instead")
    p.set_defaults(func=_cmd_extract)

    p = sub.add_parser("capacity", help="print payload capacity of an image in bytes")
    p.add_argument("--in", dest="infile", required=True, help="image path")
    p.set_defaults(func=_cmd_capacity)

    p = sub.add_parser("metrics", help="compare two same-size images")
    p.add_argument("image_a", help="reference image (cover)")
    p.add_argument("image_b", help="comparison image (stego)")
    _add_format(p)
    p.set_defaults(func=_cmd_metrics)

    p = sub.add_parser("baseline", help="classic k-bit LSB embedding for comparison")
    p.add_argument("--in", dest="infile", required=True, help="cover image path")
    p.add_argument("--payload", required=True, help="payload file path")
    p.add_argument("--out", required=True, help="stego image output path (lossless)")
    p.add_argument("--k", dest="k", type=int, choices=range(1, 6), required=True,
                   help="bits replaced per sample")
    _add_format(p)
    p.set_defaults(func=_cmd_baseline)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except _CliError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
