"""Command line interface: ``i2icodec {encode,decode,bench,gen-ar1}``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .codec import SystemId, decode_image, encode_image
from .bench import run_bench
from .pgm import read_pgm, write_pgm
from .synth import Ar1Spec, gen_ar1

SYSTEM_LABELS = [s.label for s in SystemId]


def parse_systems(text: str) -> list[SystemId]:
    if text == "all":
        return list(SystemId)
    try:
        return [SystemId.from_label(s.strip()) for s in text.split(",") if s.strip()]
    except KeyError as e:
        raise argparse.ArgumentTypeError(f"unknown system {e.args[0]!r}; choose from {SYSTEM_LABELS} or 'all'")


def cmd_encode(args) -> None:
    stream = encode_image(read_pgm(args.inp), SystemId.from_label(args.system))
    Path(args.out).write_bytes(stream)


def cmd_decode(args) -> None:
    write_pgm(decode_image(Path(args.inp).read_bytes()), args.out)


def cmd_bench(args) -> None:
    records = run_bench(args.inputs, args.systems, args.csv)
    if not records:
        raise ValueError("no input images found")
    for rec in records:
        print(f"{rec.input:24s} {rec.system:10s} {rec.bits:10d} bits {rec.bpp:7.4f} bpp {rec.reduction_pct:7.2f}%")


def cmd_gen_ar1(args) -> None:
    spec = Ar1Spec(args.width, args.height, args.rho, args.sigma, args.seed)
    write_pgm(gen_ar1(spec), args.out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="i2icodec", description="Lossless 4x4 block codec with i2i DCT residual coding.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", help="encode a P5 PGM")
    p.add_argument("--system", choices=SYSTEM_LABELS, default="i2i-rdpcm")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="decode a stream back to PGM")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("bench", help="bitrate comparison of the four systems")
    p.add_argument("--inputs", nargs="+", required=True, help="PGM files and/or directories")
    p.add_argument("--systems", type=parse_systems, default=list(SystemId), help="'all' or comma-separated labels")
    p.add_argument("--csv", default=None)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("gen-ar1", help="write a seeded AR(1) test plane")
    p.add_argument("--width", type=int, required=True)
    p.add_argument("--height", type=int, required=True)
    p.add_argument("--rho", type=float, required=True)
    p.add_argument("--sigma", type=float, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_gen_ar1)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except Exception as e:  # one-line diagnostic, no traceback
        print(f"i2icodec {args.command}: error: {e}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
