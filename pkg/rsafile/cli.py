#######################################################################
# Copyright (c) 2024-present, rsafile Development Team
# All rights reserved.
#
# This source code is licensed under a BSD-style license (found in the
# LICENSE.txt file in the root directory of this source tree)
#######################################################################

"""Command line front end: ``rsafile keygen | encrypt | decrypt | show``.

Exit status is 0 on success, 2 for usage and key-type errors, 3 for I/O
errors and 4 when a ciphertext frame is corrupt or does not match the key.
Timings are printed to stdout as ``<phase> <seconds>`` lines.
"""

import argparse
import logging
import sys
from enum import IntEnum
from time import perf_counter
from typing import NamedTuple

import rsafile
from rsafile.filecipher import CorruptFrameError
from rsafile.info import InfoReporter, key_report
from rsafile.rng import new_state
from rsafile.rsa import RsaKeyPair, keygen, load_key, save_key

logger = logging.getLogger(__name__)

MIN_CLI_KEY_BITS = 24
"""Smallest key size accepted by the ``keygen`` command."""


class ExitStatus(IntEnum):
    OK = 0
    USAGE = 2
    IO = 3
    CORRUPT = 4


class TimingReport(NamedTuple):
    """Seconds spent in each phase of a command; None for phases not run."""

    keygen_seconds: float | None = None
    encrypt_seconds: float | None = None
    decrypt_seconds: float | None = None

    def as_lines(self):
        lines = []
        for phase in ("keygen", "encrypt", "decrypt"):
            seconds = getattr(self, f"{phase}_seconds")
            if seconds is not None:
                lines.append(f"{phase} {seconds:.6f}")
        return lines


class _Timer:
    def __enter__(self):
        self.start = perf_counter()
        return self

    def __exit__(self, exc_type, exc_value, traceback):
        self.seconds = max(perf_counter() - self.start, 0.0)


def _seed(value):
    try:
        seed = int(value, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid seed {value!r}, expected a decimal integer") from None
    if seed < 0:
        raise argparse.ArgumentTypeError("seed must be non-negative")
    return seed


def _report(args, timing):
    if args.time:
        for line in timing.as_lines():
            print(line)


def cmd_keygen(args):
    if args.bits < MIN_CLI_KEY_BITS:
        raise ValueError(f"--bits must be >= {MIN_CLI_KEY_BITS} (got {args.bits})")
    s = new_state(rsafile.Rng(args.rng), args.seed)
    rounds = -(-args.bits // 2) if args.bit_rounds else args.rounds
    with _Timer() as timer:
        _, pair = keygen(args.bits, rounds, s, exponent=args.exponent)
    save_key(pair.public, f"{args.out}.pub")
    save_key(pair.private, f"{args.out}.prv")
    if args.meta:
        with open(f"{args.out}.meta", "wb") as f:
            f.write(pair.to_meta())
    _report(args, TimingReport(keygen_seconds=timer.seconds))
    return ExitStatus.OK


def cmd_encrypt(args):
    key = load_key(args.key, rsafile.Tag.PUBLIC)
    with _Timer() as timer:
        nblocks = rsafile.encrypt_file(key, args.infile, args.out)
    logger.info("%s: %d blocks", args.out, nblocks)
    _report(args, TimingReport(encrypt_seconds=timer.seconds))
    return ExitStatus.OK


def cmd_decrypt(args):
    key = load_key(args.key, rsafile.Tag.PRIVATE)
    with _Timer() as timer:
        nframes = rsafile.decrypt_file(key, args.infile, args.out)
    logger.info("%s: %d frames", args.out, nframes)
    _report(args, TimingReport(decrypt_seconds=timer.seconds))
    return ExitStatus.OK


def cmd_show(args):
    if args.key is not None:
        print(key_report(load_key(args.key)), end="")
    else:
        with open(args.meta, "rb") as f:
            pair = RsaKeyPair.from_meta(f.read())
        print(InfoReporter(pair), end="")
    return ExitStatus.OK


def build_parser():
    dflts = rsafile.keygen_dflts
    # --time is accepted before or after the subcommand
    timing = argparse.ArgumentParser(add_help=False)
    timing.add_argument(
        "--time",
        action=argparse.BooleanOptionalAction,
        default=argparse.SUPPRESS,
        help="Print the time spent in each phase (default: on).",
    )

    parser = argparse.ArgumentParser(
        prog="rsafile",
        description="RSA file encryption in ECB mode, with timing reports.",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    parser.add_argument("--time", action=argparse.BooleanOptionalAction, default=True,
                        help="Print the time spent in each phase.")
    parser.add_argument("-v", "--verbose", action="store_true", help="Send diagnostics to stderr.")
    parser.add_argument("--versions", action="store_true", help="Print software and platform versions.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    p = sub.add_parser("keygen", parents=[timing], help="Generate a key pair.",
                       formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    p.add_argument("--bits", type=int, default=dflts["bits"], help="Modulus size in bits.")
    p.add_argument("--rounds", type=int, default=dflts["rounds"], help="Miller-Rabin rounds per candidate.")
    p.add_argument("--paper-rounds", dest="bit_rounds", action="store_true", default=dflts["bit_rounds"],
                   help="Use as many Miller-Rabin rounds as each prime has bits, that is ceil(bits/2), "
                        "the size of the numbers under test. Overrides --rounds.")
    p.add_argument("--seed", type=_seed, default=None,
                   help=f"Decimal LCG seed. Falls back to ${rsafile.RSAFILE_SEED_ENVVAR}, then the clock.")
    p.add_argument("--rng", choices=[r.value for r in rsafile.Rng], default=dflts["rng"].value,
                   help="Random source: the seedable LCG or OS entropy.")
    p.add_argument("--exponent", type=int, default=dflts["exponent"], help="Public exponent.")
    p.add_argument("--meta", action="store_true", help="Also write PREFIX.meta with the key provenance.")
    p.add_argument("--out", required=True, metavar="PREFIX", help="Write PREFIX.pub and PREFIX.prv.")
    p.set_defaults(func=cmd_keygen)

    for name, func, help_text in (
        ("encrypt", cmd_encrypt, "Encrypt a file with a public key."),
        ("decrypt", cmd_decrypt, "Decrypt a file with a private key."),
    ):
        p = sub.add_parser(name, parents=[timing], help=help_text)
        p.add_argument("--key", required=True, metavar="FILE", help="Key file.")
        p.add_argument("--in", dest="infile", required=True, metavar="FILE", help="Input file.")
        p.add_argument("--out", required=True, metavar="FILE", help="Output file.")
        p.set_defaults(func=func)

    p = sub.add_parser("show", help="Describe a key file or a key metadata file.")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--key", metavar="FILE", help="Key file.")
    group.add_argument("--meta", metavar="FILE", help="Metadata file written by keygen --meta.")
    p.set_defaults(func=cmd_show)
    return parser


def _error(message):
    print(f"rsafile: error: {message}", file=sys.stderr)


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    if args.verbose:
        rsafile.set_info(True)
    if args.versions:
        rsafile.print_versions()
        if args.command is None:
            return ExitStatus.OK
    if args.command is None:
        parser.print_usage(sys.stderr)
        return ExitStatus.USAGE

    try:
        return args.func(args)
    except CorruptFrameError as exc:
        _error(str(exc))
        return ExitStatus.CORRUPT
    except (ValueError, TypeError) as exc:
        _error(str(exc))
        return ExitStatus.USAGE
    except OSError as exc:
        _error(str(exc))
        return ExitStatus.IO


if __name__ == "__main__":
    sys.exit(main())
