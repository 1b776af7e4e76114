#######################################################################
# Copyright (c) 2024-present, rsafile Development Team
# All rights reserved.
#
# This source code is licensed under a BSD-style license (found in the
# LICENSE.txt file in the root directory of this source tree)
#######################################################################

# Benchmark for the keygen / encrypt / decrypt pipeline on a random file

import argparse
import os
import tempfile
from time import perf_counter

import numpy as np

import rsafile


class PipelineBenchmarking:
    def __init__(self, bits: int, nbytes: int, rounds: int, seed: int) -> None:
        self.bits = bits
        self.nbytes = nbytes
        self.rounds = rounds
        self.seed = seed
        self.tmpdir = None
        self.pair = None

    def __enter__(self):
        self.tmpdir = tempfile.TemporaryDirectory()
        rng = np.random.default_rng(self.seed)
        data = rng.integers(0, 256, size=self.nbytes, dtype=np.uint8).tobytes()
        with open(self.path("plain"), "wb") as f:
            f.write(data)
        return self

    def __exit__(self, exc_type, exc_value, traceback):
        self.tmpdir.cleanup()

    def path(self, name: str) -> str:
        return os.path.join(self.tmpdir.name, name)

    def benchmark_keygen(self, run: int) -> float:
        s = rsafile.LcgState.from_seed(self.seed + run)
        t0 = perf_counter()
        _, self.pair = rsafile.keygen(self.bits, self.rounds, s)
        t1 = perf_counter()
        return t1 - t0

    def benchmark_encrypt(self) -> float:
        t0 = perf_counter()
        rsafile.encrypt_file(self.pair.public, self.path("plain"), self.path("cipher"))
        t1 = perf_counter()
        return t1 - t0

    def benchmark_decrypt(self) -> float:
        t0 = perf_counter()
        rsafile.decrypt_file(self.pair.private, self.path("cipher"), self.path("decrypted"))
        t1 = perf_counter()
        with open(self.path("plain"), "rb") as f1, open(self.path("decrypted"), "rb") as f2:
            if f1.read() != f2.read():
                raise RuntimeError("decrypted file differs from the original")
        return t1 - t0


if __name__ == "__main__":
    parser = argparse.ArgumentParser(
        description="Benchmark RSA key generation and file encryption",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    parser.add_argument("--bits", type=int, default=rsafile.keygen_dflts["bits"], help="Modulus size in bits.")
    parser.add_argument("--size", type=int, default=48_900, help="Size of the random file in bytes.")
    parser.add_argument(
        "--rounds", type=int, default=rsafile.keygen_dflts["rounds"], help="Miller-Rabin rounds per candidate."
    )
    parser.add_argument("--seed", type=int, default=42, help="Seed for the key and the file contents.")
    parser.add_argument(
        "--runs",
        type=int,
        default=5,
        help="Number of times the pipeline is run; the minimum time of each phase is reported.",
    )
    args = parser.parse_args()

    with PipelineBenchmarking(args.bits, args.size, args.rounds, args.seed) as bench:
        times = {"keygen": [], "encrypt": [], "decrypt": []}
        for i in range(args.runs):
            print(f"Run {i+1}/{args.runs}", end="\r")
            times["keygen"].append(bench.benchmark_keygen(i))
            times["encrypt"].append(bench.benchmark_encrypt())
            times["decrypt"].append(bench.benchmark_decrypt())
        print(f"Key: {args.bits} bits, file: {args.size} bytes, runs: {args.runs}")
        for phase, ts in times.items():
            min_time = min(ts)
            if phase == "keygen":
                print(f"Time for {phase}: {min_time:.3f} s (mean {np.mean(ts):.3f} s)")
            else:
                speed = args.size / min_time / 2**10
                print(f"Time for {phase}: {min_time:.3f} s ({speed:.1f} KB/s)")
