#######################################################################
# Copyright (c) 2024-present, rsafile Development Team
# All rights reserved.
#
# This source code is licensed under a BSD-style license (found in the
# LICENSE.txt file in the root directory of this source tree)
#######################################################################

# Hey Ruff, please ignore the next violations
# ruff: noqa: E402 - Module level import not at top of file

import logging
from enum import Enum


class Rng(Enum):
    """
    Available random sources for key generation.
    """

    #: Seedable linear congruential generator; reproducible, not cryptographically secure
    LCG = "lcg"
    #: Operating system entropy; not reproducible
    OS = "os"


class Tag(Enum):
    """
    Key file tags.
    """

    PUBLIC = "rsa-pub"
    PRIVATE = "rsa-prv"


RSAFILE_SEED_ENVVAR = "RSAFILE_SEED"
"""Environment variable with a default decimal seed for the LCG."""

RSAFILE_INFO_ENVVAR = "RSAFILE_INFO"
"""Environment variable that, when true, sends library diagnostics to stderr."""

logging.getLogger(__name__).addHandler(logging.NullHandler())

from .numtheory import NotInvertibleError, gcd, mod_inverse, mod_pow
from .rng import (
    LcgState,
    OsEntropyState,
    RandomState,
    lcg_next,
    new_state,
    random_nat_bits,
    random_odd_candidate,
)
from .primality import (
    MrDecomposition,
    PrimeGenParams,
    decompose,
    generate_prime,
    is_probable_prime,
    mr_round,
)
from .codec import byte_length, bytes_to_nat, nat_to_bytes
from .rsa import (
    KeyFormatError,
    NotRelativePrimeError,
    PrivateKey,
    PublicKey,
    RsaKeyPair,
    crypt_number,
    derive_private_exponent,
    keygen,
    load_key,
    parse_key,
    save_key,
)
from .filecipher import (
    BlockFormat,
    CorruptFrameError,
    UnsupportedKeyError,
    WrongKeyError,
    decrypt_stream,
    encrypt_stream,
)
from .core import decrypt_file, encrypt_file, get_cpu_info, info_from_env, print_versions, set_info
from .info import InfoReporter, key_report
from .version import __version__

__version__ = __version__
"""
rsafile version.
"""

keygen_dflts = {
    "bits": 1024,
    "rounds": 40,
    "exponent": 65537,
    "rng": Rng.LCG,
    "bit_rounds": False,
}
"""
Key generation defaults. ``bit_rounds`` makes the number of Miller-Rabin
rounds equal to the bit size of each prime.
"""

if info_from_env():
    set_info(True)

__all__ = [
    "__version__",
    "Rng",
    "Tag",
    "keygen_dflts",
    "gcd",
    "mod_inverse",
    "mod_pow",
    "NotInvertibleError",
    "LcgState",
    "OsEntropyState",
    "RandomState",
    "lcg_next",
    "new_state",
    "random_nat_bits",
    "random_odd_candidate",
    "MrDecomposition",
    "PrimeGenParams",
    "decompose",
    "mr_round",
    "is_probable_prime",
    "generate_prime",
    "bytes_to_nat",
    "nat_to_bytes",
    "byte_length",
    "PublicKey",
    "PrivateKey",
    "RsaKeyPair",
    "KeyFormatError",
    "NotRelativePrimeError",
    "derive_private_exponent",
    "keygen",
    "crypt_number",
    "load_key",
    "parse_key",
    "save_key",
    "BlockFormat",
    "CorruptFrameError",
    "UnsupportedKeyError",
    "WrongKeyError",
    "encrypt_stream",
    "decrypt_stream",
    "encrypt_file",
    "decrypt_file",
    "get_cpu_info",
    "print_versions",
    "set_info",
    "InfoReporter",
    "key_report",
]
