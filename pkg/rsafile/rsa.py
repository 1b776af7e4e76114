#######################################################################
# Copyright (c) 2024-present, rsafile Development Team
# All rights reserved.
#
# This source code is licensed under a BSD-style license (found in the
# LICENSE.txt file in the root directory of this source tree)
#######################################################################

"""RSA keys, key generation and encryption of single numbers."""

from __future__ import annotations

import logging
import re
from typing import NamedTuple

from msgpack import UnpackException, packb, unpackb

import rsafile
from rsafile.codec import byte_length, bytes_to_nat, nat_to_bytes
from rsafile.numtheory import NotInvertibleError, _check_nat, gcd, mod_inverse, mod_pow
from rsafile.primality import PrimeGenParams, generate_prime

logger = logging.getLogger(__name__)

MIN_KEY_BITS = 12
"""Smallest modulus size accepted by :func:`keygen`."""

META_FORMAT_VERSION = 1
"""Version of the msgpack layout written by :meth:`RsaKeyPair.to_meta`."""

_KEYFILE_RE = re.compile(rb"(rsa-pub|rsa-prv)\n(0|[1-9][0-9]*)\n(0|[1-9][0-9]*)\n")


class NotRelativePrimeError(NotInvertibleError):
    """The public exponent shares a factor with ``(p - 1) * (q - 1)``."""


class KeyFormatError(ValueError):
    """A key file is malformed, or holds the wrong kind of key."""


class PublicKey(NamedTuple):
    """Encryption exponent `e` and modulus `m`."""

    e: int
    m: int

    @property
    def tag(self):
        return rsafile.Tag.PUBLIC

    @property
    def exponent(self):
        return self.e


class PrivateKey(NamedTuple):
    """Decryption exponent `d` and modulus `m`."""

    d: int
    m: int

    @property
    def tag(self):
        return rsafile.Tag.PRIVATE

    @property
    def exponent(self):
        return self.d


class RsaKeyPair(NamedTuple):
    """Both keys of a pair, and how they were generated.

    `seed` is the seed of the random state the primes were drawn from, or
    None when they came from a non-reproducible source.
    """

    public: PublicKey
    private: PrivateKey
    p: int
    q: int
    bits: int
    seed: int | None = None
    rounds: int | None = None

    @property
    def phi(self):
        return (self.p - 1) * (self.q - 1)

    def to_meta(self):
        """Serialize the pair and its provenance to msgpack bytes.

        Big integers are stored as little-endian base-256 digit strings.
        """

        def digits(v):
            return None if v is None else nat_to_bytes(v, byte_length(v) if v else 0)

        meta = {
            "version": META_FORMAT_VERSION,
            "e": digits(self.public.e),
            "d": digits(self.private.d),
            "p": digits(self.p),
            "q": digits(self.q),
            "bits": self.bits,
            "seed": digits(self.seed),
            "rounds": self.rounds,
        }
        return packb(meta, use_bin_type=True)

    @classmethod
    def from_meta(cls, data):
        """Rebuild a key pair from the bytes written by :meth:`to_meta`."""
        try:
            meta = unpackb(data, raw=False)
            version = meta["version"]
            p, q = bytes_to_nat(meta["p"]), bytes_to_nat(meta["q"])
            e, d = bytes_to_nat(meta["e"]), bytes_to_nat(meta["d"])
            seed = None if meta["seed"] is None else bytes_to_nat(meta["seed"])
            bits, rounds = meta["bits"], meta["rounds"]
        except (UnpackException, ValueError, KeyError, TypeError) as exc:
            raise KeyFormatError(f"malformed key metadata: {exc}") from exc
        if version != META_FORMAT_VERSION:
            raise KeyFormatError(f"unsupported metadata version {version}")
        m = p * q
        return cls(PublicKey(e, m), PrivateKey(d, m), p, q, bits, seed, rounds)


def _check_exponent(e):
    _check_nat("exponent", e)
    if e < 3 or e % 2 == 0:
        raise ValueError(f"public exponent must be odd and >= 3 (got {e})")


def _check_key_bits(bits, exponent):
    if bits < MIN_KEY_BITS:
        raise ValueError(f"bits must be >= {MIN_KEY_BITS} (got {bits})")
    # Both primes have at least 2**(half - 1) + 1, so phi >= 2**(2 * half - 2)
    half = -(-bits // 2)
    nbits = exponent.bit_length()
    if nbits > 2 * half - 2:
        min_bits = 2 * -(-(nbits + 2) // 2) - 1
        raise ValueError(
            f"a {bits}-bit key cannot guarantee exponent {exponent} < phi(m); "
            f"use at least {min_bits} bits or a smaller exponent such as 3"
        )


def derive_private_exponent(e, p, q):
    """Return the inverse of `e` modulo ``(p - 1) * (q - 1)``.

    Raises
    ------
    NotRelativePrimeError
        If `e` and ``(p - 1) * (q - 1)`` are not relatively prime.

    Examples
    --------
    >>> derive_private_exponent(17, 61, 53)
    2753
    >>> derive_private_exponent(65537, 61, 53)
    2753
    """
    _check_nat("e", e)
    _check_nat("p", p)
    _check_nat("q", q)
    if p == q:
        raise ValueError("p and q must be distinct")
    phi = (p - 1) * (q - 1)
    if gcd(e, phi) != 1:
        raise NotRelativePrimeError(f"{e} and {phi} are not relative prime")
    return mod_inverse(e, phi)


def keygen(bits, rounds, s, exponent=None):
    """Generate an RSA key pair with a modulus of about `bits` bits.

    Each prime gets ``ceil(bits / 2)`` significant bits. `q` is redrawn while
    it equals `p`, and both primes are redrawn when `exponent` is not
    invertible modulo ``(p - 1) * (q - 1)``.

    Parameters
    ----------
    bits : int
        The modulus size, at least :py:obj:`MIN_KEY_BITS`.
    rounds : int
        Miller-Rabin rounds per prime candidate.
    s : :class:`RandomState <rsafile.rng.RandomState>`
        The random state the primes are drawn from.
    exponent : int (optional)
        The public exponent. The default is
        ``rsafile.keygen_dflts["exponent"]`` (65537).

    Returns
    -------
    out : tuple
        The advanced random state and the :class:`RsaKeyPair`.

    Raises
    ------
    ValueError
        If :paramref:`bits` is too small, in general or for
        :paramref:`exponent` to stay below ``phi(m)``.

    Examples
    --------
    >>> from rsafile.rng import LcgState
    >>> _, pair = keygen(40, 20, LcgState.from_seed(3))
    >>> pair.public.e
    65537
    >>> (pair.public.e * pair.private.d) % pair.phi
    1
    """
    if exponent is None:
        exponent = rsafile.keygen_dflts["exponent"]
    _check_exponent(exponent)
    _check_key_bits(bits, exponent)
    seed = s.seed
    params = PrimeGenParams(bits=-(-bits // 2), rounds=rounds)
    while True:
        s, p = generate_prime(params, s)
        s, q = generate_prime(params, s)
        while q == p:
            logger.info("p == q, drawing q again")
            s, q = generate_prime(params, s)
        try:
            d = derive_private_exponent(exponent, p, q)
        except NotRelativePrimeError:
            logger.info("exponent %d not invertible for this p, q; drawing new primes", exponent)
            continue
        break
    m = p * q
    logger.info("generated a %d-bit modulus", m.bit_length())
    pair = RsaKeyPair(PublicKey(exponent, m), PrivateKey(d, m), p, q, bits, seed, rounds)
    return s, pair


def crypt_number(x, exponent, m):
    """Return ``x**exponent % m``.

    Encryption passes the public exponent and decryption the private one.
    Every `x` in ``[0, m)`` is accepted, since RSA permutes all residues of a
    squarefree modulus.

    Raises
    ------
    ValueError
        If :paramref:`x` is not below :paramref:`m`.

    Examples
    --------
    >>> crypt_number(65, 17, 3233)
    2790
    >>> crypt_number(2790, 2753, 3233)
    65
    """
    _check_nat("x", x)
    if x >= m:
        raise ValueError(f"block value {x} is too large for modulus {m}")
    return mod_pow(x, exponent, m)


def _check_key(key):
    if key.m < 6:
        raise KeyFormatError(f"modulus must be >= 6 (got {key.m})")
    if isinstance(key, PublicKey):
        if key.e < 3 or key.e % 2 == 0:
            raise KeyFormatError(f"public exponent must be odd and >= 3 (got {key.e})")
    elif key.d < 1:
        raise KeyFormatError("private exponent must be >= 1")


def dump_key(key):
    """Return the key file contents for `key`.

    Examples
    --------
    >>> dump_key(PublicKey(65537, 3233))
    b'rsa-pub\\n65537\\n3233\\n'
    """
    return f"{key.tag.value}\n{key.exponent}\n{key.m}\n".encode("ascii")


def parse_key(data, expected=None):
    """Parse key file contents.

    Parameters
    ----------
    data : bytes
        Three lines: the tag, the exponent and the modulus in decimal, each
        terminated by a single line feed.
    expected : :class:`Tag` (optional)
        If given, the kind of key required.

    Returns
    -------
    out : :class:`PublicKey` or :class:`PrivateKey`

    Raises
    ------
    KeyFormatError
        If the contents are malformed or the key is not of the expected kind.
    """
    match = _KEYFILE_RE.fullmatch(data)
    if match is None:
        raise KeyFormatError("not an rsafile key file")
    tag = rsafile.Tag(match.group(1).decode("ascii"))
    if expected is not None and tag is not rsafile.Tag(expected):
        raise KeyFormatError(f"expected a {rsafile.Tag(expected).value} key, got {tag.value}")
    exponent, m = int(match.group(2)), int(match.group(3))
    key = PublicKey(exponent, m) if tag is rsafile.Tag.PUBLIC else PrivateKey(exponent, m)
    _check_key(key)
    return key


def save_key(key, path):
    """Write `key` to `path` in the key file format."""
    with open(path, "wb") as f:
        f.write(dump_key(key))
    logger.info("wrote %s key to %s", key.tag.value, path)


def load_key(path, expected=None):
    """Read a key from `path`. See :func:`parse_key`."""
    with open(path, "rb") as f:
        data = f.read()
    logger.info("read key file %s", path)
    return parse_key(data, expected)
