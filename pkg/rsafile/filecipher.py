#######################################################################
# Copyright (c) 2024-present, rsafile Development Team
# All rights reserved.
#
# This source code is licensed under a BSD-style license (found in the
# LICENSE.txt file in the root directory of this source tree)
#######################################################################

"""RSA file encryption in ECB mode.

A ciphertext is a bare sequence of frames, with no header. Each frame is one
byte `k2`, the number of plaintext bytes in the block, followed by exactly
`k` little-endian base-256 digits of the encrypted block, where `k` is the
byte length of the modulus. Plaintext is cut in blocks of ``k - 1`` bytes;
only the last block may be shorter.
"""

import errno
import logging
from typing import NamedTuple

from rsafile.codec import RADIX, byte_length, bytes_to_nat, nat_to_bytes
from rsafile.rsa import crypt_number

logger = logging.getLogger(__name__)

MAX_DIGITS = 256
"""Largest modulus byte length: ``k - 1`` must fit in the one-byte length field."""


class UnsupportedKeyError(ValueError):
    """The key modulus cannot be used with this frame format."""


class CorruptFrameError(ValueError):
    """A ciphertext frame cannot be decoded.

    `frame` is the 0-based index of the offending frame and `offset` the byte
    offset where it starts.
    """

    def __init__(self, message, frame, offset):
        super().__init__(f"frame {frame} (offset {offset}): {message}")
        self.frame = frame
        self.offset = offset


class WrongKeyError(CorruptFrameError):
    """A frame decrypted to a value that does not fit its length byte."""


class BlockFormat(NamedTuple):
    """Block sizes derived from a modulus."""

    k: int

    @classmethod
    def from_modulus(cls, m):
        k = byte_length(m)
        if not 2 <= k <= MAX_DIGITS:
            raise UnsupportedKeyError(
                f"modulus must have between 2 and {MAX_DIGITS} base-{RADIX} digits (got {k})"
            )
        return cls(k)

    @property
    def plaintext_block(self):
        return self.k - 1

    @property
    def ciphertext_block(self):
        return self.k

    @property
    def frame_size(self):
        return self.k + 1


def _read(src, n):
    buf = src.read(n)
    if buf is None:
        # A non-blocking source with nothing buffered, not the end of input
        raise BlockingIOError(errno.EAGAIN, "non-blocking sources are not supported")
    return buf


def _read_upto(src, n):
    # Raw streams may return fewer bytes than asked for before the end
    buf = _read(src, n)
    while buf and len(buf) < n:
        more = _read(src, n - len(buf))
        if not more:
            break
        buf += more
    return buf


def encrypt_stream(plain, out, key):
    """Encrypt everything readable from `plain` into `out`.

    Parameters
    ----------
    plain : binary file-like object
        The plaintext source. It is read sequentially until exhausted.
    out : binary file-like object
        The sink the frames are written to.
    key : :class:`PublicKey <rsafile.rsa.PublicKey>`
        The public key.

    Returns
    -------
    out : int
        The number of frames written. An empty source writes nothing.

    Raises
    ------
    UnsupportedKeyError
        If the modulus is too small or too large for the frame format.

    Examples
    --------
    >>> import io
    >>> from rsafile.rsa import PublicKey
    >>> sink = io.BytesIO()
    >>> encrypt_stream(io.BytesIO(b"A"), sink, PublicKey(65537, 3233))
    1
    >>> sink.getvalue()
    b'\\x01\\xe6\\n'
    """
    fmt = BlockFormat.from_modulus(key.m)
    nblocks = 0
    while True:
        chunk = _read_upto(plain, fmt.plaintext_block)
        if not chunk:
            break
        c = crypt_number(bytes_to_nat(chunk), key.e, key.m)
        out.write(bytes((len(chunk),)) + nat_to_bytes(c, fmt.k))
        nblocks += 1
    logger.info("encrypted %d blocks of up to %d bytes", nblocks, fmt.plaintext_block)
    return nblocks


def decrypt_stream(cipher, out, key):
    """Decrypt the frames readable from `cipher` into `out`.

    Parameters
    ----------
    cipher : binary file-like object
        The ciphertext source, a sequence of frames.
    out : binary file-like object
        The sink the plaintext is written to.
    key : :class:`PrivateKey <rsafile.rsa.PrivateKey>`
        The private key matching the one the data was encrypted with.

    Returns
    -------
    out : int
        The number of frames read.

    Raises
    ------
    UnsupportedKeyError
        If the modulus is too small or too large for the frame format.
    CorruptFrameError
        If a frame is truncated, its length byte is out of range or its
        value is not below the modulus.
    WrongKeyError
        If a frame decrypts to a value that does not fit its length byte.

    Examples
    --------
    >>> import io
    >>> from rsafile.rsa import PrivateKey
    >>> sink = io.BytesIO()
    >>> decrypt_stream(io.BytesIO(b"\\x01\\xe6\\n"), sink, PrivateKey(2753, 3233))
    1
    >>> sink.getvalue()
    b'A'
    """
    fmt = BlockFormat.from_modulus(key.m)
    nframes = 0
    while True:
        offset = nframes * fmt.frame_size
        head = _read(cipher, 1)
        if not head:
            break
        k2 = head[0]
        digits = _read_upto(cipher, fmt.k)
        if len(digits) < fmt.k:
            raise CorruptFrameError(
                f"truncated frame, {1 + len(digits)} of {fmt.frame_size} bytes", nframes, offset
            )
        if not 1 <= k2 <= fmt.plaintext_block:
            raise CorruptFrameError(
                f"length byte {k2} is outside [1, {fmt.plaintext_block}]", nframes, offset
            )
        c = bytes_to_nat(digits)
        if c >= key.m:
            raise CorruptFrameError("block value is not below the modulus (corrupt input or wrong key)",
                                    nframes, offset)
        v = crypt_number(c, key.d, key.m)
        if v >= RADIX**k2:
            raise WrongKeyError(f"block does not decrypt to {k2} bytes (wrong key)", nframes, offset)
        out.write(nat_to_bytes(v, k2))
        nframes += 1
    logger.info("decrypted %d frames of %d bytes", nframes, fmt.frame_size)
    return nframes
