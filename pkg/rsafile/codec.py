#######################################################################
# Copyright (c) 2024-present, rsafile Development Team
# All rights reserved.
#
# This source code is licensed under a BSD-style license (found in the
# LICENSE.txt file in the root directory of this source tree)
#######################################################################

"""Byte strings as little-endian base-256 digits, and back."""

from rsafile.numtheory import _check_nat

RADIX = 256
"""Radix of the digit strings: one digit per byte."""


def bytes_to_nat(ds):
    """Return the number whose base-256 digits are `ds`, least significant first.

    Parameters
    ----------
    ds : bytes-like object
        The digits. An empty sequence gives 0.

    Examples
    --------
    >>> bytes_to_nat(b"")
    0
    >>> bytes_to_nat(b"\\x01\\x02")
    513
    >>> bytes_to_nat(b"A")
    65
    """
    return int.from_bytes(ds, "little")


def nat_to_bytes(v, width):
    """Return exactly `width` little-endian base-256 digits of `v`.

    Parameters
    ----------
    v : int
        The value, below ``256**width``.
    width : int
        The number of digits to emit. High digits are zero-padded.

    Raises
    ------
    OverflowError
        If :paramref:`v` does not fit in :paramref:`width` digits.

    Examples
    --------
    >>> nat_to_bytes(513, 2)
    b'\\x01\\x02'
    >>> nat_to_bytes(0, 3)
    b'\\x00\\x00\\x00'
    >>> nat_to_bytes(2790, 2)
    b'\\xe6\\n'
    """
    _check_nat("v", v)
    _check_nat("width", width)
    if v >= RADIX**width:
        raise OverflowError(f"{v} does not fit in {width} base-{RADIX} digits")
    return v.to_bytes(width, "little")


def byte_length(m):
    """Return the number of base-256 digits of `m`.

    That is the least `k` with ``m < 256**k``.

    Examples
    --------
    >>> byte_length(255), byte_length(256), byte_length(3233)
    (1, 2, 2)
    """
    _check_nat("m", m)
    if m == 0:
        raise ValueError("byte_length is undefined for 0")
    return (m.bit_length() + 7) // 8
