#######################################################################
# Copyright (c) 2024-present, rsafile Development Team
# All rights reserved.
#
# This source code is licensed under a BSD-style license (found in the
# LICENSE.txt file in the root directory of this source tree)
#######################################################################

import hypothesis.strategies as st
import numpy as np
import pytest
from hypothesis import given

import rsafile


@pytest.mark.parametrize(
    "ds, expected",
    [
        (b"", 0),
        (b"\x00", 0),
        (b"\x01\x02", 513),
        (b"\xff\xff", 65535),
        (b"\x00\x00\x01", 65536),
        (b"\xe6\x0a", 2790),
    ],
)
def test_bytes_to_nat(ds, expected):
    assert rsafile.bytes_to_nat(ds) == expected


def test_bytes_to_nat_leading_zero_digits():
    # Zero digits at the high end do not change the value
    assert rsafile.bytes_to_nat(b"\x07" + bytes(100)) == 7


@pytest.mark.parametrize(
    "v, width, expected",
    [
        (0, 0, b""),
        (0, 3, b"\x00\x00\x00"),
        (513, 2, b"\x01\x02"),
        (513, 4, b"\x01\x02\x00\x00"),
        (255, 1, b"\xff"),
        (2790, 2, b"\xe6\x0a"),
    ],
)
def test_nat_to_bytes(v, width, expected):
    assert rsafile.nat_to_bytes(v, width) == expected


@pytest.mark.parametrize("v, width", [(1, 0), (256, 1), (65536, 2), (2**64, 8)])
def test_nat_to_bytes_overflow(v, width):
    with pytest.raises(OverflowError):
        rsafile.nat_to_bytes(v, width)


def test_nat_to_bytes_negative():
    with pytest.raises(ValueError):
        rsafile.nat_to_bytes(-1, 4)


@pytest.mark.parametrize(
    "m, expected",
    [
        (1, 1),
        (255, 1),
        (256, 2),
        (3233, 2),
        (65535, 2),
        (65536, 3),
        (2**1024 - 1, 128),
        (2**1024, 129),
    ],
)
def test_byte_length(m, expected):
    assert rsafile.byte_length(m) == expected


def test_byte_length_bounds():
    for k in range(1, 300):
        assert rsafile.byte_length(256 ** (k - 1)) == k
        assert rsafile.byte_length(256**k - 1) == k


def test_byte_length_zero():
    with pytest.raises(ValueError):
        rsafile.byte_length(0)


@given(st.binary(max_size=300))
def test_digits_roundtrip(ds):
    assert rsafile.nat_to_bytes(rsafile.bytes_to_nat(ds), len(ds)) == ds


@given(st.integers(min_value=0, max_value=2**2048), st.integers(min_value=0, max_value=16))
def test_value_roundtrip(v, extra):
    width = (v.bit_length() + 7) // 8 + extra
    assert rsafile.bytes_to_nat(rsafile.nat_to_bytes(v, width)) == v


def test_random_digit_strings():
    rng = np.random.default_rng(1234)
    widths = rng.integers(0, 65, size=10**4)
    for width in widths:
        ds = rng.integers(0, 256, size=width, dtype=np.uint8).tobytes()
        v = rsafile.bytes_to_nat(ds)
        assert v < 256 ** int(width)
        assert rsafile.nat_to_bytes(v, int(width)) == ds
