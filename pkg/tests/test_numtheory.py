#######################################################################
# Copyright (c) 2024-present, rsafile Development Team
# All rights reserved.
#
# This source code is licensed under a BSD-style license (found in the
# LICENSE.txt file in the root directory of this source tree)
#######################################################################

import hypothesis.strategies as st
import pytest
from hypothesis import given

import rsafile


def naive_pow(x, n, m):
    result = 1 % m
    for _ in range(n):
        result = (result * x) % m
    return result


@pytest.mark.parametrize(
    "a, b, expected",
    [
        (12, 18, 6),
        (7, 0, 7),
        (0, 7, 7),
        (65537, 3120, 1),
    ],
)
def test_gcd(a, b, expected):
    assert rsafile.gcd(a, b) == expected


def test_gcd_zero_zero():
    with pytest.raises(ValueError):
        rsafile.gcd(0, 0)


@pytest.mark.parametrize("a, b", [(-1, 3), (3, -1)])
def test_negative_arguments(a, b):
    with pytest.raises(ValueError):
        rsafile.gcd(a, b)
    with pytest.raises(ValueError):
        rsafile.mod_pow(a, b, 7)


def test_non_int_arguments():
    with pytest.raises(TypeError):
        rsafile.mod_pow(2.0, 3, 7)
    with pytest.raises(TypeError):
        rsafile.mod_inverse(True, 7)


def _common_divisor_check(limit):
    # Every d in [1, limit] divides 0
    divisors = [list(range(1, limit + 1))]
    divisors += [[d for d in range(1, n + 1) if n % d == 0] for n in range(1, limit + 1)]
    for a in range(limit + 1):
        for b in range(limit + 1):
            if a == 0 and b == 0:
                continue
            g = rsafile.gcd(a, b)
            assert a % g == 0 and b % g == 0
            common = [d for d in divisors[a] if b % d == 0]
            assert all(g % d == 0 for d in common)


def test_gcd_divisors():
    _common_divisor_check(60)


@pytest.mark.heavy
def test_gcd_divisors_exhaustive():
    _common_divisor_check(500)


@pytest.mark.parametrize(
    "a, b, expected",
    [
        (3, 7, 5),
        (1, 17, 1),
        (17, 3120, 2753),
        (65537, 3120, 2753),
        (10, 7, 5),
    ],
)
def test_mod_inverse(a, b, expected):
    assert rsafile.mod_inverse(a, b) == expected


@pytest.mark.parametrize("a, b", [(2, 4), (0, 5), (6, 9), (3, 72)])
def test_mod_inverse_not_invertible(a, b):
    with pytest.raises(rsafile.NotInvertibleError):
        rsafile.mod_inverse(a, b)


@pytest.mark.parametrize("b", [0, 1])
def test_mod_inverse_small_modulus(b):
    with pytest.raises(ValueError):
        rsafile.mod_inverse(1, b)


def _inverse_check(limit):
    for b in range(2, limit + 1):
        for a in range(1, b):
            if rsafile.gcd(a, b) != 1:
                continue
            r = rsafile.mod_inverse(a, b)
            assert 0 <= r < b
            assert (a * r) % b == 1


def test_mod_inverse_oracle():
    _inverse_check(200)


@pytest.mark.heavy
def test_mod_inverse_oracle_exhaustive():
    _inverse_check(2000)


@given(st.integers(min_value=2, max_value=2**1024), st.data())
def test_mod_inverse_large(b, data):
    a = data.draw(st.integers(min_value=1, max_value=b - 1).filter(lambda x: rsafile.gcd(x, b) == 1))
    assert (a * rsafile.mod_inverse(a, b)) % b == 1


@pytest.mark.parametrize(
    "x, n, m, expected",
    [
        (5, 0, 13, 1),
        (2, 10, 1000, 24),
        (65, 17, 3233, 2790),
        (0, 0, 2, 1),
        (0, 5, 7, 0),
        (123456, 1, 100, 56),
    ],
)
def test_mod_pow(x, n, m, expected):
    assert rsafile.mod_pow(x, n, m) == expected


@pytest.mark.parametrize("m", [0, 1])
def test_mod_pow_small_modulus(m):
    with pytest.raises(ValueError):
        rsafile.mod_pow(3, 2, m)


def test_mod_pow_naive_oracle():
    for m in range(2, 65):
        for x in range(64):
            for n in range(64):
                r = rsafile.mod_pow(x, n, m)
                assert r == naive_pow(x, n, m)
                assert r < m


@given(
    st.integers(min_value=0, max_value=2**10 - 1),
    st.integers(min_value=0, max_value=2**10 - 1),
    st.integers(min_value=2, max_value=2**10),
)
def test_mod_pow_small_ranges(x, n, m):
    assert rsafile.mod_pow(x, n, m) == naive_pow(x, n, m)


@given(
    st.integers(min_value=0, max_value=2**2048),
    st.integers(min_value=0, max_value=2**2048),
    st.integers(min_value=2, max_value=2**2048),
)
def test_mod_pow_large(x, n, m):
    r = rsafile.mod_pow(x, n, m)
    assert r == pow(x, n, m)
    assert 0 <= r < m
