#######################################################################
# Copyright (c) 2024-present, rsafile Development Team
# All rights reserved.
#
# This source code is licensed under a BSD-style license (found in the
# LICENSE.txt file in the root directory of this source tree)
#######################################################################

"""Integer helpers: gcd, modular inverse and modular exponentiation.

Python's ``int`` is the arbitrary-precision natural number type used all
over rsafile; the functions here only check that their arguments are
non-negative integers.
"""

import math


class NotInvertibleError(ValueError):
    """Raised when a number has no inverse modulo another one."""


def _check_nat(name, value):
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"{name} must be an int, not {type(value).__name__}")
    if value < 0:
        raise ValueError(f"{name} must be non-negative (got {value})")


def gcd(a, b):
    """Return the greatest common divisor of `a` and `b`.

    Parameters
    ----------
    a, b : int
        Non-negative integers, not both zero.

    Returns
    -------
    out : int
        The greatest common divisor. ``gcd(a, 0) == a``.

    Raises
    ------
    ValueError
        If both :paramref:`a` and :paramref:`b` are zero.

    Examples
    --------
    >>> gcd(12, 18)
    6
    >>> gcd(7, 0)
    7
    >>> gcd(65537, 3120)
    1
    """
    _check_nat("a", a)
    _check_nat("b", b)
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    return math.gcd(a, b)


def mod_inverse(a, b):
    """Return the inverse of `a` modulo `b`.

    The inverse is computed with the extended Euclid algorithm, carrying only
    the coefficient of `a`: at every step ``x2`` is the coefficient of the
    original `a` and is updated as ``x2 - (a // b) * x1`` before both
    accumulators swap. The signed result is brought into ``[0, b)`` once, at
    the end.

    Parameters
    ----------
    a : int
        The number to invert.
    b : int
        The modulus, at least 2.

    Returns
    -------
    out : int
        The value `x` in ``[0, b)`` with ``(a * x) % b == 1``.

    Raises
    ------
    ValueError
        If :paramref:`b` is smaller than 2.
    NotInvertibleError
        If ``gcd(a, b) != 1``.

    Examples
    --------
    >>> mod_inverse(3, 7)
    5
    >>> mod_inverse(1, 17)
    1
    >>> mod_inverse(17, 3120)
    2753
    """
    _check_nat("a", a)
    _check_nat("b", b)
    if b < 2:
        raise ValueError(f"modulus must be >= 2 (got {b})")
    r0, r1 = a, b
    x1, x2 = 0, 1
    while r1 != 0:
        r0, r1, x1, x2 = r1, r0 % r1, x2 - (r0 // r1) * x1, x1
    if r0 != 1:
        raise NotInvertibleError(f"{a} is not invertible modulo {b} (gcd is {r0})")
    return x2 % b


def mod_pow(x, n, m):
    """Return ``x**n % m`` by square-and-multiply.

    The exponent is consumed from its least significant bit: `x` is squared
    and `n` halved on every step, and the current power of `x` is multiplied
    into the result whenever `n` is odd.

    Parameters
    ----------
    x : int
        The base.
    n : int
        The exponent. ``n == 0`` gives 1.
    m : int
        The modulus, at least 2.

    Returns
    -------
    out : int
        The residue in ``[0, m)``.

    Raises
    ------
    ValueError
        If :paramref:`m` is smaller than 2.

    Examples
    --------
    >>> mod_pow(5, 0, 13)
    1
    >>> mod_pow(2, 10, 1000)
    24
    >>> mod_pow(65, 17, 3233)
    2790
    """
    _check_nat("x", x)
    _check_nat("n", n)
    _check_nat("m", m)
    if m < 2:
        raise ValueError(f"modulus must be >= 2 (got {m})")
    result = 1
    x %= m
    while n > 0:
        if n & 1:
            result = (result * x) % m
        x = (x * x) % m
        n >>= 1
    return result
