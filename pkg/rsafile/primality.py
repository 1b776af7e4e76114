#######################################################################
# Copyright (c) 2024-present, rsafile Development Team
# All rights reserved.
#
# This source code is licensed under a BSD-style license (found in the
# LICENSE.txt file in the root directory of this source tree)
#######################################################################

"""Miller-Rabin probable-prime testing and random prime generation."""

import logging
from typing import NamedTuple

from rsafile.numtheory import _check_nat, gcd, mod_pow
from rsafile.rng import random_below, random_odd_candidate

logger = logging.getLogger(__name__)


class MrDecomposition(NamedTuple):
    """``n - 1 == 2**j * q`` with `q` odd."""

    q: int
    j: int


class PrimeGenParams(NamedTuple):
    """Bit size of the wanted prime and number of Miller-Rabin rounds."""

    bits: int
    rounds: int


def _small_primes(limit):
    sieve = bytearray([1]) * limit
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(limit**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytes(len(range(i * i, limit, i)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


# Odd primes used to throw away candidates before running Miller-Rabin
_SIEVE_PRIMES = _small_primes(2000)[1:]


def _check_odd(n):
    _check_nat("n", n)
    if n < 3 or n % 2 == 0:
        raise ValueError(f"n must be an odd number >= 3 (got {n})")


def _check_params(params):
    if params.bits < 3:
        raise ValueError(f"bits must be >= 3 (got {params.bits})")
    if params.rounds < 1:
        raise ValueError(f"rounds must be >= 1 (got {params.rounds})")


def decompose(n):
    """Split ``n - 1`` into an odd part and a power of two.

    Parameters
    ----------
    n : int
        An odd number, at least 3.

    Returns
    -------
    out : :class:`MrDecomposition`
        ``(q, j)`` with ``n - 1 == 2**j * q``, `q` odd and ``j >= 1``.

    Examples
    --------
    >>> decompose(25)
    MrDecomposition(q=3, j=3)
    >>> decompose(1025)
    MrDecomposition(q=1, j=10)
    """
    _check_odd(n)
    q, j = n - 1, 0
    while q % 2 == 0:
        q //= 2
        j += 1
    return MrDecomposition(q, j)


def mr_round(n, x):
    """Run one Miller-Rabin round on `n` with base `x`.

    ``y = x**q % n`` is computed once; if it is 1 the round passes. Otherwise
    `y` is squared up to `j` times: reaching ``n - 1`` passes, while reaching
    1 first (or never reaching ``n - 1``) proves `n` composite.

    Parameters
    ----------
    n : int
        The odd number under test, at least 3.
    x : int
        The base, in ``[2, n - 2]``.

    Returns
    -------
    out : bool
        False if `x` witnesses that `n` is composite, True otherwise.

    Examples
    --------
    >>> mr_round(7, 2)
    True
    >>> mr_round(9, 2)
    False
    >>> mr_round(2047, 2)  # 23 * 89, base 2 is a strong liar
    True
    """
    _check_odd(n)
    _check_nat("x", x)
    if not 2 <= x <= n - 2:
        raise ValueError(f"base must be in [2, {n - 2}] (got {x})")
    q, j = decompose(n)
    y = mod_pow(x, q, n)
    if y == 1:
        return True
    for _ in range(j):
        if y == n - 1:
            return True
        if y == 1:
            return False
        y = (y * y) % n
    return False


def is_probable_prime(n, rounds, s):
    """Test `n` with `rounds` Miller-Rabin rounds on random bases.

    2 and 3 are prime without testing; other even numbers and numbers below
    2 are not. A base sharing a factor with `n` classifies it as composite
    straight away.

    Parameters
    ----------
    n : int
        The number under test.
    rounds : int
        The number of random bases to try.
    s : :class:`RandomState <rsafile.rng.RandomState>`
        The random state the bases are drawn from.

    Returns
    -------
    out : tuple
        The advanced random state and the verdict.
    """
    _check_nat("n", n)
    if rounds < 1:
        raise ValueError(f"rounds must be >= 1 (got {rounds})")
    if n in (2, 3):
        return s, True
    if n < 2 or n % 2 == 0:
        return s, False
    for _ in range(rounds):
        s, r = random_below(s, n - 3)
        x = r + 2
        if gcd(x, n) != 1:
            return s, False
        if not mr_round(n, x):
            return s, False
    return s, True


def _sieved_out(n):
    for p in _SIEVE_PRIMES:
        if p * p > n:
            return False
        if n % p == 0:
            return True
    return False


def generate_prime(params, s):
    """Draw random odd candidates until one passes the test.

    Every failed candidate is replaced by a completely new draw. Candidates
    with a small odd factor are dropped before any Miller-Rabin round.

    Parameters
    ----------
    params : :class:`PrimeGenParams`
        The bit size (at least 3) and the number of rounds (at least 1).
    s : :class:`RandomState <rsafile.rng.RandomState>`
        The random state.

    Returns
    -------
    out : tuple
        The advanced random state and a probable prime with exactly
        ``params.bits`` significant bits.

    Examples
    --------
    >>> from rsafile.rng import LcgState
    >>> _, p = generate_prime(PrimeGenParams(bits=3, rounds=1), LcgState.from_seed(0))
    >>> p in (5, 7)
    True
    """
    _check_params(params)
    tried = 0
    while True:
        s, candidate = random_odd_candidate(s, params.bits)
        tried += 1
        if _sieved_out(candidate):
            continue
        s, passed = is_probable_prime(candidate, params.rounds, s)
        if passed:
            logger.info("found a %d-bit prime after %d candidates", params.bits, tried)
            return s, candidate
