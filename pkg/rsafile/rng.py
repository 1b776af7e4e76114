#######################################################################
# Copyright (c) 2024-present, rsafile Development Team
# All rights reserved.
#
# This source code is licensed under a BSD-style license (found in the
# LICENSE.txt file in the root directory of this source tree)
#######################################################################

"""Seedable random sources.

Random states are immutable values threaded through calls: every draw
returns the advanced state together with the value drawn. A single state
must not be advanced from two threads at once; distinct states are
independent.
"""

from __future__ import annotations

import logging
import os
import secrets
import time
from abc import ABC, abstractmethod
from dataclasses import dataclass, replace

import rsafile

logger = logging.getLogger(__name__)

LCG_MODULUS = 2**64
"""Modulus of the linear congruential generator."""

LCG_MULTIPLIER = 6364136223846793005
"""Default LCG multiplier."""

LCG_INCREMENT = 1442695040888963407
"""Default LCG increment."""

_MASK64 = LCG_MODULUS - 1


class RandomState(ABC):
    """A source of 64-bit words."""

    @abstractmethod
    def next_word(self) -> tuple[RandomState, int]:
        """Return the advanced state and a word in ``[0, 2**64)``."""


@dataclass(frozen=True)
class LcgState(RandomState):
    """State of the linear congruential generator.

    The transition is ``state <- (a * state + c) mod 2**64``. `seed` is not
    used by the recurrence; it travels with the state so that keys can
    record where they came from.
    """

    state: int
    a: int = LCG_MULTIPLIER
    c: int = LCG_INCREMENT
    seed: int | None = None

    @classmethod
    def from_seed(cls, seed):
        """Create a state whose initial value is `seed` reduced modulo ``2**64``."""
        if isinstance(seed, bool) or not isinstance(seed, int) or seed < 0:
            raise ValueError(f"seed must be a non-negative int (got {seed!r})")
        return cls(state=seed & _MASK64, seed=seed)

    def next_word(self):
        return lcg_next(self)


class OsEntropyState(RandomState):
    """Random words from the operating system; not reproducible."""

    seed = None

    def next_word(self):
        return self, secrets.randbits(64)

    def __repr__(self):
        return "OsEntropyState()"


def lcg_step(s):
    """Apply one transition of the recurrence.

    Examples
    --------
    >>> lcg_step(LcgState(0)).state
    1442695040888963407
    """
    return replace(s, state=(s.a * s.state + s.c) & _MASK64)


def lcg_next(s):
    """Return the state two steps ahead and a 64-bit output word.

    Only the high 32 bits of each new state are used; the first step
    gives the high half of the word and the second step the low half.
    """
    s1 = lcg_step(s)
    s2 = lcg_step(s1)
    return s2, ((s1.state >> 32) << 32) | (s2.state >> 32)


def _check_bits(t):
    if isinstance(t, bool) or not isinstance(t, int):
        raise TypeError(f"bit count must be an int, not {type(t).__name__}")
    if t < 2:
        raise ValueError(f"bit count must be >= 2 (got {t})")


def _random_bits(s, t):
    nwords = -(-t // 64)
    value = 0
    for _ in range(nwords):
        s, word = s.next_word()
        value = (value << 64) | word
    return s, value & ((1 << t) - 1)


def random_nat_bits(s, t):
    """Draw a number with exactly `t` significant bits.

    Returns
    -------
    out : tuple
        The advanced state and a value in ``[2**(t-1), 2**t)``.

    Raises
    ------
    ValueError
        If :paramref:`t` is smaller than 2.

    Examples
    --------
    >>> _, v = random_nat_bits(LcgState.from_seed(1), 8)
    >>> 128 <= v < 256
    True
    """
    _check_bits(t)
    s, value = _random_bits(s, t)
    return s, value | (1 << (t - 1))


def random_odd_candidate(s, t):
    """Draw an odd number with exactly `t` significant bits.

    Examples
    --------
    >>> random_odd_candidate(LcgState.from_seed(5), 2)[1]
    3
    """
    s, value = random_nat_bits(s, t)
    return s, value | 1


def random_below(s, bound):
    """Draw a value uniformly from ``[0, bound)`` by rejection sampling."""
    if bound < 1:
        raise ValueError(f"bound must be >= 1 (got {bound})")
    if bound == 1:
        return s, 0
    nbits = (bound - 1).bit_length()
    while True:
        s, value = _random_bits(s, nbits)
        if value < bound:
            return s, value


def _seed_from_env():
    value = os.environ.get(rsafile.RSAFILE_SEED_ENVVAR)
    if not value:
        return None
    try:
        return int(value, 10)
    except ValueError:
        raise ValueError(f"{rsafile.RSAFILE_SEED_ENVVAR} must be a decimal integer, not {value!r}") from None


def new_state(rng=None, seed=None):
    """Return a fresh random state.

    Parameters
    ----------
    rng : :class:`Rng` (optional)
        The generator kind. The default is :py:obj:`Rng.LCG <Rng>`.
    seed : int (optional)
        Seed for the LCG. If not given, the ``RSAFILE_SEED`` environment
        variable is used, and failing that the system clock in nanoseconds.
        A seed cannot be combined with :py:obj:`Rng.OS <Rng>`.

    Returns
    -------
    out : :class:`RandomState`
    """
    rng = rsafile.Rng.LCG if rng is None else rsafile.Rng(rng)
    if rng is rsafile.Rng.OS:
        if seed is not None:
            raise ValueError("a seed cannot be used with the OS entropy source")
        return OsEntropyState()
    if seed is None:
        seed = _seed_from_env()
    if seed is None:
        seed = time.time_ns()
        logger.info("seeding LCG from the clock: %d", seed)
    return LcgState.from_seed(seed)
