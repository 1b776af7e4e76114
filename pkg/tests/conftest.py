#######################################################################
# Copyright (c) 2024-present, rsafile Development Team
# All rights reserved.
#
# This source code is licensed under a BSD-style license (found in the
# LICENSE.txt file in the root directory of this source tree)
#######################################################################
import numpy as np
import pytest

import rsafile


# This still needs to pass the '-s' flag to pytest to see the output but anyways
@pytest.fixture(scope="session", autouse=True)
def setup_session():
    # This code will be executed before the test suite
    print()
    rsafile.print_versions()


def sieve(limit):
    """Boolean table of primality for ``0 <= n < limit`` (trial-division oracle)."""
    flags = np.ones(limit, dtype=bool)
    flags[:2] = False
    for i in range(2, int(limit**0.5) + 1):
        if flags[i]:
            flags[i * i :: i] = False
    return flags


@pytest.fixture(scope="session")
def prime_table():
    return sieve(100_000)


@pytest.fixture(scope="session")
def textbook_pair():
    # p=61, q=53: m=3233, phi=3120, 65537 = 17 (mod 3120), d = 2753
    m = 61 * 53
    return rsafile.RsaKeyPair(rsafile.PublicKey(65537, m), rsafile.PrivateKey(2753, m), 61, 53, 12)


@pytest.fixture(scope="session")
def pair64():
    _, pair = rsafile.keygen(64, 40, rsafile.LcgState.from_seed(2024))
    return pair
