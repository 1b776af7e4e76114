#######################################################################
# Copyright (c) 2024-present, rsafile Development Team
# All rights reserved.
#
# This source code is licensed under a BSD-style license (found in the
# LICENSE.txt file in the root directory of this source tree)
#######################################################################

from textwrap import TextWrapper

import rsafile
from rsafile.filecipher import BlockFormat
from rsafile.rsa import RsaKeyPair


def info_text_report(items: list) -> str:
    keys = [k for k, v in items]
    max_key_len = max(len(k) for k in keys)
    report = ""
    for k, v in items:
        # Long decimals (moduli, exponents) are wrapped under their label
        wrapper = TextWrapper(
            width=96,
            initial_indent=k.ljust(max_key_len) + " : ",
            subsequent_indent=" " * max_key_len + " : ",
        )
        report += wrapper.fill(str(v)) + "\n"
    return report


def key_items(key) -> list:
    items = [("type", key.tag.value), ("bits", key.m.bit_length())]
    try:
        fmt = BlockFormat.from_modulus(key.m)
    except ValueError:
        items += [("block", "unsupported modulus size")]
    else:
        items += [
            ("plain block", f"{fmt.plaintext_block} bytes"),
            ("cipher frame", f"{fmt.frame_size} bytes"),
        ]
    name = "e" if key.tag is rsafile.Tag.PUBLIC else "d"
    items += [(name, key.exponent), ("m", key.m)]
    return items


def pair_items(pair: RsaKeyPair) -> list:
    return [
        ("bits", pair.bits),
        ("seed", "none (not reproducible)" if pair.seed is None else pair.seed),
        ("rounds", pair.rounds),
        ("p", pair.p),
        ("q", pair.q),
        ("e", pair.public.e),
        ("d", pair.private.d),
        ("m", pair.public.m),
    ]


def key_report(key) -> str:
    """Return a text report for a :class:`PublicKey` or :class:`PrivateKey`."""
    return info_text_report(key_items(key))


class InfoReporter:
    def __init__(self, obj):
        self.obj = obj

    def __repr__(self):
        if isinstance(self.obj, RsaKeyPair):
            return info_text_report(pair_items(self.obj))
        return key_report(self.obj)
