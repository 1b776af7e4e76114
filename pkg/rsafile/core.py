#######################################################################
# Copyright (c) 2024-present, rsafile Development Team
# All rights reserved.
#
# This source code is licensed under a BSD-style license (found in the
# LICENSE.txt file in the root directory of this source tree)
#######################################################################
import contextlib
import logging
import os
import platform
import sys
import tempfile

import cpuinfo

import rsafile
from rsafile.filecipher import decrypt_stream, encrypt_stream

logger = logging.getLogger(__name__)

_info_handler = None
"""Handler installed by :func:`set_info`, if any."""


def _check_key_kind(key, tag):
    if key.tag is not tag:
        raise TypeError(f"a {tag.value} key is needed, not {key.tag.value}")


def _check_distinct(src, dst):
    if os.path.exists(dst) and os.path.samefile(src, dst):
        raise ValueError(f"input and output are the same file: {os.fspath(dst)!r}")


@contextlib.contextmanager
def _replacing(dst):
    """Open a scratch file next to `dst` that replaces it only on success."""
    fd, tmp = tempfile.mkstemp(prefix=".rsafile-", dir=os.path.dirname(os.path.abspath(dst)))
    try:
        with os.fdopen(fd, "wb") as fout:
            yield fout
        os.replace(tmp, dst)
    except BaseException:
        with contextlib.suppress(OSError):
            os.unlink(tmp)
        raise


def encrypt_file(key, src, dst):
    """Encrypt the file at `src` into `dst`.

    Parameters
    ----------
    key : :class:`PublicKey <rsafile.rsa.PublicKey>`
        The public key.
    src : str | pathlib.Path
        The plaintext file.
    dst : str | pathlib.Path
        The ciphertext file. It is overwritten if it exists, and left
        untouched if encryption fails.

    Returns
    -------
    out : int
        The number of frames written.

    Examples
    --------
    >>> key = rsafile.PublicKey(65537, 3233)
    >>> with open("plain.bin", "wb") as f:
    ...     _ = f.write(b"hello")
    >>> rsafile.encrypt_file(key, "plain.bin", "cipher.bin")
    5
    >>> os.path.getsize("cipher.bin")
    15
    >>> os.remove("plain.bin"); os.remove("cipher.bin")

    See also
    --------
    :func:`~rsafile.decrypt_file`
    :func:`~rsafile.filecipher.encrypt_stream`
    """
    _check_key_kind(key, rsafile.Tag.PUBLIC)
    _check_distinct(src, dst)
    with open(src, "rb") as fin, _replacing(dst) as fout:
        return encrypt_stream(fin, fout, key)


def decrypt_file(key, src, dst):
    """Decrypt the file at `src` into `dst`.

    Parameters
    ----------
    key : :class:`PrivateKey <rsafile.rsa.PrivateKey>`
        The private key.
    src : str | pathlib.Path
        The ciphertext file.
    dst : str | pathlib.Path
        The plaintext file. It is overwritten if it exists, and left
        untouched if any frame fails to decrypt.

    Returns
    -------
    out : int
        The number of frames read.

    See also
    --------
    :func:`~rsafile.encrypt_file`
    :func:`~rsafile.filecipher.decrypt_stream`
    """
    _check_key_kind(key, rsafile.Tag.PRIVATE)
    _check_distinct(src, dst)
    with open(src, "rb") as fin, _replacing(dst) as fout:
        return decrypt_stream(fin, fout, key)


class _StderrHandler(logging.StreamHandler):
    """A handler writing to whatever `sys.stderr` is when a record is emitted."""

    @property
    def stream(self):
        return sys.stderr

    @stream.setter
    def stream(self, value):
        pass


def set_info(enabled=True):
    """Send the library diagnostics to stderr (or stop sending them).

    This is what the ``RSAFILE_INFO`` environment variable turns on at
    import time.
    """
    global _info_handler

    pkg_logger = logging.getLogger("rsafile")
    if enabled and _info_handler is None:
        _info_handler = _StderrHandler()
        _info_handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))
        pkg_logger.addHandler(_info_handler)
        pkg_logger.setLevel(logging.INFO)
    elif not enabled and _info_handler is not None:
        pkg_logger.removeHandler(_info_handler)
        pkg_logger.setLevel(logging.NOTSET)
        _info_handler = None


def info_from_env():
    value = os.environ.get(rsafile.RSAFILE_INFO_ENVVAR, "")
    return value.strip().lower() in ("1", "true", "yes", "on")


def os_release_pretty_name():
    try:
        return platform.freedesktop_os_release().get("PRETTY_NAME")
    except OSError:
        return None


def get_cpu_info():
    return cpuinfo.get_cpu_info()


def print_versions():
    """Print the versions of the software rsafile relies on, and the machine it runs on."""
    import msgpack

    print("-=" * 38)
    print(f"rsafile version: {rsafile.__version__}")
    print(f"msgpack version: {'.'.join(str(v) for v in msgpack.version)}")
    print(f"Python version: {sys.version}")
    (sysname, nodename, release, version, machine, processor) = platform.uname()
    print(f"Platform: {sysname}-{release}-{machine} ({version})")
    if sysname == "Linux":
        distro = os_release_pretty_name()
        if distro:
            print(f"Linux dist: {distro}")
    cpu = get_cpu_info()
    processor = cpu.get("brand_raw") or processor or "not recognized"
    print(f"Processor: {processor}")
    print(f"Detected cores: {cpu.get('count', 'unknown')}")
    print(f"Integer digit size: {sys.int_info.bits_per_digit} bits")
    print("-=" * 38)
