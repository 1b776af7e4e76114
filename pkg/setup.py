#######################################################################
# Copyright (c) 2024-present, rsafile Development Team
# All rights reserved.
#
# This source code is licensed under a BSD-style license (found in the
# LICENSE.txt file in the root directory of this source tree)
#######################################################################

from setuptools import setup

# rsafile version
VERSION = open("VERSION").read().strip()
# Create the version.py file
open("rsafile/version.py", "w").write(f'__version__ = "{VERSION}"\n')

setup(
    version=VERSION,
    packages=["rsafile"],
    package_dir={"rsafile": "rsafile"},
)
