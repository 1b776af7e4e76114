import sys

from rsafile.cli import main

sys.exit(main())
