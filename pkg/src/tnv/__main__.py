"""Allow ``python -m tnv``."""

import sys

from tnv.cli import main

sys.exit(main())
