"""Entry point for python -m rackhom."""

import sys

from rackhom.cli import main

sys.exit(main())
