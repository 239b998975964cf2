"""Run the command-line interface with ``python -m swtriangle``."""

import sys

from .cli import main

sys.exit(main())
