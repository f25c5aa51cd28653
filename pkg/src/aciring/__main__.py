"""Allow ``python -m aciring`` to run the command-line interface."""

import sys

from .cli import main

sys.exit(main())
