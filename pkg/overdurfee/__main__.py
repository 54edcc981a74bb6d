"""Entry point for ``python -m overdurfee``."""

import sys

from overdurfee.cli import main

if __name__ == "__main__":
    sys.exit(main())
