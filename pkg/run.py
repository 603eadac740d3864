#!/usr/bin/env python
"""Script to run the octsum-verify command line."""

import sys

from octsum.cli.routes import main


if __name__ == "__main__":
    sys.exit(main())
