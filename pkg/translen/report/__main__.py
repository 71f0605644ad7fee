#!/usr/bin/env python
"""
Entry point for ``python -m translen.report``.
"""

import sys

from translen.report.report_cli import main

if __name__ == "__main__":
    sys.exit(main())
