#!/usr/bin/env python3
"""Run every end-to-end demo scenario and report a combined exit status."""

import sys

from qfe.cli import DEMO_NAMES, main

if __name__ == "__main__":
    worst = 0
    for name in DEMO_NAMES:
        print(f"--- {name}")
        worst = max(worst, main(["demo", name]))
        print()
    sys.exit(worst)
