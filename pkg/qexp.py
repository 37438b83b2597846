"""
qexp - Entry Point

Minimal entry point that dispatches to the cli package.
Run with: python qexp.py gap --pauli2
"""

import sys

from cli.main import main

__all__ = ["main"]

if __name__ == "__main__":
    sys.exit(main())
