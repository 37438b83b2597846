"""Command-line front end for the toolkit."""

from .main import main
from .parser import build_parser

__all__ = ["main", "build_parser"]
