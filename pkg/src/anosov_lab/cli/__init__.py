"""Command-line interface and the classification report."""

from .main import build_parser, main
from .report import build_report, render_table

__all__ = ["build_parser", "build_report", "main", "render_table"]
