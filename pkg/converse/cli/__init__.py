from converse.cli.app import ConverseApp, build_parser, main, render_text
from converse.cli.schemas import RunReport

__all__ = ["ConverseApp", "RunReport", "build_parser", "main", "render_text"]
