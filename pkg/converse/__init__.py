"""Converse theorem verification engine - application factory"""

from typing import Optional

from converse.config import BaseConfig


def create_app(config: Optional[BaseConfig] = None):
    """Create the command-line application.

    Logging is configured per run from the (possibly file-overridden)
    settings, so nothing global happens here.
    """
    from converse.cli import ConverseApp

    return ConverseApp(config)
