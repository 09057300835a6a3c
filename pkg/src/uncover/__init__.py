"""
Command-line application factory for the uncover workbench.
"""

import logging
import sys
from typing import Optional

import click

from .config import config


def configure_logging(level: str) -> None:
    """Send log records to standard error at the configured level."""
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.INFO),
        stream=sys.stderr,
        format='%(asctime)s %(levelname)s %(name)s: %(message)s',
        force=True,
    )


def create_app(config_name: Optional[str] = None) -> click.Group:
    """Create and configure the command-line application."""
    if config_name is None:
        config_name = 'default'
    settings = config[config_name]

    configure_logging(settings.LOG_LEVEL)

    @click.group(context_settings={'obj': settings, 'help_option_names': ['-h', '--help']})
    @click.version_option(settings.VERSION, prog_name='uncover')
    def app():
        """Random vertex-uncovering workbench."""

    # CLI commands
    from .cli import register_commands
    register_commands(app)

    return app
