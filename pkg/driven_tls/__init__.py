"""
Driven two-level system: CHRW dynamics, closed-form baselines, exact
integration and spectral analysis behind a command-line front end.
"""

import logging

from config import config

from .extensions import configure_logging

logger = logging.getLogger(__name__)


class App:
    """Configured application: a config mapping plus registered commands."""

    def __init__(self, import_name):
        self.import_name = import_name
        self.config = {}
        self.commands = {}

    def config_from_object(self, obj):
        for key in dir(obj):
            if key.isupper():
                self.config[key] = getattr(obj, key)

    def register_command(self, name, module):
        """Register a command module exposing register(subparsers)."""
        self.commands[name] = module

    def run(self, argv=None, stdout=None, stderr=None):
        """Run one command line and return its exit code."""
        from .cli import main

        return main(self, argv, stdout=stdout, stderr=stderr)


def create_app(config_name="production"):
    """
    Application factory.

    Loads the named configuration, configures logging and registers the
    command modules.
    """
    app = App(__name__)
    app.config_from_object(config[config_name])

    configure_logging(app.config["LOG_LEVEL"])

    from .cli import register_commands

    register_commands(app)
    logger.debug("Created app with %s configuration", config_name)
    return app
