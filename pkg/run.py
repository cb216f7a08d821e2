"""
Main entry point for the command-line application.

Creates the app with the application factory and runs one command, e.g.

    python run.py solve --delta 1 --epsilon 0.4 --amplitude 1.3 --omega 1.2924
    python run.py --config recipes/detuned_amp130.cfg
"""

import os
import sys

from driven_tls import create_app

# Get the configuration name from the environment variable or default to 'production'
config_name = os.getenv("DRIVEN_TLS_ENV", "production")
app = create_app(config_name)

if __name__ == "__main__":
    sys.exit(app.run())
