"""
src/utils/log_utils.py
Logger factory shared by the command-line tools.
Input: logger name, optional JSON switch
Output: configured logging.Logger (plain text or JSON records via python-json-logger)
"""

import logging
import sys

from pythonjsonlogger.json import JsonFormatter

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
JSON_FIELDS = "%(asctime)s %(levelname)s %(name)s %(message)s"

_configured = {"json": None}


def configure_logging(json_format=False, level=logging.INFO):
    """Install a single stderr handler on the root 'pakstanley' logger.

    Calling it again with a different format swaps the handler, so the CLI can
    switch to JSON after argument parsing.
    """
    root = logging.getLogger("pakstanley")
    root.setLevel(level)
    if _configured["json"] == json_format and root.handlers:
        return root

    for handler in list(root.handlers):
        root.removeHandler(handler)

    handler = logging.StreamHandler(sys.stderr)
    if json_format:
        handler.setFormatter(JsonFormatter(JSON_FIELDS))
    else:
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
    root.addHandler(handler)
    root.propagate = False
    _configured["json"] = json_format
    return root


def get_logger(name):
    """Child logger under 'pakstanley'; configures plain-text output on first use."""
    if not logging.getLogger("pakstanley").handlers:
        configure_logging(json_format=False, level=logging.WARNING)
    return logging.getLogger(f"pakstanley.{name}")
