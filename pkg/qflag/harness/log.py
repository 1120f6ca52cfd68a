"""
Logging setup: stdlib logging routed through rich on stderr.
"""

from __future__ import annotations

import logging

from rich.console import Console
from rich.logging import RichHandler

LEVELS = {0: logging.WARNING, 1: logging.INFO}


def setup_logging(verbose: int = 0) -> None:
    """Configure the ``qflag`` logger once; -v gives INFO, -vv DEBUG."""
    level = LEVELS.get(verbose, logging.DEBUG)
    logger = logging.getLogger("qflag")
    logger.setLevel(level)
    if not any(isinstance(h, RichHandler) for h in logger.handlers):
        handler = RichHandler(console=Console(stderr=True), show_path=False, markup=False)
        handler.setFormatter(logging.Formatter("%(message)s"))
        logger.addHandler(handler)
