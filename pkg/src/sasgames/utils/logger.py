import logging
import os
from typing import Optional, Union

LOGGING_ENV = "SASGAMES_LOGGING_LEVEL"


def setup_logging(
    level: Optional[Union[int, str]] = None, log_file: Optional[str] = None
):
    """
    Route log records to stderr (and optionally a file).

    The level defaults to `$SASGAMES_LOGGING_LEVEL`, then WARNING.
    """
    if level is None:
        level = os.environ.get(LOGGING_ENV, "WARNING")
    if isinstance(level, str):
        name = level.upper()
        level = logging.getLevelName(name)
        if not isinstance(level, int):
            raise ValueError(f"Unknown logging level '{name}'")

    # Clear existing handlers
    logging.root.handlers = []
    logging.root.setLevel(level)

    formatter = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    )

    handlers = []
    if log_file:
        fh = logging.FileHandler(log_file)
        fh.setFormatter(formatter)
        handlers.append(fh)

    ch = logging.StreamHandler()
    ch.setFormatter(formatter)
    handlers.append(ch)

    for handler in handlers:
        logging.root.addHandler(handler)
