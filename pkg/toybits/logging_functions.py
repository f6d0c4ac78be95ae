"""Toybits logger.

All toybits messages go through the ``"toybits"`` logger. Soundness failures,
discarded rewrite steps and exhausted step limits are WARNING; removed scalars
and applied rewrite steps are INFO; single moves of the normal form procedure
are DEBUG. Only warnings are shown by default:

.. code-block:: python

    from toybits import set_toybits_logger_level

    set_toybits_logger_level("DEBUG")

Messages can be copied to a file, and the stream can be silenced while doing so:

.. code-block:: python

    from toybits.logging_functions import add_logging_to_file, logging_to_file

    add_logging_to_file("normalize.log", loglevel="DEBUG", remove_stream_handlers=True)

    with logging_to_file("rules.log"):
        ...  # handler is removed again on exit

"""
import logging
import sys
from contextlib import contextmanager
from typing import Iterator


LOGGER_NAME = "toybits"
DEFAULT_LEVEL = logging.WARNING

_formatter = logging.Formatter(
    '%(asctime)s:%(levelname)s:%(name)s:%(module)s:%(message)s')


def _level(loglevel) -> int:
    if isinstance(loglevel, int):
        return loglevel
    level = logging.getLevelName(loglevel.upper())
    if not isinstance(level, int):
        raise ValueError(f"Unknown logging level: {loglevel}")
    return level


def _init_logger(logger_name=LOGGER_NAME):
    """Attach a stdout handler at WARNING level to the toybits logger."""
    logger = logging.getLogger(logger_name)
    logger.setLevel(DEFAULT_LEVEL)
    handler = logging.StreamHandler(sys.stdout)
    handler.setLevel(DEFAULT_LEVEL)
    handler.setFormatter(_formatter)
    logger.addHandler(handler)
    logger.info("Completed configuring toybits logger.")


def set_toybits_logger_level(loglevel, logger_name=LOGGER_NAME):
    """Change the level of the toybits logger and of all its handlers.

    Parameters
    ----------
    loglevel
        Level name ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL') or number.
    logger_name
        Default is "toybits".
    """
    level = _level(loglevel)
    logger = logging.getLogger(logger_name)
    logger.setLevel(level)
    for handler in logger.handlers:
        handler.setLevel(level)


def add_logging_to_file(filename: str, loglevel="INFO",
                        remove_stream_handlers: bool = False,
                        logger_name=LOGGER_NAME) -> logging.FileHandler:
    """Write toybits log entries to ``filename`` and return the new handler.

    Parameters
    ----------
    filename
        File the entries are appended to.
    loglevel
        Lowest level written to the file.
    remove_stream_handlers
        Set to True to drop every non-file handler, so entries only go to files.
    logger_name
        Default is "toybits".
    """
    logger = logging.getLogger(logger_name)
    file_handler = logging.FileHandler(filename)
    file_handler.setLevel(_level(loglevel))
    file_handler.setFormatter(_formatter)
    logger.addHandler(file_handler)

    if remove_stream_handlers:
        for handler in list(logger.handlers):
            if not isinstance(handler, logging.FileHandler):
                logger.removeHandler(handler)
    return file_handler


@contextmanager
def logging_to_file(filename: str, loglevel="INFO", logger_name=LOGGER_NAME) -> Iterator[logging.FileHandler]:
    """Copy log entries to ``filename`` for the duration of a ``with`` block.

    The logger level is lowered to ``loglevel`` if needed and restored afterwards.
    """
    logger = logging.getLogger(logger_name)
    previous_level = logger.level
    logger.setLevel(min(previous_level, _level(loglevel)))
    handler = add_logging_to_file(filename, loglevel, logger_name=logger_name)
    try:
        yield handler
    finally:
        logger.removeHandler(handler)
        handler.close()
        logger.setLevel(previous_level)


def reset_toybits_logger(logger_name=LOGGER_NAME):
    """Drop all handlers and configure the toybits logger from scratch."""
    logger = logging.getLogger(logger_name)
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()
    _init_logger(logger_name)
