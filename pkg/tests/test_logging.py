# -*- coding: utf-8 -*-
import logging
import os
import pytest
from toybits.logging_functions import (add_logging_to_file, logging_to_file,
                                       reset_toybits_logger,
                                       set_toybits_logger_level)


def test_initial_logging(caplog, capsys):
    """Test logging functionality."""
    reset_toybits_logger()
    logger = logging.getLogger("toybits")
    logger.info("info test")
    logger.warning("warning test")
    assert logger.name == "toybits", "Expected different logger name"
    assert logger.getEffectiveLevel() == 30, "Expected different logging level"
    assert "info test" not in caplog.text, "Info log should not be shown."
    assert "warning test" in caplog.text, "Warning log should have been shown."
    assert "warning test" in capsys.readouterr().out, \
        "Warning log should have been shown to stderr/stdout."
    reset_toybits_logger()


def test_set_and_reset_toybits_logger_level(caplog):
    """Test logging functionality."""
    reset_toybits_logger()
    logger = logging.getLogger("toybits")
    set_toybits_logger_level("INFO")
    logger.debug("debug test")
    logger.info("info test")

    assert logger.getEffectiveLevel() == 20, "Expected different logging level"
    assert "debug test" not in caplog.text, "Debug log should not be shown."
    assert "info test" in caplog.text, "Info log should have been shown."

    reset_toybits_logger()
    assert logger.getEffectiveLevel() == 30, "Expected different logging level"


def test_set_toybits_logger_level_unknown():
    with pytest.raises(ValueError) as msg:
        set_toybits_logger_level("LOUD")
    assert "Unknown logging level" in str(msg.value), "Expected different exception message."


def test_add_logging_to_file(tmp_path, caplog, capsys):
    """Test writing logs to file."""
    reset_toybits_logger()
    set_toybits_logger_level("INFO")
    filename = os.path.join(tmp_path, "test.log")
    add_logging_to_file(filename)
    logger = logging.getLogger("toybits")
    logger.info("test message no.1")

    expected_log_entry = "test message no.1"
    assert expected_log_entry in caplog.text, "Expected different log message."
    assert expected_log_entry in capsys.readouterr().out, \
        "Expected different log message in output (stdout/stderr)."

    expected_log_entry = "INFO:toybits:test_logging:test message no.1"
    assert len(logger.handlers) == 2, "Expected two Handler"
    with open(filename, "r", encoding="utf-8") as file:
        logs = file.read()
    assert expected_log_entry in logs, "Expected different log file content"
    reset_toybits_logger()


def test_add_logging_to_file_only_file(tmp_path, capsys):
    """Test writing logs to file."""
    reset_toybits_logger()
    set_toybits_logger_level("INFO")
    filename = os.path.join(tmp_path, "test.log")
    add_logging_to_file(filename, remove_stream_handlers=True)
    logger = logging.getLogger("toybits")
    logger.info("test message no.1")

    assert len(logger.handlers) == 1, "Expected only one Handler"
    assert "test message no.1" not in capsys.readouterr().out, "Did not expect log message"
    with open(filename, "r", encoding="utf-8") as file:
        logs = file.read()
    assert "INFO:toybits:test_logging:test message no.1" in logs, "Expected different log file content"
    reset_toybits_logger()


def test_logging_to_file_is_temporary(tmp_path):
    reset_toybits_logger()
    filename = os.path.join(tmp_path, "block.log")
    logger = logging.getLogger("toybits")
    with logging_to_file(filename, "DEBUG"):
        assert len(logger.handlers) == 2, "Expected a file handler inside the block"
        logger.debug("inside")
    logger.debug("outside")

    assert len(logger.handlers) == 1, "Expected the file handler to be removed"
    assert logger.getEffectiveLevel() == 30, "Expected the level to be restored"
    with open(filename, "r", encoding="utf-8") as file:
        logs = file.read()
    assert "DEBUG:toybits:test_logging:inside" in logs
    assert "outside" not in logs
    reset_toybits_logger()
