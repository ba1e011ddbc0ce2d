# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""ferkit utils."""

import hashlib
import json
import logging


def log_event(logger, action, extra=None, is_error=False, name="ferkit"):
    """Log a structured, key-sorted json event."""
    structured_msg = dict(name=name, action=action, **(extra or {}))
    structured_msg_str = json.dumps(structured_msg, sort_keys=True)
    if is_error:
        logger.error(structured_msg_str)
    else:
        logger.info(structured_msg_str)


def fingerprint(obj):
    """Return a short, stable hash of a json-serializable object."""
    payload = json.dumps(obj, sort_keys=True, default=str).encode("utf8")
    return hashlib.sha1(payload).hexdigest()[:12]


def attach_file_handler(logger_name, path, fmt, level="INFO"):
    """Route a named logger to ``path``, replacing earlier file handlers."""
    logger = logging.getLogger(logger_name)
    for handler in list(logger.handlers):
        if isinstance(handler, logging.FileHandler):
            logger.removeHandler(handler)
            handler.close()
    handler = logging.FileHandler(path, mode="w")
    handler.setFormatter(logging.Formatter(fmt))
    logger.addHandler(handler)
    logger.setLevel(level)
    logger.propagate = False
    return handler


def detach_file_handlers(logger_name):
    """Close and remove every file handler of a named logger."""
    logger = logging.getLogger(logger_name)
    for handler in list(logger.handlers):
        if isinstance(handler, logging.FileHandler):
            logger.removeHandler(handler)
            handler.close()
