# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Dataset exceptions."""

from ferkit.errors import FerKitException


class DatasetException(FerKitException):
    """Base exception for dataset ingestion errors."""


class PixelParseError(DatasetException):
    """A pixels field cannot be parsed into an image."""

    def __init__(self, row, reason):
        """Constructor."""
        self.row = row
        self.reason = reason
        super().__init__(
            message="Row {0}: {1}".format(
                row if row is not None else "?", reason
            )
        )


class VoteParseError(DatasetException):
    """A FERplus vote cell is not a non-negative integer."""

    def __init__(self, row, column, value):
        """Constructor."""
        self.row = row
        self.column = column
        self.value = value
        super().__init__(
            message="Row {0}: vote {1} is not a count: {2!r}".format(
                row, column, value
            )
        )


class HeaderError(DatasetException):
    """CSV header does not match the expected columns."""

    def __init__(self, path, expected, actual):
        """Constructor."""
        self.expected = list(expected)
        self.actual = list(actual)
        super().__init__(
            message="Malformed header in {0}: expected {1}, got {2}".format(
                path, ",".join(self.expected), ",".join(self.actual)
            )
        )


class RowCountMismatch(DatasetException):
    """Pixel and vote files have a different number of rows."""

    message = "[ROW COUNT MISMATCH]"


class UnreadableImageError(DatasetException):
    """An image file cannot be decoded."""

    message = "[UNREADABLE IMAGE]"


class InvalidBatchSize(DatasetException):
    """Batch size must be at least 1."""

    message = "[INVALID BATCH SIZE]"
