# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Model zoo exceptions."""

from ferkit.errors import FerKitException


class ModelException(FerKitException):
    """Base exception for architecture and checkpoint errors."""


class SpecError(ModelException):
    """Architecture spec fails shape propagation or its invariants."""

    def __init__(self, layer, expected=None, actual=None, detail=""):
        """Constructor."""
        self.layer = layer
        self.expected = expected
        self.actual = actual
        parts = []
        if expected is not None or actual is not None:
            parts.append("expected {0}, got {1}".format(expected, actual))
        if detail:
            parts.append(detail)
        super().__init__(
            message="Layer {0}: {1}".format(layer, "; ".join(parts))
        )


class FeatureDimError(ModelException):
    """Fused streams disagree on their feature shape."""

    message = "[MISMATCHED STREAM FEATURES]"


class IntegrityError(ModelException):
    """Weight blob does not match the manifest checksum or layout."""

    message = "[CHECKPOINT INTEGRITY ERROR]"


class FormatVersionError(ModelException):
    """Manifest written by an unsupported format version."""

    message = "[UNSUPPORTED CHECKPOINT FORMAT]"


class LedgerMismatchError(ModelException):
    """Parameter ledger disagrees with the expected counts."""

    message = "[PARAMETER LEDGER MISMATCH]"
