# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Training exceptions."""

from ferkit.errors import FerKitException


class TrainingException(FerKitException):
    """Base exception for training and evaluation errors."""


class ConfigError(TrainingException):
    """Training configuration violates its invariants."""

    message = "[INVALID TRAINING CONFIGURATION]"


class EmptySplitError(TrainingException):
    """A split needed for training or evaluation has no samples."""

    message = "[EMPTY SPLIT]"


class NonFiniteLossError(TrainingException):
    """The loss became NaN or infinite."""

    def __init__(self, epoch, batch, value):
        """Constructor."""
        self.epoch = epoch
        self.batch = batch
        super().__init__(
            message="Non-finite loss {0} at epoch {1}, batch {2}".format(
                value, epoch, batch
            )
        )


class OptimizerShapeError(TrainingException):
    """Parameters, gradients and moments do not line up."""

    message = "[OPTIMIZER SHAPE MISMATCH]"
