# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Autograd exceptions."""

from ferkit.errors import FerKitException


class AutogradException(FerKitException):
    """Base exception for tensor and tape errors."""


class ShapeMismatchError(AutogradException):
    """Operand shapes are not valid for an operation."""

    message = "[SHAPE MISMATCH]"

    def __init__(self, op_kind, *shapes, **kwargs):
        """Constructor."""
        self.op_kind = op_kind
        self.shapes = [tuple(shape) for shape in shapes]
        detail = kwargs.pop("detail", "")
        message = "{0}: incompatible shapes {1}".format(
            op_kind, " and ".join(str(shape) for shape in self.shapes)
        )
        if detail:
            message = "{0} ({1})".format(message, detail)
        super().__init__(message=message)


class UnknownOpError(AutogradException):
    """Operation identifier is not registered."""

    def __init__(self, op_kind):
        """Constructor."""
        self.op_kind = op_kind
        super().__init__(message="Unknown op kind: {0}".format(op_kind))


class NotScalarError(AutogradException):
    """Backward was called on a non-scalar tensor."""

    message = "backward() needs a scalar loss."


class NotOnTapeError(AutogradException):
    """Backward was called on a tensor the tape did not produce."""

    message = "Loss was not recorded on this tape."


class NonFiniteError(AutogradException):
    """A NaN or Inf value was found where finite values are required."""

    message = "[NON-FINITE VALUE]"
