# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Dense tensors and reverse-mode automatic differentiation."""

from .gradcheck import check_gradients, finite_diff_grad, \
    max_relative_error
from .ops import OPS, PRIMITIVES, Op, get_op, register
from .tape import Tape, TapeNode
from .tensor import Tensor

__all__ = (
    "OPS",
    "Op",
    "PRIMITIVES",
    "Tape",
    "TapeNode",
    "Tensor",
    "check_gradients",
    "finite_diff_grad",
    "get_op",
    "max_relative_error",
    "register",
)
