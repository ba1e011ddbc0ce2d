# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Fully connected layer."""

from dataclasses import dataclass
from typing import Optional

from ferkit.autograd import Tensor
from ferkit.layers.combine import add_bias


@dataclass
class DenseParams(object):
    """Weight [D, M] and optional bias [M]."""

    weight: Tensor
    bias: Optional[Tensor] = None

    def tensors(self):
        """Weight, then bias when present."""
        return [self.weight] + ([self.bias] if self.bias is not None else [])

    def count(self):
        """Number of weights and biases."""
        return sum(tensor.size for tensor in self.tensors())


def dense(tape, x, params):
    """Affine map ``x w + b``."""
    return add_bias(
        tape, tape.record("matmul", [x, params.weight]), params.bias
    )


def flatten(tape, x):
    """Collapse every axis but the batch axis."""
    return tape.record(
        "reshape", [x], dict(shape=(x.shape[0], x.size // x.shape[0]))
    )
