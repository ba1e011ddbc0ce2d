# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Recorded computation tape and reverse-mode differentiation."""

from collections import namedtuple

import numpy as np

from ferkit import config
from ferkit.autograd.errors import NotOnTapeError, NotScalarError
from ferkit.autograd.ops import get_op
from ferkit.autograd.tensor import Tensor

TapeNode = namedtuple("TapeNode", ["op", "input_ids", "output_id", "ctx"])
"""One recorded operation; ``ctx`` is ``(saved, attrs, needs)``."""


class Tape(object):
    """Single-threaded record of one forward pass.

    Nodes are appended in execution order, so insertion order is a
    topological order. A disabled tape evaluates ops without recording,
    which is what inference and finite differences use.
    """

    def __init__(self, enabled=True):
        """Constructor."""
        self.enabled = enabled
        self.nodes = []
        self._tensors = {}
        self._produced = set()

    def __enter__(self):
        """Use the tape as a context manager."""
        return self

    def __exit__(self, *exc_info):
        """Drop every node on exit."""
        self.clear()

    def __len__(self):
        """Number of recorded nodes."""
        return len(self.nodes)

    def record(self, op_kind, inputs, attrs=None):
        """Evaluate ``op_kind`` on ``inputs`` and record it if needed."""
        op = get_op(op_kind)
        attrs = dict(attrs or {})
        arrays = [tensor.data for tensor in inputs]
        op.check(arrays, attrs)
        saved = {}
        output = Tensor.wrap(np.asarray(op.forward(saved, *arrays, **attrs)))
        if config.FERKIT_DEBUG_FINITE:
            output.validate_finite("after {0}".format(op_kind))

        needs = tuple(tensor.requires_grad for tensor in inputs)
        if self.enabled and any(needs):
            output.requires_grad = True
            for tensor in inputs:
                self._tensors[tensor.id] = tensor
            self._tensors[output.id] = output
            self._produced.add(output.id)
            self.nodes.append(
                TapeNode(
                    op=op_kind,
                    input_ids=tuple(tensor.id for tensor in inputs),
                    output_id=output.id,
                    ctx=(saved, attrs, needs),
                )
            )
        return output

    def leaves(self):
        """Tensors requiring gradients that no recorded node produced."""
        return [
            tensor for tid, tensor in self._tensors.items()
            if tensor.requires_grad and tid not in self._produced
        ]

    def backward(self, loss, retain=False):
        """Back-propagate from a scalar ``loss``.

        Returns a map from leaf tensor id to its gradient and stores each
        gradient in the leaf's ``grad`` slot. Gradients of tensors consumed
        by several nodes are summed into zero-initialized buffers.
        """
        if loss.data.size != 1:
            raise NotScalarError(
                message="backward() needs a scalar loss, got shape {0}".format(
                    loss.shape
                )
            )
        if not loss.requires_grad or loss.id not in self._produced:
            raise NotOnTapeError()

        grads = {loss.id: np.ones_like(loss.data)}
        for node in reversed(self.nodes):
            grad = grads.pop(node.output_id, None)
            if grad is None:
                continue
            saved, attrs, needs = node.ctx
            input_grads = get_op(node.op).backward(saved, grad, needs, **attrs)
            for tid, need, input_grad in zip(
                node.input_ids, needs, input_grads
            ):
                if not need or input_grad is None:
                    continue
                if tid not in grads:
                    grads[tid] = np.zeros_like(self._tensors[tid].data)
                grads[tid] += input_grad

        leaf_grads = {}
        for leaf in self.leaves():
            leaf.grad = grads.get(leaf.id, np.zeros_like(leaf.data))
            leaf_grads[leaf.id] = leaf.grad
        if not retain:
            self.clear()
        return leaf_grads

    def clear(self):
        """Forget every recorded node."""
        self.nodes = []
        self._tensors = {}
        self._produced = set()
