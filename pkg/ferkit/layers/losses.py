# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Classification loss."""

import numpy as np

from ferkit.autograd import Op, register
from ferkit.autograd.errors import ShapeMismatchError
from ferkit.layers.errors import LabelOutOfRangeError


def log_softmax(logits):
    """Row-wise log-softmax with max subtraction."""
    shifted = logits - logits.max(axis=1, keepdims=True)
    return shifted - np.log(np.exp(shifted).sum(axis=1, keepdims=True))


@register("softmax_cross_entropy")
class SoftmaxCrossEntropy(Op):
    """Mean over the batch of -log softmax(logits)[label]."""

    def check(self, arrays, attrs):
        """One label per row, each in [0, K)."""
        super().check(arrays, attrs)
        logits = arrays[0]
        labels = attrs["labels"]
        if logits.ndim != 2 or len(labels) != logits.shape[0]:
            raise ShapeMismatchError(
                self.name, logits.shape, (len(labels),)
            )
        for label in labels:
            if not 0 <= label < logits.shape[1]:
                raise LabelOutOfRangeError(
                    message="Label {0} outside [0, {1})".format(
                        label, logits.shape[1]
                    )
                )

    def forward(self, ctx, logits, labels):
        """Stabilized cross-entropy."""
        rows = np.arange(logits.shape[0])
        log_probs = log_softmax(logits)
        ctx.update(probs=np.exp(log_probs), rows=rows)
        return np.asarray(
            -log_probs[rows, list(labels)].mean(), dtype=logits.dtype
        )

    def backward(self, ctx, grad, needs, labels):
        """(softmax - onehot) / N."""
        probs, rows = ctx["probs"], ctx["rows"]
        dlogits = probs.copy()
        dlogits[rows, list(labels)] -= 1.0
        return (dlogits * (grad / probs.shape[0]),)


def softmax_cross_entropy(tape, logits, labels):
    """Scalar cross-entropy loss of ``logits`` against integer ``labels``."""
    labels = tuple(int(label) for label in np.asarray(labels).reshape(-1))
    return tape.record("softmax_cross_entropy", [logits], dict(labels=labels))
