# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Adam with bias-corrected moment estimates."""

from dataclasses import dataclass, field
from typing import List

import numpy as np

from ferkit import config
from ferkit.training.errors import ConfigError, OptimizerShapeError


@dataclass
class AdamMoments(object):
    """First and second moment buffers, one pair per parameter."""

    first: List[np.ndarray] = field(default_factory=list)
    second: List[np.ndarray] = field(default_factory=list)

    @classmethod
    def zeros_like(cls, params):
        """Fresh zero moments for ``params`` (arrays or tensors)."""
        arrays = [getattr(param, "data", param) for param in params]
        return cls(
            first=[np.zeros_like(array) for array in arrays],
            second=[np.zeros_like(array) for array in arrays],
        )


def adam_step(params, grads, moments, t, lr=None, beta1=None, beta2=None,
              eps=None):
    """Apply Adam step ``t`` (1-based) to ``params`` in place.

    ``params`` and ``grads`` are aligned lists of arrays. With zero
    gradients and zero moments the parameters are left exactly unchanged.
    """
    lr = config.FERKIT_LEARNING_RATE if lr is None else lr
    beta1 = config.FERKIT_ADAM_BETA1 if beta1 is None else beta1
    beta2 = config.FERKIT_ADAM_BETA2 if beta2 is None else beta2
    eps = config.FERKIT_ADAM_EPSILON if eps is None else eps
    if t < 1:
        raise ConfigError(message="Adam step index must be >= 1")
    if not len(params) == len(grads) == len(moments.first) \
            == len(moments.second):
        raise OptimizerShapeError(
            message="{0} parameters, {1} gradients, {2} moment pairs".format(
                len(params), len(grads), len(moments.first)
            )
        )

    correction1 = 1.0 - beta1 ** t
    correction2 = 1.0 - beta2 ** t
    for index, (param, grad) in enumerate(zip(params, grads)):
        first, second = moments.first[index], moments.second[index]
        if grad.shape != param.shape or first.shape != param.shape:
            raise OptimizerShapeError(
                message="Parameter {0}: shape {1}, gradient {2}".format(
                    index, param.shape, grad.shape
                )
            )
        first *= beta1
        first += (1.0 - beta1) * grad
        second *= beta2
        second += (1.0 - beta2) * (grad * grad)
        denom = np.sqrt(second / correction2) + eps
        param -= (lr / correction1) * first / denom
    return params, moments


class Adam(object):
    """Stateful Adam over a fixed list of tensors."""

    def __init__(self, parameters, lr=None, beta1=None, beta2=None,
                 eps=None):
        """Constructor."""
        self.parameters = list(parameters)
        self.lr = config.FERKIT_LEARNING_RATE if lr is None else lr
        self.beta1 = config.FERKIT_ADAM_BETA1 if beta1 is None else beta1
        self.beta2 = config.FERKIT_ADAM_BETA2 if beta2 is None else beta2
        self.eps = config.FERKIT_ADAM_EPSILON if eps is None else eps
        self.moments = AdamMoments.zeros_like(self.parameters)
        self.t = 0

    def step(self):
        """Update every tensor from its ``grad`` slot; missing means zero."""
        self.t += 1
        grads = [
            tensor.grad if tensor.grad is not None
            else np.zeros_like(tensor.data)
            for tensor in self.parameters
        ]
        adam_step(
            [tensor.data for tensor in self.parameters],
            [grad.astype(tensor.data.dtype, copy=False)
             for grad, tensor in zip(grads, self.parameters)],
            self.moments, self.t, lr=self.lr, beta1=self.beta1,
            beta2=self.beta2, eps=self.eps,
        )

    def zero_grad(self):
        """Clear every gradient slot."""
        for tensor in self.parameters:
            tensor.zero_grad()
