# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Finite-difference gradient oracle."""

import math

import numpy as np

from ferkit import config
from ferkit.autograd.errors import NonFiniteError
from ferkit.autograd.tape import Tape
from ferkit.autograd.tensor import Tensor


def _scalar(value):
    if isinstance(value, Tensor):
        value = value.data
    value = float(np.asarray(value).reshape(-1)[0])
    if not math.isfinite(value):
        raise NonFiniteError(
            message="Function value is not finite: {0}".format(value)
        )
    return value


def finite_diff_grad(f, x, eps=None):
    """Central-difference gradient of the scalar function ``f`` at ``x``.

    ``f`` receives a fresh perturbed :class:`Tensor` per evaluation, so the
    buffer of ``x`` is never modified.
    """
    eps = eps or config.FERKIT_GRADCHECK_EPS
    base = x.data
    grad = np.zeros(base.shape, dtype=np.float64)
    for index in range(base.size):
        plus = base.copy()
        plus.flat[index] += eps
        minus = base.copy()
        minus.flat[index] -= eps
        f_plus = _scalar(f(Tensor(plus, dtype=base.dtype)))
        f_minus = _scalar(f(Tensor(minus, dtype=base.dtype)))
        grad.flat[index] = (f_plus - f_minus) / (2.0 * eps)
    return grad


def max_relative_error(analytic, numeric):
    """Return max |analytic - numeric| / max(1, |numeric|)."""
    analytic = np.asarray(analytic, dtype=np.float64)
    numeric = np.asarray(numeric, dtype=np.float64)
    if analytic.size == 0:
        return 0.0
    denom = np.maximum(1.0, np.abs(numeric))
    return float(np.max(np.abs(analytic - numeric) / denom))


def check_gradients(build, arrays, eps=None, dtype=None):
    """Compare autograd against finite differences for every input.

    ``build(tape, tensors)`` must return a scalar tensor. Returns the
    largest relative error over all inputs.
    """
    dtype = dtype or config.FERKIT_GRADCHECK_DTYPE
    inputs = [Tensor(a, requires_grad=True, dtype=dtype) for a in arrays]
    tape = Tape()
    loss = build(tape, inputs)
    tape.backward(loss)
    analytic = [tensor.grad for tensor in inputs]

    worst = 0.0
    for position, tensor in enumerate(inputs):

        def evaluate(candidate, position=position):
            frozen = [
                Tensor(t.data, dtype=dtype) for t in inputs
            ]
            frozen[position] = candidate
            return build(Tape(enabled=False), frozen)

        numeric = finite_diff_grad(evaluate, tensor, eps=eps)
        worst = max(worst, max_relative_error(analytic[position], numeric))
    return worst
