# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Finite-difference gradient suite over every differentiable op.

Each case draws its inputs from a seeded generator and reduces the op's
output to a scalar with fixed random weights. Inputs of ops with kinks
(relu, max, pooling, bilinear sampling) are kept away from the kinks.
"""

import logging
from collections import OrderedDict, namedtuple
from dataclasses import replace

import numpy as np

from ferkit import config
from ferkit.autograd import Tensor, check_gradients
from ferkit.layers import BatchNormState, ConvParams, DenseParams, \
    batch_norm, bottleneck_params, conv2d, dense, depthwise_conv2d, \
    depthwise_separable, global_avg_pool, inverted_bottleneck, max_pool, \
    softmax_cross_entropy
from ferkit.transformer import affine_grid, bilinear_sample
from ferkit.utils import log_event

logger = logging.getLogger("ferkit.checks")

GRADCHECK_CASES = OrderedDict()
"""Case factories by name; each maps a generator to (arrays, build)."""

GradCheckResult = namedtuple(
    "GradCheckResult", ["name", "worst", "seeds", "passed"]
)


def gradcheck_case(name):
    """Register a case factory under ``name``."""
    def decorator(factory):
        GRADCHECK_CASES[name] = factory
        return factory
    return decorator


class Projection(object):
    """Weighted sum with weights drawn once, on first use."""

    def __init__(self, rng):
        """Constructor."""
        self.rng = rng
        self.weights = None

    def __call__(self, tape, out):
        """Reduce ``out`` to a scalar."""
        if self.weights is None:
            self.weights = self.rng.normal(size=out.shape)
        weights = Tensor(self.weights, dtype=out.dtype)
        return tape.record("sum", [tape.record("mul", [out, weights])])


def off_kink(rng, shape, kinks, margin=0.1, low=-2.0, high=2.0):
    """Uniform values at least ``margin`` away from every kink."""
    values = rng.uniform(low, high, size=shape)
    for kink in kinks:
        near = np.abs(values - kink) < margin
        values[near] = kink + np.sign(values[near] - kink + 1e-12) * margin
    return values


def distinct(rng, shape, spacing=0.1):
    """Values whose pairwise gaps are at least ``spacing``."""
    count = int(np.prod(shape))
    values = rng.permutation(count) * spacing \
        + rng.uniform(0.0, spacing / 4, size=count)
    return values.reshape(shape)


def _primitive(name, shapes, attrs=None, low=-1.0, high=1.0):
    def factory(rng):
        project = Projection(rng)
        arrays = [rng.uniform(low, high, size=shape) for shape in shapes]

        def build(tape, tensors):
            return project(tape, tape.record(name, tensors, attrs))

        return arrays, build
    return factory


for _name in ("add", "sub", "mul"):
    gradcheck_case(_name)(_primitive(_name, [(3, 4), (3, 4)]))
gradcheck_case("matmul")(_primitive("matmul", [(3, 4), (4, 5)]))
gradcheck_case("reshape")(
    _primitive("reshape", [(2, 6)], dict(shape=(3, 4)))
)
gradcheck_case("transpose")(
    _primitive("transpose", [(2, 3, 4)], dict(axes=(2, 0, 1)))
)
gradcheck_case("pad")(
    _primitive("pad", [(2, 3)], dict(pad_width=((1, 0), (2, 1))))
)
gradcheck_case("slice")(
    _primitive("slice", [(4, 5)],
               dict(key=(slice(1, 3), slice(0, 5, 2))))
)
gradcheck_case("exp")(_primitive("exp", [(3, 4)]))
gradcheck_case("log")(_primitive("log", [(3, 4)], low=0.5, high=2.0))
gradcheck_case("sum")(_primitive("sum", [(3, 4, 2)], dict(axis=1)))
gradcheck_case("mean")(
    _primitive("mean", [(3, 4, 2)], dict(axis=(0, 2), keepdims=True))
)
gradcheck_case("broadcast")(
    _primitive("broadcast", [(3, 1)], dict(shape=(2, 3, 4)))
)


@gradcheck_case("relu")
def _relu(rng):
    project = Projection(rng)

    def build(tape, tensors):
        return project(tape, tape.record("relu", tensors))

    return [off_kink(rng, (3, 4), [0.0])], build


@gradcheck_case("relu6")
def _relu6(rng):
    project = Projection(rng)

    def build(tape, tensors):
        return project(tape, tape.record("relu6", tensors))

    return [off_kink(rng, (3, 4), [0.0, 6.0], low=-2.0, high=8.0)], build


@gradcheck_case("max")
def _max(rng):
    project = Projection(rng)

    def build(tape, tensors):
        return project(tape, tape.record("max", tensors, dict(axis=1)))

    return [distinct(rng, (3, 4))], build


@gradcheck_case("conv2d")
def _conv2d(rng):
    project = Projection(rng)

    def build(tape, tensors):
        x, kernel, bias = tensors
        return project(tape, conv2d(tape, x, ConvParams(kernel, bias)))

    return [
        rng.normal(size=(2, 5, 5, 3)), rng.normal(size=(3, 3, 3, 4)),
        rng.normal(size=(4,)),
    ], build


@gradcheck_case("conv2d-stride2")
def _conv2d_stride2(rng):
    project = Projection(rng)

    def build(tape, tensors):
        x, kernel = tensors
        return project(
            tape, conv2d(tape, x, ConvParams(kernel, stride=2))
        )

    return [rng.normal(size=(2, 6, 5, 2)), rng.normal(size=(3, 3, 2, 3))], \
        build


@gradcheck_case("depthwise_conv2d")
def _depthwise(rng):
    project = Projection(rng)

    def build(tape, tensors):
        x, kernel = tensors
        return project(
            tape, depthwise_conv2d(tape, x, ConvParams(kernel, stride=2))
        )

    return [rng.normal(size=(2, 5, 5, 3)), rng.normal(size=(3, 3, 3, 1))], \
        build


@gradcheck_case("depthwise_separable")
def _depthwise_separable(rng):
    project = Projection(rng)

    def build(tape, tensors):
        x, depthwise, pointwise = tensors
        return project(tape, depthwise_separable(
            tape, x, ConvParams(depthwise), ConvParams(pointwise)
        ))

    return [
        rng.normal(size=(2, 4, 4, 3)), rng.normal(size=(3, 3, 3, 1)),
        rng.normal(size=(1, 1, 3, 4)),
    ], build


@gradcheck_case("inverted_bottleneck")
def _inverted_bottleneck(rng):
    project = Projection(rng)
    params = bottleneck_params(rng, 3, 3, 1, 2, dtype="float64")

    def build(tape, tensors):
        x, expand, depthwise, projection = tensors
        block = replace(
            params,
            expand=replace(params.expand, kernel=expand),
            depthwise=replace(params.depthwise, kernel=depthwise),
            project=replace(params.project, kernel=projection),
        )
        return project(tape, inverted_bottleneck(tape, x, block, "train"))

    return [
        rng.normal(size=(3, 4, 4, 3)), params.expand.kernel.data,
        params.depthwise.kernel.data, params.project.kernel.data,
    ], build


@gradcheck_case("max_pool")
def _max_pool(rng):
    project = Projection(rng)

    def build(tape, tensors):
        return project(tape, max_pool(tape, tensors[0], 2))

    return [distinct(rng, (2, 4, 4, 2))], build


@gradcheck_case("global_avg_pool")
def _global_avg_pool(rng):
    project = Projection(rng)

    def build(tape, tensors):
        return project(tape, global_avg_pool(tape, tensors[0]))

    return [rng.normal(size=(2, 3, 4, 5))], build


@gradcheck_case("dense")
def _dense(rng):
    project = Projection(rng)

    def build(tape, tensors):
        x, weight, bias = tensors
        return project(tape, dense(tape, x, DenseParams(weight, bias)))

    return [
        rng.normal(size=(3, 5)), rng.normal(size=(5, 4)),
        rng.normal(size=(4,)),
    ], build


def _batch_norm_case(mode):
    def factory(rng):
        project = Projection(rng)
        state = BatchNormState(2, dtype="float64")
        state.update(rng.normal(size=2), rng.uniform(0.5, 2.0, size=2))

        def build(tape, tensors):
            x, scale, shift = tensors
            state.scale, state.shift = scale, shift
            return project(tape, batch_norm(tape, x, state, mode))

        return [
            rng.normal(size=(4, 3, 3, 2)), rng.uniform(0.5, 1.5, size=2),
            rng.normal(size=2),
        ], build
    return factory


gradcheck_case("batch_norm-eval")(_batch_norm_case("eval"))
gradcheck_case("batch_norm-train")(_batch_norm_case("train"))


@gradcheck_case("softmax_cross_entropy")
def _softmax_cross_entropy(rng):
    labels = rng.integers(0, 5, size=4)

    def build(tape, tensors):
        return softmax_cross_entropy(tape, tensors[0], labels)

    return [rng.normal(size=(4, 5)) * 3.0], build


@gradcheck_case("affine_grid")
def _affine_grid(rng):
    project = Projection(rng)

    def build(tape, tensors):
        return project(tape, affine_grid(tape, tensors[0], 3, 4))

    return [rng.normal(size=(2, 2, 3))], build


@gradcheck_case("bilinear_sample")
def _bilinear_sample(rng):
    project = Projection(rng)
    height, width = 4, 5

    def axis(size, shape):
        pixels = rng.integers(0, size - 1, size=shape) \
            + rng.uniform(0.1, 0.9, size=shape)
        return 2.0 * pixels / (size - 1) - 1.0

    grid = np.stack(
        [axis(width, (2, 3, 3)), axis(height, (2, 3, 3))], axis=-1
    )

    def build(tape, tensors):
        return project(tape, bilinear_sample(tape, *tensors))

    return [rng.normal(size=(2, height, width, 2)), grid], build


def run_gradcheck(names=None, seeds=None, tolerance=None, dtype=None,
                  eps=None):
    """Check every named case over ``seeds`` seeds.

    Returns one :class:`GradCheckResult` per case, in registry order.
    """
    names = list(names or GRADCHECK_CASES)
    seeds = config.FERKIT_GRADCHECK_SEEDS if seeds is None else seeds
    tolerance = tolerance or config.FERKIT_GRADCHECK_TOLERANCE
    results = []
    for name in names:
        factory = GRADCHECK_CASES[name]
        worst = 0.0
        for seed in range(seeds):
            arrays, build = factory(np.random.default_rng(seed))
            worst = max(worst, check_gradients(
                build, arrays, eps=eps, dtype=dtype
            ))
        result = GradCheckResult(name, worst, seeds, worst < tolerance)
        log_event(logger, "gradcheck", extra=result._asdict(),
                  is_error=not result.passed)
        results.append(result)
    return results
