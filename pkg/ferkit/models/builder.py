# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Build seeded models from architecture specs."""

import numpy as np

from ferkit.autograd import Tensor
from ferkit.models.blocks import BlockContainer, make_block
from ferkit.models.errors import SpecError
from ferkit.models.specs import infer_shapes


def mode_of(training):
    """Batch norm mode for a forward pass."""
    return "train" if training else "eval"


def as_tensor(x):
    """Wrap raw arrays so models accept numpy input directly."""
    return x if isinstance(x, Tensor) else Tensor(x)


def logits_of(tape, h):
    """Collapse a [N, 1, 1, K] classifier output to [N, K]."""
    if h.ndim == 2:
        return h
    if h.shape[1:3] != (1, 1):
        raise SpecError(
            "classifier", expected="[N, 1, 1, K] output", actual=h.shape
        )
    return tape.record("reshape", [h], dict(shape=(h.shape[0], h.shape[3])))


class Backbone(BlockContainer):
    """Ordered blocks of one stream, up to the pre-classifier feature."""

    def __init__(self, blocks, input_shape, feature_shape, tag=None):
        """Constructor."""
        self.blocks = list(blocks)
        self.input_shape = tuple(input_shape)
        self.feature_shape = tuple(feature_shape)
        self.tag = tag

    def named_blocks(self):
        """Blocks named by row index and kind."""
        prefix = "{0}.".format(self.tag) if self.tag else ""
        return [
            ("{0}{1:02d}.{2}".format(prefix, index, block.kind), block)
            for index, block in enumerate(self.blocks)
        ]

    def features(self, tape, x, mode):
        """Pre-classifier feature of ``x``."""
        if tuple(x.shape[1:]) != self.input_shape:
            raise SpecError(
                self.tag or "input", expected=self.input_shape,
                actual=tuple(x.shape[1:]),
            )
        h = x
        for block in self.blocks:
            h = block.forward(tape, h, mode)
        return h


def build_backbone(layers, input_shape, rng, dtype=None, momentum=None,
                   epsilon=None, tag=None, shared=None):
    """Initialize the blocks of ``layers`` in order.

    ``shared`` maps row indices to already built blocks; those rows draw
    nothing from ``rng``.
    """
    shapes = infer_shapes(layers, input_shape)
    shared = shared or {}
    blocks = []
    for index, layer in enumerate(layers):
        if index in shared:
            blocks.append(shared[index])
            continue
        blocks.append(make_block(
            layer, shapes[index], rng, dtype=dtype, momentum=momentum,
            epsilon=epsilon,
        ))
    return Backbone(blocks, input_shape, shapes[-1], tag=tag)


class Model(BlockContainer):
    """Single-stream network: backbone plus classifier."""

    def __init__(self, spec, seed, backbone, classifier):
        """Constructor."""
        self.spec = spec
        self.seed = seed
        self.backbone = backbone
        self.classifier = classifier

    @property
    def num_classes(self):
        """Classifier width."""
        return self.spec.num_classes

    def named_blocks(self):
        """Backbone blocks, then the classifier."""
        index = len(self.backbone.blocks)
        return self.backbone.named_blocks() + [
            ("{0:02d}.{1}".format(index, self.classifier.kind),
             self.classifier),
        ]

    def forward(self, tape, inputs, training=True):
        """Logits [N, K]; ``inputs`` is a tensor or a one-element list."""
        if isinstance(inputs, (list, tuple)):
            (inputs,) = inputs
        mode = mode_of(training)
        h = self.backbone.features(tape, as_tensor(inputs), mode)
        return logits_of(tape, self.classifier.forward(tape, h, mode))


def build(spec, seed, dtype=None):
    """Deterministically initialize ``spec`` from ``seed``.

    Parameters are drawn from one generator in execution order: each
    stream's STL and rows, then the classifier or fusion head.
    """
    rng = np.random.default_rng(seed)
    kwargs = dict(dtype=dtype, momentum=spec.bn_momentum,
                  epsilon=spec.bn_epsilon)
    if spec.streams is not None:
        from ferkit.models.fusion import build_fused
        return build_fused(spec, seed, rng, **kwargs)

    backbone = build_backbone(
        spec.stream_layers(), spec.input_shape, rng, **kwargs
    )
    classifier = make_block(
        spec.layers[-1], backbone.feature_shape, rng, **kwargs
    )
    return Model(spec, seed, backbone, classifier)
