# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Parameterized blocks, one per architecture row."""

from collections import OrderedDict

import numpy as np

from ferkit.layers import bottleneck_params, conv2d, conv_params, dense, \
    dense_params, flatten, global_avg_pool, inverted_bottleneck, max_pool
from ferkit.transformer import LocNet, stl_forward


class Block(object):
    """One built row; subclasses list their tensors and norm states."""

    kind = None

    def __init__(self, layer):
        """Constructor."""
        self.layer = layer

    def named_tensors(self):
        """(name, tensor, ledgered) for every trainable tensor."""
        return []

    def norms(self):
        """(name, BatchNormState) pairs."""
        return []

    def forward(self, tape, x, mode):
        """Apply the block."""
        raise NotImplementedError()

    def activate(self, tape, h):
        """Apply the row's activation, if any."""
        if self.layer.activation is None:
            return h
        return tape.record(self.layer.activation, [h])


class ConvBlock(Block):
    """Standalone convolution."""

    kind = "conv2d"

    def __init__(self, layer, params):
        """Constructor."""
        super().__init__(layer)
        self.params = params

    def named_tensors(self):
        """Kernel and bias."""
        tensors = [("kernel", self.params.kernel, True)]
        if self.params.bias is not None:
            tensors.append(("bias", self.params.bias, True))
        return tensors

    def forward(self, tape, x, mode):
        """Convolve, then activate."""
        return self.activate(tape, conv2d(tape, x, self.params))


class BottleneckBlock(Block):
    """Inverted bottleneck; batch norm values are auxiliary."""

    kind = "bottleneck"
    parts = ("expand", "depthwise", "project")

    def __init__(self, layer, params):
        """Constructor."""
        super().__init__(layer)
        self.params = params

    def named_tensors(self):
        """Conv kernels, then scale and shift of each norm."""
        tensors = []
        for part in self.parts:
            conv = getattr(self.params, part)
            tensors.append(("{0}.kernel".format(part), conv.kernel, True))
        for name, state in self.norms():
            tensors.append(("{0}.scale".format(name), state.scale, False))
            tensors.append(("{0}.shift".format(name), state.shift, False))
        return tensors

    def norms(self):
        """The three batch norm states."""
        return [
            ("{0}_bn".format(part), getattr(self.params, part + "_bn"))
            for part in self.parts
        ]

    def forward(self, tape, x, mode):
        """Run the block with its skip connection."""
        return inverted_bottleneck(tape, x, self.params, mode)


class PoolBlock(Block):
    """Global average or windowed max pooling; no parameters."""

    def __init__(self, layer):
        """Constructor."""
        super().__init__(layer)
        self.kind = layer.kind

    def forward(self, tape, x, mode):
        """Pool."""
        if self.kind == "avg_pool":
            return global_avg_pool(tape, x)
        return max_pool(tape, x, window=self.layer.k, stride=self.layer.s)


class DenseBlock(Block):
    """Fully connected layer, flattening spatial inputs first."""

    kind = "dense"

    def __init__(self, layer, params):
        """Constructor."""
        super().__init__(layer)
        self.params = params

    def named_tensors(self):
        """Weight and bias."""
        tensors = [("weight", self.params.weight, True)]
        if self.params.bias is not None:
            tensors.append(("bias", self.params.bias, True))
        return tensors

    def forward(self, tape, x, mode):
        """Flatten if needed, apply the affine map, activate."""
        if x.ndim > 2:
            x = flatten(tape, x)
        return self.activate(tape, dense(tape, x, self.params))


class STLBlock(Block):
    """Spatial transformer input layer with its own localization net."""

    kind = "stl"

    def __init__(self, layer, locnet):
        """Constructor."""
        super().__init__(layer)
        self.locnet = locnet

    def named_tensors(self):
        """Localization net weights."""
        tensors = []
        for index, params in enumerate(self.locnet.convs):
            tensors.append(("conv{0}.kernel".format(index), params.kernel,
                            True))
            tensors.append(("conv{0}.bias".format(index), params.bias, True))
        for name in ("hidden", "regressor"):
            params = getattr(self.locnet, name)
            tensors.append(("{0}.weight".format(name), params.weight, True))
            tensors.append(("{0}.bias".format(name), params.bias, True))
        return tensors

    def forward(self, tape, x, mode):
        """Warp the input."""
        return stl_forward(tape, x, self.locnet)


def make_block(layer, in_shape, rng, dtype=None, momentum=None,
               epsilon=None):
    """Initialize the block for ``layer`` fed by ``in_shape``."""
    if layer.kind == "conv2d":
        return ConvBlock(layer, conv_params(
            rng, layer.k, in_shape[-1], layer.c, stride=layer.s,
            bias=layer.bias, dtype=dtype,
        ))
    if layer.kind == "bottleneck":
        return BottleneckBlock(layer, bottleneck_params(
            rng, in_shape[-1], layer.c, layer.s, layer.t, dtype=dtype,
            momentum=momentum, epsilon=epsilon,
        ))
    if layer.kind in ("avg_pool", "max_pool"):
        return PoolBlock(layer)
    if layer.kind == "dense":
        return DenseBlock(layer, dense_params(
            rng, int(np.prod(in_shape)), layer.c, bias=layer.bias,
            dtype=dtype,
        ))
    return STLBlock(layer, LocNet(rng, in_shape, dtype=dtype))


class BlockContainer(object):
    """Parameter bookkeeping over ``named_blocks()``.

    Blocks shared between streams are listed once.
    """

    def named_blocks(self):
        """Unique (name, Block) pairs in execution order."""
        raise NotImplementedError()

    def named_tensors(self):
        """(qualified name, tensor, ledgered) for every trainable tensor."""
        return [
            ("{0}.{1}".format(prefix, name), tensor, ledgered)
            for prefix, block in self.named_blocks()
            for name, tensor, ledgered in block.named_tensors()
        ]

    def parameters(self):
        """Trainable tensors."""
        return [tensor for _, tensor, _ in self.named_tensors()]

    def ledgered_tensors(self):
        """Tensors counted in the parameter ledger."""
        return [tensor for _, tensor, ledgered in self.named_tensors()
                if ledgered]

    def auxiliary_tensors(self):
        """Trainable tensors outside the ledger (batch norm scale/shift)."""
        return [tensor for _, tensor, ledgered in self.named_tensors()
                if not ledgered]

    def state(self):
        """Ordered name -> array map of parameters and running statistics.

        Running statistics appear only once a training step has set them.
        """
        arrays = OrderedDict(
            (name, tensor.data) for name, tensor, _ in self.named_tensors()
        )
        for prefix, block in self.named_blocks():
            for name, norm in block.norms():
                if not norm.initialized:
                    continue
                key = "{0}.{1}".format(prefix, name)
                arrays[key + ".running_mean"] = norm.running_mean
                arrays[key + ".running_var"] = norm.running_var
        return arrays

    def load_state(self, arrays):
        """Copy ``arrays`` into the tensors and norm states in place."""
        for name, tensor, _ in self.named_tensors():
            tensor.data[...] = arrays[name]
        for prefix, block in self.named_blocks():
            for name, norm in block.norms():
                key = "{0}.{1}".format(prefix, name)
                if key + ".running_mean" in arrays:
                    norm.running_mean = np.array(
                        arrays[key + ".running_mean"],
                        dtype=norm.scale.dtype,
                    )
                    norm.running_var = np.array(
                        arrays[key + ".running_var"],
                        dtype=norm.scale.dtype,
                    )
