# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Tensor combinators built only from primitive ops."""


def add_bias(tape, x, bias):
    """Add a per-channel bias to the last axis of ``x``."""
    if bias is None:
        return x
    return tape.record(
        "add", [x, tape.record("broadcast", [bias], dict(shape=x.shape))]
    )


def concat(tape, tensors, axis=-1):
    """Concatenate along ``axis`` by zero-padding each part and summing."""
    if len(tensors) == 1:
        return tensors[0]
    ndim = tensors[0].ndim
    axis = axis % ndim
    total = sum(tensor.shape[axis] for tensor in tensors)
    out, offset = None, 0
    for tensor in tensors:
        size = tensor.shape[axis]
        pad_width = [(0, 0)] * ndim
        pad_width[axis] = (offset, total - offset - size)
        part = tape.record("pad", [tensor], dict(pad_width=tuple(pad_width)))
        out = part if out is None else tape.record("add", [out, part])
        offset += size
    return out
