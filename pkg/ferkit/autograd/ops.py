# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Registry of differentiable operations and the primitive set.

Every operation is a stateless :class:`Op` subclass registered under an
identifier. ``forward`` may stash arrays in ``ctx`` for ``backward``, which
receives the output gradient and a mask of the inputs that need one.
Broadcasting is never implicit: elementwise operands must agree exactly.
"""

import numpy as np

from ferkit.autograd.errors import ShapeMismatchError, UnknownOpError

OPS = {}


def register(name):
    """Register an :class:`Op` subclass under ``name``."""

    def decorator(cls):
        cls.name = name
        OPS[name] = cls()
        return cls

    return decorator


def get_op(name):
    """Return the registered op or raise ``UnknownOpError``."""
    try:
        return OPS[name]
    except KeyError:
        raise UnknownOpError(name)


class Op(object):
    """Differentiable operation."""

    name = None
    arity = 1

    def check(self, arrays, attrs):
        """Validate operand shapes before running ``forward``."""
        if len(arrays) != self.arity:
            raise ShapeMismatchError(
                self.name,
                *[a.shape for a in arrays],
                detail="expected {0} operands".format(self.arity)
            )

    def forward(self, ctx, *arrays, **attrs):
        """Compute the output array."""
        raise NotImplementedError()

    def backward(self, ctx, grad, needs, **attrs):
        """Return one gradient (or None) per input."""
        raise NotImplementedError()


class ElementwiseBinaryOp(Op):
    """Binary op whose operands must share a shape."""

    arity = 2

    def check(self, arrays, attrs):
        """Refuse implicit broadcasting."""
        super().check(arrays, attrs)
        a, b = arrays
        if a.shape != b.shape:
            raise ShapeMismatchError(self.name, a.shape, b.shape)


@register("add")
class Add(ElementwiseBinaryOp):
    """Elementwise sum."""

    def forward(self, ctx, a, b):
        """a + b."""
        return a + b

    def backward(self, ctx, grad, needs):
        """Pass the gradient to both operands."""
        return grad, grad


@register("sub")
class Sub(ElementwiseBinaryOp):
    """Elementwise difference."""

    def forward(self, ctx, a, b):
        """a - b."""
        return a - b

    def backward(self, ctx, grad, needs):
        """Negate the gradient of the subtrahend."""
        return grad, -grad if needs[1] else None


@register("mul")
class Mul(ElementwiseBinaryOp):
    """Elementwise product."""

    def forward(self, ctx, a, b):
        """a * b."""
        ctx["a"], ctx["b"] = a, b
        return a * b

    def backward(self, ctx, grad, needs):
        """Product rule."""
        return (
            grad * ctx["b"] if needs[0] else None,
            grad * ctx["a"] if needs[1] else None,
        )


@register("matmul")
class MatMul(Op):
    """Matrix product of two 2-D operands."""

    arity = 2

    def check(self, arrays, attrs):
        """Inner dimensions must agree."""
        super().check(arrays, attrs)
        a, b = arrays
        if a.ndim != 2 or b.ndim != 2 or a.shape[1] != b.shape[0]:
            raise ShapeMismatchError(self.name, a.shape, b.shape)

    def forward(self, ctx, a, b):
        """a @ b."""
        ctx["a"], ctx["b"] = a, b
        return a @ b

    def backward(self, ctx, grad, needs):
        """Return (g b^T, a^T g)."""
        return (
            grad @ ctx["b"].T if needs[0] else None,
            ctx["a"].T @ grad if needs[1] else None,
        )


@register("reshape")
class Reshape(Op):
    """View the buffer under a new shape."""

    def check(self, arrays, attrs):
        """Element counts must agree."""
        super().check(arrays, attrs)
        shape = tuple(attrs["shape"])
        if int(np.prod(shape)) != arrays[0].size:
            raise ShapeMismatchError(self.name, arrays[0].shape, shape)

    def forward(self, ctx, a, shape):
        """Reshape."""
        ctx["shape"] = a.shape
        return a.reshape(shape)

    def backward(self, ctx, grad, needs, shape):
        """Reshape back."""
        return (grad.reshape(ctx["shape"]),)


@register("transpose")
class Transpose(Op):
    """Permute axes."""

    def check(self, arrays, attrs):
        """Axes must be a permutation of the operand's dimensions."""
        super().check(arrays, attrs)
        axes = attrs.get("axes")
        if axes is not None and \
                sorted(axes) != list(range(arrays[0].ndim)):
            raise ShapeMismatchError(
                self.name, arrays[0].shape, detail="axes {0}".format(axes)
            )

    def forward(self, ctx, a, axes=None):
        """Transpose."""
        return np.transpose(a, axes)

    def backward(self, ctx, grad, needs, axes=None):
        """Apply the inverse permutation."""
        if axes is None:
            return (np.transpose(grad),)
        return (np.transpose(grad, np.argsort(axes)),)


@register("pad")
class Pad(Op):
    """Zero padding."""

    def check(self, arrays, attrs):
        """One (before, after) pair per dimension."""
        super().check(arrays, attrs)
        pad_width = attrs["pad_width"]
        if len(pad_width) != arrays[0].ndim or \
                any(lo < 0 or hi < 0 for lo, hi in pad_width):
            raise ShapeMismatchError(
                self.name, arrays[0].shape,
                detail="pad_width {0}".format(pad_width)
            )

    def forward(self, ctx, a, pad_width):
        """Pad with zeros."""
        return np.pad(a, pad_width, mode="constant")

    def backward(self, ctx, grad, needs, pad_width):
        """Crop the padding away."""
        key = tuple(
            slice(lo, grad.shape[axis] - hi)
            for axis, (lo, hi) in enumerate(pad_width)
        )
        return (grad[key],)


@register("slice")
class Slice(Op):
    """Basic (start, stop, step) slicing."""

    def check(self, arrays, attrs):
        """One slice per leading dimension at most."""
        super().check(arrays, attrs)
        key = attrs["key"]
        if len(key) > arrays[0].ndim or \
                not all(isinstance(k, slice) for k in key):
            raise ShapeMismatchError(
                self.name, arrays[0].shape, detail="key {0}".format(key)
            )

    def forward(self, ctx, a, key):
        """Take the slice."""
        ctx["shape"], ctx["dtype"] = a.shape, a.dtype
        return a[tuple(key)].copy()

    def backward(self, ctx, grad, needs, key):
        """Scatter into a zero buffer."""
        out = np.zeros(ctx["shape"], dtype=ctx["dtype"])
        out[tuple(key)] = grad
        return (out,)


@register("relu")
class Relu(Op):
    """max(x, 0)."""

    def forward(self, ctx, a):
        """Clamp below at zero."""
        ctx["mask"] = a > 0
        return np.where(ctx["mask"], a, 0).astype(a.dtype)

    def backward(self, ctx, grad, needs):
        """Gate by the positive mask."""
        return (grad * ctx["mask"],)


@register("relu6")
class Relu6(Op):
    """min(max(x, 0), 6)."""

    def forward(self, ctx, a):
        """Clamp into [0, 6]."""
        ctx["mask"] = (a > 0) & (a < 6)
        return np.clip(a, 0, 6).astype(a.dtype)

    def backward(self, ctx, grad, needs):
        """Gate by the unclamped mask."""
        return (grad * ctx["mask"],)


@register("exp")
class Exp(Op):
    """Elementwise exponential."""

    def forward(self, ctx, a):
        """e^a."""
        ctx["out"] = np.exp(a)
        return ctx["out"]

    def backward(self, ctx, grad, needs):
        """g e^a."""
        return (grad * ctx["out"],)


@register("log")
class Log(Op):
    """Elementwise natural logarithm."""

    def forward(self, ctx, a):
        """ln a."""
        ctx["a"] = a
        return np.log(a)

    def backward(self, ctx, grad, needs):
        """g / a."""
        return (grad / ctx["a"],)


class Reduction(Op):
    """Reduction over ``axis`` (None for all axes)."""

    def check(self, arrays, attrs):
        """Axes must exist."""
        super().check(arrays, attrs)
        ndim = arrays[0].ndim
        for axis in _axes(attrs.get("axis"), ndim):
            if not -ndim <= axis < ndim:
                raise ShapeMismatchError(
                    self.name, arrays[0].shape,
                    detail="axis {0}".format(attrs.get("axis"))
                )

    @staticmethod
    def expand(grad, shape, axis, keepdims):
        """Broadcast a reduced gradient back to the operand shape."""
        if not keepdims and axis is not None:
            for ax in sorted(a % len(shape) for a in _axes(axis, len(shape))):
                grad = np.expand_dims(grad, ax)
        return np.broadcast_to(grad, shape)


def _axes(axis, ndim):
    if axis is None:
        return tuple(range(ndim))
    if isinstance(axis, int):
        return (axis,)
    return tuple(axis)


@register("sum")
class Sum(Reduction):
    """Sum reduction."""

    def forward(self, ctx, a, axis=None, keepdims=False):
        """Sum."""
        ctx["shape"] = a.shape
        return np.asarray(np.sum(a, axis=_tuple(axis), keepdims=keepdims))

    def backward(self, ctx, grad, needs, axis=None, keepdims=False):
        """Broadcast the gradient back."""
        return (self.expand(grad, ctx["shape"], axis, keepdims).copy(),)


@register("mean")
class Mean(Reduction):
    """Mean reduction."""

    def forward(self, ctx, a, axis=None, keepdims=False):
        """Mean."""
        ctx["shape"] = a.shape
        axes = _axes(axis, a.ndim)
        ctx["count"] = int(np.prod([a.shape[ax] for ax in axes]))
        return np.asarray(np.mean(a, axis=_tuple(axis), keepdims=keepdims))

    def backward(self, ctx, grad, needs, axis=None, keepdims=False):
        """Spread the gradient evenly."""
        full = self.expand(grad, ctx["shape"], axis, keepdims)
        return (full / ctx["count"],)


@register("max")
class Max(Reduction):
    """Max reduction; ties share the gradient evenly."""

    def forward(self, ctx, a, axis=None, keepdims=False):
        """Max."""
        out = np.max(a, axis=_tuple(axis), keepdims=True)
        mask = (a == out).astype(a.dtype)
        ctx["mask"] = mask / mask.sum(axis=_tuple(axis), keepdims=True)
        if not keepdims:
            out = np.max(a, axis=_tuple(axis), keepdims=False)
        return np.asarray(out)

    def backward(self, ctx, grad, needs, axis=None, keepdims=False):
        """Route the gradient to the maxima."""
        mask = ctx["mask"]
        return (self.expand(grad, mask.shape, axis, keepdims) * mask,)


def _tuple(axis):
    return tuple(axis) if isinstance(axis, (list, tuple)) else axis


@register("broadcast")
class Broadcast(Op):
    """Explicit numpy-style broadcast to ``shape``."""

    def check(self, arrays, attrs):
        """The target shape must be reachable by broadcasting."""
        super().check(arrays, attrs)
        shape = tuple(attrs["shape"])
        try:
            if np.broadcast_shapes(arrays[0].shape, shape) != shape:
                raise ValueError()
        except ValueError:
            raise ShapeMismatchError(self.name, arrays[0].shape, shape)

    def forward(self, ctx, a, shape):
        """Materialize the broadcast."""
        ctx["shape"] = a.shape
        return np.broadcast_to(a, tuple(shape)).copy()

    def backward(self, ctx, grad, needs, shape):
        """Sum over broadcast axes."""
        in_shape = ctx["shape"]
        lead = grad.ndim - len(in_shape)
        grad = grad.sum(axis=tuple(range(lead))) if lead else grad
        axes = tuple(
            ax for ax, size in enumerate(in_shape)
            if size == 1 and grad.shape[ax] != 1
        )
        if axes:
            grad = grad.sum(axis=axes, keepdims=True)
        return (grad.reshape(in_shape),)


PRIMITIVES = (
    "add", "sub", "mul", "matmul", "reshape", "transpose", "pad", "slice",
    "relu", "relu6", "exp", "log", "sum", "mean", "max", "broadcast",
)
"""The primitive op kinds; composite kernels register themselves later."""
