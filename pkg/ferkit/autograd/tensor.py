# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Dense tensor value type."""

import itertools

import numpy as np

from ferkit import config
from ferkit.autograd.errors import NonFiniteError

_tensor_ids = itertools.count(1)


def resolve_dtype(dtype=None):
    """Return the numpy dtype to use, falling back to the configured one."""
    return np.dtype(dtype or config.FERKIT_DEFAULT_DTYPE)


class Tensor(object):
    """Dense N-dimensional array with an optional gradient slot.

    The buffer is copied on construction and must not be mutated afterwards
    except by its owner (optimizers, deserializers).
    """

    __slots__ = ("id", "data", "requires_grad", "grad", "name")

    def __init__(self, data, requires_grad=False, dtype=None, name=None):
        """Constructor."""
        if dtype is None and getattr(data, "dtype", None) is not None \
                and np.dtype(data.dtype).kind == "f":
            dtype = data.dtype
        self.id = next(_tensor_ids)
        self.data = np.array(data, dtype=resolve_dtype(dtype), order="C")
        self.requires_grad = bool(requires_grad)
        self.grad = None
        self.name = name

    @classmethod
    def wrap(cls, array, requires_grad=False, name=None):
        """Wrap a freshly computed array without copying it."""
        tensor = cls.__new__(cls)
        tensor.id = next(_tensor_ids)
        tensor.data = np.ascontiguousarray(array) if array.ndim else array
        tensor.requires_grad = requires_grad
        tensor.grad = None
        tensor.name = name
        return tensor

    @property
    def shape(self):
        """Shape as a tuple."""
        return self.data.shape

    @property
    def dtype(self):
        """Element type."""
        return self.data.dtype

    @property
    def size(self):
        """Number of elements."""
        return self.data.size

    @property
    def ndim(self):
        """Number of dimensions."""
        return self.data.ndim

    def numpy(self):
        """Return a copy of the buffer."""
        return self.data.copy()

    def item(self):
        """Return the single value of a one-element tensor."""
        return self.data.item()

    def zero_grad(self):
        """Drop the gradient slot."""
        self.grad = None

    def validate_finite(self, where=""):
        """Raise if the buffer holds NaN or Inf."""
        if not np.all(np.isfinite(self.data)):
            raise NonFiniteError(
                message="Non-finite values in tensor {0} {1}".format(
                    self.name or self.id, where
                ).strip()
            )
        return self

    def __repr__(self):
        """Short representation."""
        return "Tensor(id={0}, shape={1}, dtype={2}, requires_grad={3})" \
            .format(self.id, self.shape, self.dtype, self.requires_grad)
