# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Tensor value type tests."""

import numpy as np
import pytest

from ferkit.autograd import Tensor
from ferkit.autograd.errors import NonFiniteError


def test_tensor_copies_its_buffer():
    """Later changes to the source array do not leak in."""
    data = np.zeros(3)
    tensor = Tensor(data)
    data[0] = 5.0
    assert tensor.data[0] == 0.0


def test_default_dtype_and_override():
    """Integer input gets the configured float dtype."""
    assert Tensor([1, 2]).dtype == np.float32
    assert Tensor([1, 2], dtype="float64").dtype == np.float64
    assert Tensor(np.ones(2, dtype=np.float64)).dtype == np.float64


def test_ids_are_unique():
    """Every tensor has its own id."""
    assert Tensor(1.0).id != Tensor(1.0).id


def test_validate_finite():
    """NaN and Inf are reported with the tensor name."""
    Tensor([1.0, 2.0]).validate_finite()
    with pytest.raises(NonFiniteError) as excinfo:
        Tensor([1.0, np.nan], name="logits").validate_finite("after dense")
    assert "logits" in str(excinfo.value)


def test_shape_properties():
    """Shape, size and ndim follow the buffer."""
    tensor = Tensor(np.ones((2, 3, 4)))
    assert tensor.shape == (2, 3, 4)
    assert tensor.size == 24
    assert tensor.ndim == 3
    assert Tensor(np.array([7.0])).item() == 7.0
