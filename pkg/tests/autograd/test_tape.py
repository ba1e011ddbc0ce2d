# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Tape recording and reverse-mode differentiation tests."""

import numpy as np
import pytest

from ferkit.autograd import Tape, Tensor
from ferkit.autograd.errors import NotOnTapeError, NotScalarError, \
    ShapeMismatchError, UnknownOpError


def test_add_then_sum_gradients_are_ones():
    """d/da sum(a + b) is all ones for both operands."""
    a = Tensor(np.arange(6.0).reshape(2, 3), requires_grad=True)
    b = Tensor(np.ones((2, 3)), requires_grad=True)
    tape = Tape()
    loss = tape.record("sum", [tape.record("add", [a, b])])
    tape.backward(loss)
    np.testing.assert_array_equal(a.grad, np.ones((2, 3)))
    np.testing.assert_array_equal(b.grad, np.ones((2, 3)))


def test_fan_out_accumulates():
    """A tensor used twice receives the sum of both contributions."""
    x = Tensor(np.array([1.0, 2.0, 3.0]), requires_grad=True)
    tape = Tape()
    loss = tape.record("sum", [tape.record("mul", [x, x])])
    tape.backward(loss)
    np.testing.assert_allclose(x.grad, [2.0, 4.0, 6.0])


def test_matmul_gradient():
    """Gradient of sum(A @ B) w.r.t. A is ones @ B^T."""
    a = Tensor(np.arange(6.0).reshape(2, 3), requires_grad=True)
    b = Tensor(np.arange(12.0).reshape(3, 4), requires_grad=True)
    tape = Tape()
    tape.backward(tape.record("sum", [tape.record("matmul", [a, b])]))
    np.testing.assert_allclose(a.grad, np.ones((2, 4)) @ b.data.T)
    np.testing.assert_allclose(b.grad, a.data.T @ np.ones((2, 4)))


def test_constants_are_not_recorded():
    """Ops over tensors that need no gradient leave the tape empty."""
    tape = Tape()
    tape.record("add", [Tensor(np.ones(3)), Tensor(np.ones(3))])
    assert len(tape) == 0


def test_disabled_tape_evaluates_without_recording():
    """Inference tapes compute values but keep no nodes."""
    x = Tensor(np.array([-1.0, 2.0]), requires_grad=True)
    tape = Tape(enabled=False)
    out = tape.record("relu", [x])
    np.testing.assert_array_equal(out.data, [0.0, 2.0])
    assert len(tape) == 0
    assert not out.requires_grad


def test_leaf_without_path_gets_zero_gradient():
    """A recorded leaf that does not reach the loss gets zeros."""
    x = Tensor(np.ones(2), requires_grad=True)
    unused = Tensor(np.ones(2), requires_grad=True)
    tape = Tape()
    tape.record("mul", [unused, unused])
    loss = tape.record("sum", [x])
    grads = tape.backward(loss)
    np.testing.assert_array_equal(unused.grad, np.zeros(2))
    assert set(grads) == {x.id, unused.id}


def test_backward_clears_tape_unless_retained():
    """The tape is emptied after backward by default."""
    x = Tensor(np.ones(2), requires_grad=True)
    tape = Tape()
    tape.backward(tape.record("sum", [x]), retain=True)
    assert len(tape) == 1
    tape.backward(tape.record("sum", [x]))
    assert len(tape) == 0


def test_non_scalar_loss_is_rejected():
    """backward() on a vector raises NotScalarError."""
    x = Tensor(np.ones(3), requires_grad=True)
    tape = Tape()
    with pytest.raises(NotScalarError):
        tape.backward(tape.record("relu", [x]))


def test_foreign_loss_is_rejected():
    """A tensor the tape did not produce raises NotOnTapeError."""
    with pytest.raises(NotOnTapeError):
        Tape().backward(Tensor(np.array(1.0), requires_grad=True))


def test_unknown_op():
    """Unregistered kinds raise UnknownOpError."""
    with pytest.raises(UnknownOpError) as excinfo:
        Tape().record("conv5d", [Tensor(np.ones(2))])
    assert "conv5d" in str(excinfo.value)


@pytest.mark.parametrize("kind,shapes", [
    ("add", [(2, 3), (3, 2)]),
    ("matmul", [(2, 3), (2, 3)]),
    ("sum", [(2, 3)]),
])
def test_shape_mismatch(kind, shapes):
    """Incompatible operands raise before evaluation."""
    tensors = [Tensor(np.ones(shape)) for shape in shapes]
    attrs = dict(axis=5) if kind == "sum" else None
    with pytest.raises(ShapeMismatchError):
        Tape().record(kind, tensors, attrs)


def test_context_manager_clears():
    """Leaving the ``with`` block forgets every node."""
    x = Tensor(np.ones(2), requires_grad=True)
    with Tape() as tape:
        tape.record("exp", [x])
        assert len(tape) == 1
    assert len(tape) == 0
