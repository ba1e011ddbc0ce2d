# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Checkpoint serialization tests."""

import json
import os

import numpy as np
import pytest

from ferkit.autograd import Tape
from ferkit.models import build, deserialize, load_checkpoint, mini_spec, \
    save_checkpoint, serialize
from ferkit.models.errors import FormatVersionError, IntegrityError


@pytest.fixture()
def trained_model(rng):
    """Parallel mini model after one training-mode pass."""
    spec = mini_spec("laplacian-parallel", stl=True)
    model = build(spec, 3)
    inputs = [rng.uniform(size=(4,) + shape).astype(np.float32)
              for _, shape in spec.stream_shapes()]
    model.forward(Tape(), inputs, training=True)
    return model, inputs


def test_round_trip_predicts_identically(trained_model, tmp_path):
    """A reloaded model gives bit-identical logits."""
    model, inputs = trained_model
    save_checkpoint(model, str(tmp_path))
    loaded = load_checkpoint(str(tmp_path))
    expected = model.forward(Tape(enabled=False), inputs, training=False)
    actual = loaded.forward(Tape(enabled=False), inputs, training=False)
    np.testing.assert_array_equal(actual.data, expected.data)
    assert loaded.spec == model.spec


def test_manifest_content(trained_model):
    """The manifest records ledger totals and every tensor."""
    model, _ = trained_model
    blob, manifest = serialize(model)
    assert manifest["format_version"] == 1
    assert manifest["byte_length"] == len(blob)
    assert manifest["dtype"] == "float32"
    names = [entry["name"] for entry in manifest["tensors"]]
    assert any(name.endswith(".running_mean") for name in names)
    assert manifest["ledger_total"] == sum(
        t.size for t in model.ledgered_tensors()
    )


def test_checkpoint_files(trained_model, tmp_path):
    """Blob and pretty-printed manifest are written side by side."""
    model, _ = trained_model
    save_checkpoint(model, str(tmp_path))
    assert sorted(os.listdir(str(tmp_path))) == ["model.bin", "model.json"]
    with open(os.path.join(str(tmp_path), "model.json")) as fp:
        assert json.load(fp)["seed"] == 3


def test_tampered_blob(trained_model):
    """One flipped byte fails the checksum."""
    model, _ = trained_model
    blob, manifest = serialize(model)
    tampered = bytearray(blob)
    tampered[0] ^= 0xFF
    with pytest.raises(IntegrityError):
        deserialize(bytes(tampered), manifest)


def test_truncated_blob(trained_model):
    """A short blob fails before any tensor is read."""
    model, _ = trained_model
    blob, manifest = serialize(model)
    with pytest.raises(IntegrityError):
        deserialize(blob[:-4], manifest)


def test_unknown_format_version(trained_model):
    """Only format version 1 is readable."""
    model, _ = trained_model
    blob, manifest = serialize(model)
    manifest["format_version"] = 2
    with pytest.raises(FormatVersionError):
        deserialize(blob, manifest)


def test_manifest_schema_violation(trained_model):
    """Unexpected manifest keys are refused by the schema."""
    model, _ = trained_model
    blob, manifest = serialize(model)
    manifest["extra"] = True
    with pytest.raises(IntegrityError):
        deserialize(blob, manifest)


def test_untrained_model_round_trip(tmp_path):
    """Models without running statistics still serialize."""
    model = build(mini_spec(), 0)
    save_checkpoint(model, str(tmp_path))
    loaded = load_checkpoint(str(tmp_path))
    for name, array in model.state().items():
        np.testing.assert_array_equal(loaded.state()[name], array)


def test_float64_model_reloads_as_float32(rng, tmp_path):
    """Double-precision weights come back as the float32 values stored."""
    spec = mini_spec()
    model = build(spec, 0, dtype="float64")
    model.forward(Tape(), rng.uniform(size=(4,) + spec.input_shape),
                  training=True)
    manifest = save_checkpoint(model, str(tmp_path))
    assert manifest["dtype"] == "float32"
    loaded = load_checkpoint(str(tmp_path))
    assert all(p.dtype == np.float32 for p in loaded.parameters())
    for name, array in model.state().items():
        np.testing.assert_array_equal(
            loaded.state()[name], array.astype(np.float32)
        )
    assert serialize(loaded)[0] == serialize(model)[0]
