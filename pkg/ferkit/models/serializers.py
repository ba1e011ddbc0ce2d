# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Weight blob and manifest serialization.

The blob is every tensor of ``model.state()`` as little-endian float32,
concatenated in layer order, so every checkpoint reloads as a float32
model. The manifest is a json document validated
against ``jsonschemas/checkpoint-v1.0.0.json``.
"""

import hashlib
import json
import os

import numpy as np
import pkg_resources
from jsonschema import validate
from jsonschema.exceptions import ValidationError

from ferkit import config
from ferkit.models.builder import build
from ferkit.models.errors import FormatVersionError, IntegrityError
from ferkit.models.ledger import count_params
from ferkit.models.specs import ArchSpec

FORMAT_VERSION = 1
BLOB_DTYPE = np.dtype("<f4")
MANIFEST_SCHEMA = "jsonschemas/checkpoint-v1.0.0.json"


def manifest_schema():
    """Load the manifest json schema shipped with the package."""
    return json.loads(
        pkg_resources.resource_stream("ferkit.models", MANIFEST_SCHEMA)
        .read()
        .decode("utf8")
    )


def _checksum(blob):
    return "sha256:{0}".format(hashlib.sha256(blob).hexdigest())


def _validate(manifest):
    try:
        validate(manifest, manifest_schema())
    except ValidationError as exc:
        raise IntegrityError(
            message="Malformed manifest: {0}".format(exc.message)
        )


def serialize(model):
    """Return ``(blob, manifest)`` for a built model."""
    entries, chunks, offset = [], [], 0
    for name, array in model.state().items():
        data = np.ascontiguousarray(array, dtype=BLOB_DTYPE)
        entries.append(dict(name=name, shape=list(array.shape),
                            offset=offset))
        chunks.append(data.tobytes())
        offset += data.nbytes
    blob = b"".join(chunks)
    ledger = count_params(model.spec)
    manifest = dict(
        format_version=FORMAT_VERSION,
        spec=model.spec.to_dict(),
        seed=model.seed,
        dtype=BLOB_DTYPE.name,
        ledger_total=ledger.total,
        auxiliary_total=ledger.auxiliary,
        byte_length=len(blob),
        tensors=entries,
        checksum=_checksum(blob),
    )
    _validate(manifest)
    return blob, manifest


def deserialize(blob, manifest):
    """Rebuild the model described by ``manifest`` and load ``blob``."""
    if manifest.get("format_version") != FORMAT_VERSION:
        raise FormatVersionError(
            message="Unsupported checkpoint format {0}, expected {1}".format(
                manifest.get("format_version"), FORMAT_VERSION
            )
        )
    _validate(manifest)
    if len(blob) != manifest["byte_length"] or \
            _checksum(blob) != manifest["checksum"]:
        raise IntegrityError(
            message="Weight blob does not match the manifest checksum"
        )

    arrays = {}
    for entry in manifest["tensors"]:
        count = int(np.prod(entry["shape"]))
        if entry["offset"] + count * BLOB_DTYPE.itemsize > len(blob):
            raise IntegrityError(
                message="Tensor {0} overruns the blob".format(entry["name"])
            )
        arrays[entry["name"]] = np.frombuffer(
            blob, dtype=BLOB_DTYPE, count=count, offset=entry["offset"]
        ).reshape(entry["shape"])

    spec = ArchSpec.from_dict(manifest["spec"])
    model = build(spec, manifest["seed"] or 0, dtype=manifest["dtype"])
    for name, tensor, _ in model.named_tensors():
        if name not in arrays or arrays[name].shape != tensor.shape:
            raise IntegrityError(
                message="Tensor {0} missing or misshapen in the blob".format(
                    name
                )
            )
    model.load_state(arrays)
    return model


def save_checkpoint(model, directory):
    """Write the blob and manifest files into ``directory``."""
    os.makedirs(directory, exist_ok=True)
    blob, manifest = serialize(model)
    with open(os.path.join(directory, config.FERKIT_CHECKPOINT_BLOB),
              "wb") as fp:
        fp.write(blob)
    with open(os.path.join(directory, config.FERKIT_CHECKPOINT_MANIFEST),
              "w") as fp:
        json.dump(manifest, fp, indent=2, sort_keys=True)
    return manifest


def load_checkpoint(directory):
    """Inverse of :func:`save_checkpoint`."""
    with open(os.path.join(directory, config.FERKIT_CHECKPOINT_BLOB),
              "rb") as fp:
        blob = fp.read()
    with open(os.path.join(directory, config.FERKIT_CHECKPOINT_MANIFEST),
              "r") as fp:
        manifest = json.load(fp)
    return deserialize(blob, manifest)
