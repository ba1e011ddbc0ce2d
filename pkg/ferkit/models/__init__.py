# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Architecture specs, model builder, parameter ledger and fusion."""

from .builder import Backbone, Model, build, build_backbone
from .fusion import FusedModel, fuse_parallel, head_layer
from .ledger import BASE_LEDGER_EXPECTED, BASE_LEDGER_TOTAL, ParamLedger, \
    audit, check_ledger, count_params, depsep_count, \
    depsep_reduction_ratio, ledger_ratio
from .serializers import deserialize, load_checkpoint, save_checkpoint, \
    serialize
from .specs import ARCHITECTURES, STREAM_CHANNELS, VARIANTS, ArchSpec, \
    LayerSpec, base_spec, get_spec, mini_spec, vgg13_spec, with_classes

__all__ = (
    "ARCHITECTURES",
    "ArchSpec",
    "BASE_LEDGER_EXPECTED",
    "BASE_LEDGER_TOTAL",
    "Backbone",
    "FusedModel",
    "LayerSpec",
    "Model",
    "ParamLedger",
    "STREAM_CHANNELS",
    "VARIANTS",
    "audit",
    "base_spec",
    "build",
    "build_backbone",
    "check_ledger",
    "count_params",
    "depsep_count",
    "depsep_reduction_ratio",
    "deserialize",
    "fuse_parallel",
    "get_spec",
    "head_layer",
    "ledger_ratio",
    "load_checkpoint",
    "mini_spec",
    "save_checkpoint",
    "serialize",
    "vgg13_spec",
    "with_classes",
)
