# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Dataset ingestion, variant assembly and batching."""

from .api import FERPLUS_LABELS, KDEF_LABELS, SPLITS, DatasetSplit, Sample
from .batching import shuffle_batches, stack_samples, write_arrays
from .fer2013 import parse_pixels, read_pixels_csv
from .ferplus import REJECT, VoteRecord, load_ferplus, majority_vote, \
    read_votes
from .kdef import decode_stem, load_kdef, subject_of
from .synthetic import make_synthetic
from .variants import assemble_split, assemble_variant, input_channels, \
    variant_streams

__all__ = (
    "DatasetSplit",
    "FERPLUS_LABELS",
    "KDEF_LABELS",
    "REJECT",
    "SPLITS",
    "Sample",
    "VoteRecord",
    "assemble_split",
    "assemble_variant",
    "decode_stem",
    "input_channels",
    "load_ferplus",
    "load_kdef",
    "majority_vote",
    "make_synthetic",
    "parse_pixels",
    "read_pixels_csv",
    "read_votes",
    "shuffle_batches",
    "stack_samples",
    "subject_of",
    "variant_streams",
    "write_arrays",
)
