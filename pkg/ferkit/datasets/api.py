# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Samples and dataset splits."""

from collections import Counter
from dataclasses import dataclass, field, replace
from typing import Any, Dict, List

FERPLUS_LABELS = (
    "neutral", "happiness", "surprise", "sadness", "anger", "disgust",
    "fear", "contempt",
)
"""FERplus emotion classes in vote-column order."""

KDEF_LABELS = (
    "neutral", "anger", "disgust", "fear", "happiness", "sadness",
    "surprise",
)

SPLITS = ("train", "validation", "test")


@dataclass(frozen=True)
class Sample(object):
    """One labelled image.

    ``image`` is a raw :class:`~ferkit.filters.Image` until assembled; after
    assembly of a parallel variant it is a tuple of per-stream images.
    """

    image: Any
    label: int
    source_id: str


@dataclass
class DatasetSplit(object):
    """Train, validation and test samples plus ingestion bookkeeping."""

    train: List[Sample] = field(default_factory=list)
    validation: List[Sample] = field(default_factory=list)
    test: List[Sample] = field(default_factory=list)
    labels: tuple = FERPLUS_LABELS
    provenance: str = ""
    rejected: int = 0
    warnings: Dict[str, int] = field(default_factory=dict)

    @property
    def num_classes(self):
        """Number of classes."""
        return len(self.labels)

    def part(self, name):
        """Samples of split ``name``."""
        if name not in SPLITS:
            raise KeyError(name)
        return getattr(self, name)

    def __len__(self):
        """Total number of samples."""
        return sum(len(self.part(name)) for name in SPLITS)

    def class_counts(self, name):
        """Per-class sample counts of split ``name``."""
        counts = Counter(sample.label for sample in self.part(name))
        return [counts.get(label, 0) for label in range(self.num_classes)]

    def counts(self):
        """Per-class counts of every split."""
        return {name: self.class_counts(name) for name in SPLITS}

    def is_disjoint(self, key=None):
        """Whether no source (or ``key(sample)``) spans two splits."""
        key = key or (lambda sample: sample.source_id)
        seen = {}
        for name in SPLITS:
            for sample in self.part(name):
                owner = seen.setdefault(key(sample), name)
                if owner != name:
                    return False
        return True

    def map(self, function):
        """Copy with ``function`` applied to every sample."""
        return replace(
            self, **{
                name: [function(sample) for sample in self.part(name)]
                for name in SPLITS
            }
        )
