# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""KDEF directory trees.

Stems are seven or eight characters: session letter, gender letter, two
digit subject number, two letter emotion code and a one or two letter
camera angle code (``S`` is straight-on).
"""

import logging
import os
import re
from collections import namedtuple

import numpy as np
from PIL import Image as PILImage
from PIL import UnidentifiedImageError

from ferkit import config
from ferkit.datasets.api import KDEF_LABELS, DatasetSplit, Sample
from ferkit.datasets.errors import UnreadableImageError
from ferkit.filters import Image
from ferkit.utils import log_event

logger = logging.getLogger("ferkit.datasets")

KDEF_EMOTIONS = {
    "AF": "fear",
    "AN": "anger",
    "DI": "disgust",
    "HA": "happiness",
    "NE": "neutral",
    "SA": "sadness",
    "SU": "surprise",
}

KDEF_ANGLES = ("S", "HL", "HR", "FL", "FR")
STRAIGHT = "S"
ANGLE_MODES = ("straight", "all")

STEM_PATTERN = re.compile(
    r"^(?P<session>[AB])(?P<subject>[FM]\d{2})(?P<emotion>[A-Z]{2})"
    r"(?P<angle>[A-Z]{1,2})$"
)

KdefStem = namedtuple("KdefStem", ["session", "subject", "emotion", "angle"])


def decode_stem(stem):
    """Decode a KDEF file stem, or return ``None`` when it does not parse.

    >>> decode_stem("AF01ANS")
    KdefStem(session='A', subject='F01', emotion='anger', angle='S')
    >>> decode_stem("README") is None
    True
    """
    match = STEM_PATTERN.match(stem.upper())
    if not match:
        return None
    emotion = KDEF_EMOTIONS.get(match.group("emotion"))
    angle = match.group("angle")
    if emotion is None or angle not in KDEF_ANGLES:
        return None
    return KdefStem(
        match.group("session"), match.group("subject"), emotion, angle
    )


def read_gray(path, size):
    """Decode ``path`` as an 8-bit grayscale ``size`` x ``size`` image."""
    try:
        with PILImage.open(path) as handle:
            gray = handle.convert("L")
            if gray.size != (size, size):
                gray = gray.resize((size, size), PILImage.BILINEAR)
            data = np.asarray(gray, dtype=np.float64)
    except (OSError, UnidentifiedImageError) as exc:
        raise UnreadableImageError(
            message="Cannot decode {0}: {1}".format(path, exc)
        )
    return Image(data, value_range="raw")


def _walk(root):
    for directory, subdirs, files in os.walk(root):
        subdirs.sort()
        for filename in sorted(files):
            yield os.path.join(directory, filename)


def subject_split(subjects, seed, fractions=None):
    """Seeded assignment of subjects to train, validation and test.

    >>> sorted(map(len, subject_split(["s%d" % i for i in range(10)], 0)))
    [1, 1, 8]
    """
    train_fraction, validation_fraction, _ = (
        fractions or config.FERKIT_KDEF_SPLIT
    )
    ordered = sorted(subjects)
    order = np.random.default_rng(seed).permutation(len(ordered))
    shuffled = [ordered[index] for index in order]
    n_train = int(round(train_fraction * len(shuffled)))
    n_validation = int(round(validation_fraction * len(shuffled)))
    return (
        set(shuffled[:n_train]),
        set(shuffled[n_train:n_train + n_validation]),
        set(shuffled[n_train + n_validation:]),
    )


def load_kdef(root, angles=None, seed=0, size=None):
    """Load a KDEF tree into a subject-disjoint split.

    Files whose stem does not decode are skipped and counted; an empty tree
    yields an empty split.
    """
    angles = angles or config.FERKIT_KDEF_ANGLES
    if angles not in ANGLE_MODES:
        raise ValueError("Unknown KDEF angle mode {0}".format(angles))
    size = size or config.FERKIT_INPUT_SIZE
    extensions = tuple(config.FERKIT_KDEF_EXTENSIONS)

    warnings = dict(unparseable_names=0)
    decoded = []
    for path in _walk(root):
        stem, extension = os.path.splitext(os.path.basename(path))
        if extension.lower() not in extensions:
            continue
        parts = decode_stem(stem)
        if parts is None:
            warnings["unparseable_names"] += 1
            continue
        if angles == "straight" and parts.angle != STRAIGHT:
            continue
        decoded.append((path, stem.upper(), parts))

    train, validation, _ = subject_split(
        {parts.subject for _, _, parts in decoded}, seed
    )
    split = DatasetSplit(
        labels=KDEF_LABELS,
        provenance="KDEF {0} views ({1}), subject split seed {2}".format(
            angles, root, seed
        ),
        warnings=warnings,
    )
    for path, stem, parts in decoded:
        if parts.subject in train:
            target = split.train
        elif parts.subject in validation:
            target = split.validation
        else:
            target = split.test
        target.append(Sample(
            image=read_gray(path, size),
            label=KDEF_LABELS.index(parts.emotion),
            source_id=stem,
        ))

    log_event(logger, "load_kdef", extra=dict(
        root=str(root), angles=angles, train=len(split.train),
        validation=len(split.validation), test=len(split.test), **warnings
    ))
    if warnings["unparseable_names"]:
        logger.warning(
            "Skipped %d KDEF files with unparseable names",
            warnings["unparseable_names"],
        )
    return split


def subject_of(sample):
    """Subject id of a KDEF sample, for disjointness checks."""
    return decode_stem(sample.source_id).subject
