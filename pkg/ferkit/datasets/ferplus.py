# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""FERplus crowd votes and majority-vote labelling."""

import logging
from dataclasses import dataclass
from typing import Tuple

import pandas as pd

from ferkit.datasets.api import FERPLUS_LABELS, DatasetSplit, Sample
from ferkit.datasets.errors import HeaderError, RowCountMismatch, \
    VoteParseError
from ferkit.datasets.fer2013 import parse_pixels, read_pixels_csv
from ferkit.utils import log_event

logger = logging.getLogger("ferkit.datasets")

VOTE_COLUMNS = FERPLUS_LABELS + ("unknown", "NF")
"""The ten vote columns; the last two are reject categories."""

VOTES_HEADER = ("usage", "Image name") + VOTE_COLUMNS

USAGE_SPLITS = {
    "Training": "train",
    "PublicTest": "validation",
    "PrivateTest": "test",
}

TAGGERS = 10
REJECT = -1
"""Label value of images whose vote is won (or tied) by a reject class."""


@dataclass(frozen=True)
class VoteRecord(object):
    """Per-image tally over the ten vote columns."""

    image_id: str
    usage: str
    votes: Tuple[int, ...]

    @property
    def well_formed(self):
        """Whether all ten taggers voted."""
        return sum(self.votes) == TAGGERS


def majority_vote(record):
    """Winning emotion index, or ``REJECT``.

    Ties among emotions go to the lowest column; a maximum reached by a
    reject column rejects the image.

    >>> majority_vote(VoteRecord("x", "Training", (8, 1, 1, 0, 0, 0, 0, 0,
    ...                                              0, 0)))
    0
    """
    votes = record.votes if isinstance(record, VoteRecord) else record
    top = max(votes)
    emotions = len(FERPLUS_LABELS)
    if any(votes[index] == top for index in range(emotions, len(votes))):
        return REJECT
    return list(votes[:emotions]).index(top)


def _check_header(path, columns):
    normalized = tuple(column.strip().lower() for column in columns)
    if normalized != tuple(column.lower() for column in VOTES_HEADER):
        raise HeaderError(path, VOTES_HEADER, columns)


def read_votes(path):
    """Parse a FERplus votes csv into :class:`VoteRecord` objects."""
    frame = pd.read_csv(path, dtype=str, keep_default_na=False)
    _check_header(path, frame.columns)
    usage_column, name_column = frame.columns[0], frame.columns[1]
    cells = frame[list(frame.columns[2:])]
    votes = cells.apply(pd.to_numeric, errors="coerce")
    bad = votes.isna() | (votes < 0) | (votes % 1 != 0)
    if bad.values.any():
        row, col = [int(axis[0]) for axis in bad.values.nonzero()]
        raise VoteParseError(
            row + 1, VOTE_COLUMNS[col], cells.iat[row, col]
        )
    votes = votes.astype(int)
    return [
        VoteRecord(
            image_id=name or "row-{0}".format(index),
            usage=usage.strip(),
            votes=tuple(int(value) for value in tally),
        )
        for index, (usage, name, tally) in enumerate(zip(
            frame[usage_column], frame[name_column], votes.values
        ))
    ]


def load_ferplus(pixels_csv, votes_csv):
    """Join FER2013 pixels with FERplus votes, row by row.

    Rejected images are dropped and counted, so the number of input rows
    always equals samples plus rejections plus skipped rows.
    """
    pixels = read_pixels_csv(pixels_csv)
    records = read_votes(votes_csv)
    if len(pixels) != len(records):
        raise RowCountMismatch(
            message="{0} has {1} rows but {2} has {3}".format(
                pixels_csv, len(pixels), votes_csv, len(records)
            )
        )

    split = DatasetSplit(
        labels=FERPLUS_LABELS,
        provenance="FERplus majority vote ({0}, {1})".format(
            pixels_csv, votes_csv
        ),
        warnings=dict(ill_formed_votes=0, unknown_usage=0),
    )
    for row, (field, record) in enumerate(zip(pixels["pixels"], records)):
        if not record.well_formed:
            split.warnings["ill_formed_votes"] += 1
        target = USAGE_SPLITS.get(record.usage)
        if target is None:
            split.warnings["unknown_usage"] += 1
            continue
        label = majority_vote(record)
        if label == REJECT:
            split.rejected += 1
            continue
        split.part(target).append(Sample(
            image=parse_pixels(field, row=row + 1),
            label=label,
            source_id=record.image_id,
        ))

    log_event(logger, "load_ferplus", extra=dict(
        rows=len(records),
        rejected=split.rejected,
        **{name: len(split.part(name)) for name in USAGE_SPLITS.values()},
        **split.warnings,
    ))
    if any(split.warnings.values()):
        logger.warning(
            "FERplus ingestion warnings: %s", split.warnings
        )
    return split
